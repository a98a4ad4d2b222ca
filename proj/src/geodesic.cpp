/*
 * Copyright (c) 2026, the georev authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "georev/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "georev/ode.hpp"

namespace georev {

Eigen::Vector4d geodesic_rhs(const EquidistantMetric& g, const GeodesicState& s) {
  const double a = g.a(s.w);
  const double b = g.b(s.w);
  if (!(b > 0.0))
    throw std::domain_error("geodesic_rhs: chart degenerate (b <= 0) at w = " +
                            std::to_string(s.w));
  const double ap = g.a_prime(s.w);
  const double bp = g.b_prime(s.w);
  const double w_ddot =
      (-0.5 * ap * s.w_dot * s.w_dot + 0.5 * bp * s.sigma_dot * s.sigma_dot) / a;
  const double sigma_ddot = -(bp / b) * s.w_dot * s.sigma_dot;
  return {s.w_dot, s.sigma_dot, w_ddot, sigma_ddot};
}

GeodesicTrace integrate_geodesic(const EquidistantMetric& g, const GeodesicState& init,
                                 double t_end, double tol) {
  IntegrationOptions opt;
  opt.tol = tol;
  return integrate_geodesic(g, init, t_end, opt);
}

GeodesicTrace integrate_geodesic(const EquidistantMetric& g, const GeodesicState& init,
                                 double t_end, const IntegrationOptions& opt) {
  if (!(t_end > 0.0)) throw std::invalid_argument("integrate_geodesic: t_end must be > 0");
  if (!(opt.tol > 0.0)) throw std::invalid_argument("integrate_geodesic: tol must be > 0");
  if (init.w_dot == 0.0 && init.sigma_dot == 0.0)
    throw std::invalid_argument("integrate_geodesic: zero initial tangent");
  if (!(init.w > g.w_min && init.w < g.w_max))
    throw std::invalid_argument("integrate_geodesic: initial w outside the open domain");

  const double b_max = scan_extrema(g.b, g.w_min, g.w_max).max_value;
  const double guard = opt.pole_guard_fraction * b_max;

  GeodesicTrace trace;
  trace.metric = std::make_shared<const EquidistantMetric>(g);
  trace.t_requested = t_end;
  trace.stop = StopReason::completed;

  const auto rhs = [&g](double, const Eigen::Vector4d& y) {
    return geodesic_rhs(g, GeodesicState::from_vector(y));
  };

  // A domain end with b = 0 is a pole; leaving through it is pole contact
  // even when the step jumps across the thin guard band.
  const bool left_end_pole = g.b(g.w_min) < guard;
  const bool right_end_pole = g.b(g.w_max) < guard;

  const auto observer = [&](double t, const Eigen::Vector4d& y) {
    if (y[0] <= g.w_min || y[0] >= g.w_max) {
      const bool through_pole =
          (y[0] <= g.w_min && left_end_pole) || (y[0] >= g.w_max && right_end_pole);
      trace.stop = through_pole ? StopReason::pole_contact : StopReason::domain_exit;
      return OdeControl::stop;  // boundary sample not recorded
    }
    trace.samples.push_back({t, GeodesicState::from_vector(y)});
    trace.t_reached = t;
    if (g.b(y[0]) < guard) {
      trace.stop = StopReason::pole_contact;
      return OdeControl::stop;
    }
    return OdeControl::keep_going;
  };

  OdeOptions oopt;
  oopt.abs_tol = opt.tol;
  oopt.rel_tol = opt.tol;
  oopt.max_step = opt.max_step;
  oopt.max_steps = opt.max_steps;

  const OdeStats st =
      integrate_dopri5<4>(rhs, init.as_vector(), 0.0, t_end, oopt, observer);

  trace.stats.accepted_steps = st.accepted;
  trace.stats.rejected_steps = st.rejected;
  trace.stats.max_error_estimate = st.max_error_estimate;
  if (!st.stopped_by_observer) {
    if (st.step_underflow)
      trace.stop = StopReason::step_underflow;
    else
      trace.stop = StopReason::completed;
  }
  if (trace.samples.empty())
    throw std::invalid_argument("integrate_geodesic: initial state already invalid");
  return trace;
}

double clairaut_invariant(const EquidistantMetric& g, const GeodesicState& s) {
  const double speed2 = g.a(s.w) * s.w_dot * s.w_dot + g.b(s.w) * s.sigma_dot * s.sigma_dot;
  if (!(speed2 > 0.0)) throw std::domain_error("clairaut_invariant: zero-speed state");
  return g.b(s.w) * s.sigma_dot / std::sqrt(speed2);
}

double clairaut_drift(const GeodesicTrace& trace) {
  const EquidistantMetric& g = *trace.metric;
  const double c0 = clairaut_invariant(g, trace.samples.front().state);
  double drift = 0.0;
  for (const TraceSample& s : trace.samples)
    drift = std::max(drift, std::abs(clairaut_invariant(g, s.state) - c0));
  return drift;
}

double speed_drift(const GeodesicTrace& trace) {
  const EquidistantMetric& g = *trace.metric;
  const auto speed = [&g](const GeodesicState& s) {
    return std::sqrt(g.a(s.w) * s.w_dot * s.w_dot + g.b(s.w) * s.sigma_dot * s.sigma_dot);
  };
  const double s0 = speed(trace.samples.front().state);
  double drift = 0.0;
  for (const TraceSample& s : trace.samples)
    drift = std::max(drift, std::abs(speed(s.state) - s0));
  return drift;
}

namespace {

// Cubic Hermite position along one trace interval; the stored velocities
// make this accurate to O(h^4) against the true solution, far below the
// chord error of the raw polyline.
Eigen::Vector2d hermite_position(const TraceSample& s0, const TraceSample& s1, double t) {
  const double h = s1.t - s0.t;
  const double u = (t - s0.t) / h;
  const double u2 = u * u, u3 = u2 * u;
  const double h00 = 2 * u3 - 3 * u2 + 1;
  const double h10 = u3 - 2 * u2 + u;
  const double h01 = -2 * u3 + 3 * u2;
  const double h11 = u3 - u2;
  const Eigen::Vector2d p0(s0.state.w, s0.state.sigma);
  const Eigen::Vector2d p1(s1.state.w, s1.state.sigma);
  const Eigen::Vector2d v0(s0.state.w_dot, s0.state.sigma_dot);
  const Eigen::Vector2d v1(s1.state.w_dot, s1.state.sigma_dot);
  return h00 * p0 + (h10 * h) * v0 + h01 * p1 + (h11 * h) * v1;
}

struct NearestResult {
  double distance = 0.0;
  bool clamped_at_end = false;  // minimizer pinned to the curve's final point
};

// Distance (in the quadratic form diag(aq, bq) frozen at the query point)
// from `query` to the Hermite-densified curve of `trace`.
NearestResult nearest_on_trace(const Eigen::Vector2d& query, double aq, double bq,
                               const GeodesicTrace& trace, std::size_t& hint) {
  const auto& s = trace.samples;
  const auto dist2_to_sample = [&](std::size_t j) {
    const Eigen::Vector2d d(query[0] - s[j].state.w, query[1] - s[j].state.sigma);
    return aq * d[0] * d[0] + bq * d[1] * d[1];
  };

  // Nearest raw sample, windowed around the previous answer with fallback to
  // a full scan when the window looks unreliable.
  std::size_t best = hint < s.size() ? hint : 0;
  double best_d2 = dist2_to_sample(best);
  const std::size_t window = 64;
  const std::size_t lo = best > window ? best - window : 0;
  const std::size_t hi = std::min(s.size(), best + window + 1);
  for (std::size_t j = lo; j < hi; ++j) {
    const double d2 = dist2_to_sample(j);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = j;
    }
  }
  if (best == lo || best + 1 == hi) {  // window boundary: rescan everything
    for (std::size_t j = 0; j < s.size(); ++j) {
      const double d2 = dist2_to_sample(j);
      if (d2 < best_d2) {
        best_d2 = d2;
        best = j;
      }
    }
  }
  hint = best;

  const auto dist2_at = [&](double t, std::size_t j) {
    const Eigen::Vector2d p = hermite_position(s[j], s[j + 1], t);
    const Eigen::Vector2d d = query - p;
    return aq * d[0] * d[0] + bq * d[1] * d[1];
  };

  // Golden-section refinement over the two intervals adjacent to the best
  // sample.
  constexpr double inv_golden = 0.6180339887498949;
  double global_best = best_d2;
  double best_t = s[best].t;
  for (std::size_t j = (best > 0 ? best - 1 : 0);
       j < std::min(best + 1, s.size() - 1); ++j) {
    double a = s[j].t, b = s[j + 1].t;
    double x1 = b - inv_golden * (b - a);
    double x2 = a + inv_golden * (b - a);
    double f1 = dist2_at(x1, j);
    double f2 = dist2_at(x2, j);
    for (int it = 0; it < 48; ++it) {
      if (f1 < f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - inv_golden * (b - a);
        f1 = dist2_at(x1, j);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + inv_golden * (b - a);
        f2 = dist2_at(x2, j);
      }
    }
    const double tm = 0.5 * (a + b);
    const double fm = dist2_at(tm, j);
    if (fm < global_best) {
      global_best = fm;
      best_t = tm;
    }
  }

  NearestResult out;
  out.distance = std::sqrt(std::max(0.0, global_best));
  const double t_last = s.back().t;
  const double span = t_last - s.front().t;
  out.clamped_at_end = best_t >= t_last - 1e-9 * span;
  return out;
}

// Cumulative curve length of a trace measured with the reference metric
// (chord sums, metric frozen at segment midpoints).  Used only to delimit
// the overlapping swept region, so chord accuracy is ample.
std::vector<double> cumulative_arc(const GeodesicTrace& tr,
                                   const EquidistantMetric& metric) {
  const auto& s = tr.samples;
  std::vector<double> arc(s.size(), 0.0);
  for (std::size_t j = 1; j < s.size(); ++j) {
    const double wm = 0.5 * (s[j - 1].state.w + s[j].state.w);
    const double dw = s[j].state.w - s[j - 1].state.w;
    const double ds = s[j].state.sigma - s[j - 1].state.sigma;
    arc[j] = arc[j - 1] +
             std::sqrt(metric.a(wm) * dw * dw + metric.b(wm) * ds * ds);
  }
  return arc;
}

// One direction of the symmetric deviation: samples of `from` against the
// curve of `to`, measured in `metric`.  Both traces start at the same point,
// so the overlapping swept region is delimited by curve length from the
// start: samples beyond the other trace's reach (minus a small margin that
// absorbs chord-length bookkeeping error) are skipped, as are the rare
// nearest-point hits pinned to the other trace's final sample.
bool directional_deviation(const GeodesicTrace& from, const GeodesicTrace& to,
                           const EquidistantMetric& metric, double to_length,
                           double& dev) {
  const std::vector<double> arc = cumulative_arc(from, metric);
  const double margin = std::min(1e-3, 0.05 * to_length);
  const double reach = to_length - margin;
  std::size_t hint = 0;
  bool any = false;
  for (std::size_t i = 0; i < from.samples.size(); ++i) {
    if (arc[i] > reach) continue;
    const TraceSample& s = from.samples[i];
    const Eigen::Vector2d q(s.state.w, s.state.sigma);
    const double aq = metric.a(s.state.w);
    const double bq = metric.b(s.state.w);
    const NearestResult r = nearest_on_trace(q, aq, bq, to, hint);
    if (r.clamped_at_end) continue;
    any = true;
    dev = std::max(dev, r.distance);
  }
  return any;
}

}  // namespace

double unparametrized_deviation(const GeodesicTrace& t1, const GeodesicTrace& t2) {
  if (t1.samples.size() < 2 || t2.samples.size() < 2)
    throw std::domain_error("unparametrized_deviation: traces too short");
  const EquidistantMetric& g = *t1.metric;
  const double len1 = cumulative_arc(t1, g).back();
  const double len2 = cumulative_arc(t2, g).back();
  double dev = 0.0;
  const bool fwd = directional_deviation(t1, t2, g, len2, dev);
  const bool bwd = directional_deviation(t2, t1, g, len1, dev);
  if (!fwd && !bwd)
    throw std::domain_error("unparametrized_deviation: traces have disjoint ranges");
  return dev;
}

EquivalenceReport verify_geodesic_equivalence(const EquidistantMetric& g,
                                              const MappingParams& mp,
                                              const GeodesicState& init,
                                              double t_end, double tol) {
  const EquidistantMetric gbar = map_metric(g, mp);

  const double speed_bar2 = gbar.a(init.w) * init.w_dot * init.w_dot +
                            gbar.b(init.w) * init.sigma_dot * init.sigma_dot;
  if (!(speed_bar2 > 0.0))
    throw std::domain_error("verify_geodesic_equivalence: initial tangent has zero image speed");
  const double speed_bar = std::sqrt(speed_bar2);
  GeodesicState init_bar = init;
  init_bar.w_dot /= speed_bar;
  init_bar.sigma_dot /= speed_bar;

  const GeodesicTrace tr = integrate_geodesic(g, init, t_end, tol);
  const GeodesicTrace tr_bar = integrate_geodesic(gbar, init_bar, t_end, tol);

  EquivalenceReport rep;
  rep.max_transverse_deviation = unparametrized_deviation(tr, tr_bar);
  rep.clairaut_drift_g = clairaut_drift(tr);
  rep.clairaut_drift_gbar = clairaut_drift(tr_bar);
  rep.deviation_tol = 1e3 * tol;
  rep.drift_tol = 1e2 * tol;
  rep.passed = rep.max_transverse_deviation <= rep.deviation_tol &&
               rep.clairaut_drift_g <= rep.drift_tol &&
               rep.clairaut_drift_gbar <= rep.drift_tol;
  return rep;
}

}  // namespace georev
