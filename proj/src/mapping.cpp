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

#include "georev/mapping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace georev {

double LeviCivitaResidual::max_abs() const {
  return std::max({std::abs(w_ww), std::abs(s_ws), std::abs(w_ss)});
}

namespace {

// Locates a sign change of f = 1 + q b on [lo, hi] by bisection; assumes
// f(lo) and f(hi) have opposite signs.
double locate_crossing(const EquidistantMetric& g, double q, double lo, double hi) {
  double flo = 1.0 + q * g.b(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = 1.0 + q * g.b(mid);
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Verifies that f = 1 + q b keeps one sign across the domain by checking the
// extrema of b; catches tangential zeros that point sampling would miss.
// Throws naming the point where f reaches zero.
void check_denominator(const EquidistantMetric& g, double q) {
  if (q == 0.0) return;
  const FunctionExtrema ext = scan_extrema(g.b, g.w_min, g.w_max, 512, 1e-10);
  const double f_at_bmin = 1.0 + q * ext.min_value;
  const double f_at_bmax = 1.0 + q * ext.max_value;
  if (f_at_bmin > 0.0 && f_at_bmax > 0.0) return;
  if (f_at_bmin < 0.0 && f_at_bmax < 0.0) return;

  // f attains zero where b = -1/q
  double wc;
  if (f_at_bmax == 0.0) {
    wc = ext.max_arg;
  } else if (f_at_bmin == 0.0) {
    wc = ext.min_arg;
  } else {
    // genuine sign change between the two extremal points
    const double w0 = std::min(ext.min_arg, ext.max_arg);
    const double w1 = std::max(ext.min_arg, ext.max_arg);
    wc = locate_crossing(g, q, w0, w1);
  }
  throw std::domain_error("map_metric: 1 + q b(w) vanishes near w = " +
                          std::to_string(wc) + "; q = " + std::to_string(q) +
                          " is inadmissible");
}

}  // namespace

EquidistantMetric map_metric(const EquidistantMetric& g, const MappingParams& mp) {
  if (mp.p == 0.0) throw std::domain_error("map_metric: p must be nonzero");
  check_denominator(g, mp.q);

  const double p = mp.p, q = mp.q;
  EquidistantMetric out;
  out.a = [g, p, q](double w) {
    const double f = 1.0 + q * g.b(w);
    return p * g.a(w) / (f * f);
  };
  // d/dw [p a / f²] = p (a' f - 2 a q b') / f³
  out.a_prime = [g, p, q](double w) {
    const double f = 1.0 + q * g.b(w);
    return p * (g.a_prime(w) * f - 2.0 * g.a(w) * q * g.b_prime(w)) / (f * f * f);
  };
  out.b = [g, p, q](double w) { return p * g.b(w) / (1.0 + q * g.b(w)); };
  // d/dw [p b / f] = p b' / f²
  out.b_prime = [g, p, q](double w) {
    const double f = 1.0 + q * g.b(w);
    return p * g.b_prime(w) / (f * f);
  };
  out.w_min = g.w_min;
  out.w_max = g.w_max;
  out.fiber_dim = g.fiber_dim;
  return out;
}

double psi(const EquidistantMetric& g, double q, double w) {
  const double f = 1.0 + q * g.b(w);
  if (f == 0.0)
    throw std::domain_error("psi: singular, 1 + q b(w) = 0 at w = " + std::to_string(w));
  return -0.5 * std::log(std::abs(f));
}

double psi_prime(const EquidistantMetric& g, double q, double w) {
  const double f = 1.0 + q * g.b(w);
  if (f == 0.0)
    throw std::domain_error("psi_prime: singular, 1 + q b(w) = 0 at w = " +
                            std::to_string(w));
  return -q * g.b_prime(w) / (2.0 * f);
}

QAdmissibility admissible_q_range(const EquidistantMetric& g) {
  const FunctionExtrema ext = scan_extrema(g.b, g.w_min, g.w_max, 2048, 1e-10);
  QAdmissibility adm;
  adm.positive_definite_min = -1.0 / ext.max_value;
  adm.excluded_max = adm.positive_definite_min;
  if (ext.min_value > 0.0) {
    adm.has_minkowski = true;
    adm.minkowski_max = -1.0 / ext.min_value;
    adm.excluded_min = adm.minkowski_max;
  } else {
    adm.has_minkowski = false;
    adm.minkowski_max = -std::numeric_limits<double>::infinity();
    adm.excluded_min = -std::numeric_limits<double>::infinity();
  }
  return adm;
}

bool is_nontrivial(const EquidistantMetric& g, double q, int samples) {
  if (samples < 2) throw std::invalid_argument("is_nontrivial: samples >= 2");
  if (q == 0.0) return false;
  double b_scale = 0.0;
  double bp_max = 0.0;
  const double h = (g.w_max - g.w_min) / (samples - 1);
  for (int i = 0; i < samples; ++i) {
    const double w = (i == samples - 1) ? g.w_max : g.w_min + i * h;
    b_scale = std::max(b_scale, std::abs(g.b(w)));
    bp_max = std::max(bp_max, std::abs(g.b_prime(w)));
  }
  const double threshold =
      1e3 * std::numeric_limits<double>::epsilon() * std::max(1.0, b_scale);
  return bp_max > threshold;
}

ChristoffelSet christoffel(const EquidistantMetric& g, double w) {
  const double a = g.a(w);
  const double b = g.b(w);
  if (b == 0.0)
    throw std::domain_error("christoffel: pole (b = 0) at w = " + std::to_string(w));
  if (a == 0.0)
    throw std::domain_error("christoffel: degenerate metric (a = 0) at w = " +
                            std::to_string(w));
  const double ap = g.a_prime(w);
  const double bp = g.b_prime(w);
  ChristoffelSet c;
  c.w_ww = ap / (2.0 * a);
  c.w_ss = -bp / (2.0 * a);
  c.s_ws = bp / (2.0 * b);
  return c;
}

LeviCivitaResidual verify_levi_civita(const EquidistantMetric& g,
                                      const MappingParams& mp, double w) {
  const EquidistantMetric gbar = map_metric(g, mp);
  const ChristoffelSet c = christoffel(g, w);
  const ChristoffelSet cbar = christoffel(gbar, w);
  const double pp = psi_prime(g, mp.q, w);
  LeviCivitaResidual res;
  res.w_ww = cbar.w_ww - c.w_ww - 2.0 * pp;
  res.s_ws = cbar.s_ws - c.s_ws - pp;
  res.w_ss = cbar.w_ss - c.w_ss;
  return res;
}

}  // namespace georev
