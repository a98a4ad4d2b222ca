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

#include "georev/profile.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "georev/interpolation.hpp"
#include "georev/quadrature.hpp"

namespace georev {

std::string to_string(TopologyClass t) {
  switch (t) {
    case TopologyClass::sphere: return "sphere";
    case TopologyClass::disk_or_plane: return "disk-or-plane";
    case TopologyClass::torus: return "torus";
    case TopologyClass::cylinder: return "cylinder";
    case TopologyClass::other: return "other";
  }
  return "other";
}

void validate_profile(const RevolutionProfile& p, int samples) {
  if (!(p.w_max > p.w_min))
    throw std::domain_error("profile: domain must satisfy w_min < w_max");
  const double h = (p.w_max - p.w_min) / (samples - 1);
  for (int i = 0; i < samples; ++i) {
    const double w = (i == samples - 1) ? p.w_max : p.w_min + i * h;
    const double rp = p.r_prime(w);
    const double zp = p.z_prime(w);
    if (!(rp * rp + zp * zp > 0.0))
      throw std::domain_error("profile degenerate: r'^2 + z'^2 = 0 at w = " +
                              std::to_string(w));
    if (i > 0 && i < samples - 1 && !(p.r(w) > 0.0))
      throw std::domain_error("profile: interior radius must be positive, r(" +
                              std::to_string(w) + ") = " + std::to_string(p.r(w)));
  }
}

EquidistantMetric metric_from_profile(const RevolutionProfile& p, int fiber_dim) {
  if (fiber_dim < 1) throw std::invalid_argument("metric_from_profile: fiber_dim >= 1");
  validate_profile(p);
  EquidistantMetric g;
  g.a = [p](double w) {
    const double rp = p.r_prime(w), zp = p.z_prime(w);
    return rp * rp + zp * zp;
  };
  g.a_prime = [p](double w) {
    return 2.0 * (p.r_prime(w) * p.r_second(w) + p.z_prime(w) * p.z_second(w));
  };
  g.b = [p](double w) {
    const double r = p.r(w);
    return r * r;
  };
  g.b_prime = [p](double w) { return 2.0 * p.r(w) * p.r_prime(w); };
  g.w_min = p.w_min;
  g.w_max = p.w_max;
  g.fiber_dim = fiber_dim;
  return g;
}

namespace {

// Cumulative arc-length table with Newton inversion.  The table stores exact
// (to quadrature tolerance) lengths at grid parameters; param_at refines
// inside the bracketing cell using the analytic speed, so the returned
// parameter is accurate to near machine precision.
struct ArcLengthMap {
  RevolutionProfile base;
  std::vector<double> grid_t;  // parameter grid
  std::vector<double> grid_s;  // arc length at grid_t
  double cell_tol = 1e-14;

  double speed(double t) const {
    const double rp = base.r_prime(t), zp = base.z_prime(t);
    return std::sqrt(rp * rp + zp * zp);
  }

  double length() const { return grid_s.back(); }

  double param_at(double s) const {
    if (s <= 0.0) return grid_t.front();
    if (s >= grid_s.back()) return grid_t.back();
    const auto it = std::upper_bound(grid_s.begin(), grid_s.end(), s);
    std::size_t i = static_cast<std::size_t>(it - grid_s.begin());
    if (i > 0) --i;
    double lo = grid_t[i], hi = grid_t[i + 1];
    const double target = s - grid_s[i];
    const auto spd = [this](double t) { return speed(t); };
    // partial length from grid_t[i] to t
    const auto partial = [&](double t) { return integrate(spd, grid_t[i], t, cell_tol); };
    double t = lo + (hi - lo) * (target / (grid_s[i + 1] - grid_s[i]));
    for (int iter = 0; iter < 60; ++iter) {
      const double f = partial(t) - target;
      const double t_newton =
          std::clamp(t - f / speed(t), grid_t[i], grid_t[i + 1]);
      if (std::abs(f) < 4.0 * cell_tol) return t_newton;
      if (f > 0.0)
        hi = t;
      else
        lo = t;
      double t_next = t_newton;
      if (!(t_next > lo && t_next < hi)) t_next = 0.5 * (lo + hi);
      if (std::abs(t_next - t) < 1e-16 * std::max(1.0, std::abs(t))) return t_next;
      t = t_next;
    }
    return t;
  }
};

}  // namespace

RevolutionProfile arclength_reparameterize(const RevolutionProfile& p, double tol) {
  validate_profile(p);
  auto map = std::make_shared<ArcLengthMap>();
  map->base = p;

  constexpr int cells = 512;
  map->cell_tol = std::max(tol, 1e-15) / cells;
  map->grid_t.resize(cells + 1);
  map->grid_s.resize(cells + 1);
  const double h = (p.w_max - p.w_min) / cells;
  map->grid_t[0] = p.w_min;
  map->grid_s[0] = 0.0;
  const auto spd = [map](double t) { return map->speed(t); };
  for (int i = 1; i <= cells; ++i) {
    map->grid_t[i] = (i == cells) ? p.w_max : p.w_min + i * h;
    const double ds = integrate(spd, map->grid_t[i - 1], map->grid_t[i], map->cell_tol);
    if (!(ds > 0.0))
      throw std::runtime_error("arclength_reparameterize: non-monotonic arc length");
    map->grid_s[i] = map->grid_s[i - 1] + ds;
  }

  RevolutionProfile out;
  out.w_min = 0.0;
  out.w_max = map->length();
  out.kind = p.kind;
  out.r = [map](double s) { return map->base.r(map->param_at(s)); };
  out.z = [map](double s) { return map->base.z(map->param_at(s)); };
  out.r_prime = [map](double s) {
    const double t = map->param_at(s);
    return map->base.r_prime(t) / map->speed(t);
  };
  out.z_prime = [map](double s) {
    const double t = map->param_at(s);
    return map->base.z_prime(t) / map->speed(t);
  };
  // d²r/ds² = r_tt / v² - r_t (r_t r_tt + z_t z_tt) / v⁴  with v = speed
  out.r_second = [map](double s) {
    const double t = map->param_at(s);
    const double rt = map->base.r_prime(t), zt = map->base.z_prime(t);
    const double rtt = map->base.r_second(t), ztt = map->base.z_second(t);
    const double v2 = rt * rt + zt * zt;
    return rtt / v2 - rt * (rt * rtt + zt * ztt) / (v2 * v2);
  };
  out.z_second = [map](double s) {
    const double t = map->param_at(s);
    const double rt = map->base.r_prime(t), zt = map->base.z_prime(t);
    const double rtt = map->base.r_second(t), ztt = map->base.z_second(t);
    const double v2 = rt * rt + zt * zt;
    return ztt / v2 - zt * (rt * rtt + zt * ztt) / (v2 * v2);
  };
  return out;
}

PoleReport pole_smoothness_check(const RevolutionProfile& p, double tol) {
  const auto side = [&](double w) {
    PoleSideReport s;
    s.r_end = p.r(w);
    s.r_prime_end = p.r_prime(w);
    s.z_prime_end = p.z_prime(w);
    s.is_pole = std::abs(s.r_end) <= tol;
    s.smooth = s.is_pole && std::abs(std::abs(s.r_prime_end) - 1.0) <= tol &&
               std::abs(s.z_prime_end) <= tol;
    return s;
  };
  return {side(p.w_min), side(p.w_max)};
}

TopologyClass classify_topology(const RevolutionProfile& p, double tol) {
  const double r1 = p.r(p.w_min);
  const double r2 = p.r(p.w_max);
  const double z1 = p.z(p.w_min);
  const double z2 = p.z(p.w_max);
  if (!std::isfinite(r1) || !std::isfinite(r2) || !std::isfinite(z1) || !std::isfinite(z2))
    return TopologyClass::other;
  const bool pole1 = std::abs(r1) <= tol;
  const bool pole2 = std::abs(r2) <= tol;
  if (pole1 && pole2) return TopologyClass::sphere;
  if (pole1 != pole2) return TopologyClass::disk_or_plane;
  if (std::abs(r1 - r2) <= tol && std::abs(z1 - z2) <= tol) return TopologyClass::torus;
  // r > 0 at both ends and in the interior (profile invariant)
  if (r1 > tol && r2 > tol) return TopologyClass::cylinder;
  return TopologyClass::other;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool parse_double(const std::string& field, double& out) {
  const std::string t = trim(field);
  if (t.empty()) return false;
  char* end = nullptr;
  out = std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size() && std::isfinite(out);
}

}  // namespace

RevolutionProfile load_tabulated_profile(std::istream& in) {
  std::string line;
  long line_no = 0;
  bool header_seen = false;
  std::vector<double> w, r, z;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!header_seen) {
      if (t != "w,r,z")
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": expected header `w,r,z`, got `" + t + "`");
      header_seen = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(t);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 3)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected 3 comma-separated values, got " +
                                  std::to_string(fields.size()));
    double wv, rv, zv;
    if (!parse_double(fields[0], wv) || !parse_double(fields[1], rv) ||
        !parse_double(fields[2], zv))
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": could not parse numeric row `" + t + "`");
    if (!w.empty() && !(wv > w.back()))
      throw std::invalid_argument("line " + std::to_string(line_no) + " (data row " +
                                  std::to_string(w.size() + 1) +
                                  "): w must be strictly increasing");
    if (rv < 0.0)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": negative radius r = " + std::to_string(rv));
    w.push_back(wv);
    r.push_back(rv);
    z.push_back(zv);
  }

  if (w.empty()) throw std::invalid_argument("no data rows");
  if (w.size() < 4)
    throw std::invalid_argument("need at least 4 data rows, got " +
                                std::to_string(w.size()));
  for (std::size_t i = 1; i + 1 < w.size(); ++i)
    if (!(r[i] > 0.0))
      throw std::invalid_argument("interior radius must be positive at w = " +
                                  std::to_string(w[i]));

  auto ri = std::make_shared<MonotoneCubic>(w, r);
  auto zi = std::make_shared<MonotoneCubic>(w, z);

  RevolutionProfile p;
  p.w_min = w.front();
  p.w_max = w.back();
  p.kind = ProfileKind::tabulated;
  p.r = [ri](double x) { return ri->value(x); };
  p.r_prime = [ri](double x) { return ri->derivative(x); };
  p.r_second = [ri](double x) { return ri->second_derivative(x); };
  p.z = [zi](double x) { return zi->value(x); };
  p.z_prime = [zi](double x) { return zi->derivative(x); };
  p.z_second = [zi](double x) { return zi->second_derivative(x); };
  return p;
}

}  // namespace georev
