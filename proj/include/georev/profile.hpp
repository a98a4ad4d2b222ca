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

#ifndef GEOREV_PROFILE_HPP
#define GEOREV_PROFILE_HPP

#include <functional>
#include <iosfwd>
#include <string>

#include "georev/metric.hpp"

namespace georev {

enum class ProfileKind { closed_form, tabulated };

/// Meridian curve (r(w), z(w)) generating a surface of revolution.
///
/// r is the distance from the rotation axis, z the height along it; the
/// parameter w runs over [w_min, w_max] and need not be arc length.  First
/// and second derivatives are carried as callables: closed-form profiles
/// supply them analytically, tabulated ones from the interpolant pieces.
/// Interior radii must be positive and r'² + z'² must never vanish.
struct RevolutionProfile {
  std::function<double(double)> r;
  std::function<double(double)> r_prime;
  std::function<double(double)> r_second;
  std::function<double(double)> z;
  std::function<double(double)> z_prime;
  std::function<double(double)> z_second;
  double w_min = 0.0;
  double w_max = 0.0;
  ProfileKind kind = ProfileKind::closed_form;
};

enum class TopologyClass { sphere, disk_or_plane, torus, cylinder, other };

std::string to_string(TopologyClass t);

/// Default endpoint-radius / derivative tolerances for pole handling.
/// Tabulated data gets a looser tier because interpolant endpoint
/// derivatives are one order less accurate than interior ones.
inline constexpr double pole_tol_closed_form = 1e-8;
inline constexpr double pole_tol_tabulated = 1e-4;

inline double default_pole_tol(const RevolutionProfile& p) {
  return p.kind == ProfileKind::tabulated ? pole_tol_tabulated : pole_tol_closed_form;
}

/// Checks the profile invariants on a uniform sample of the domain; throws
/// std::domain_error naming the offending parameter value when the meridian
/// degenerates (r'² + z'² = 0) or an interior radius is non-positive.
void validate_profile(const RevolutionProfile& p, int samples = 512);

/// Induced metric of the surface of revolution in the profile's own
/// parameter: a = r'² + z'², b = r², with analytically propagated
/// derivatives (a' = 2(r'r'' + z'z''), b' = 2 r r').
EquidistantMetric metric_from_profile(const RevolutionProfile& p, int fiber_dim = 1);

/// Reparameterizes the meridian by arc length.  The returned profile lives
/// on [0, L] with L the total meridian length and satisfies r'² + z'² = 1 up
/// to roundoff; tol controls the accuracy of the internal length quadrature
/// (positions are accurate to ~tol, the unit-speed identity holds exactly by
/// construction).
RevolutionProfile arclength_reparameterize(const RevolutionProfile& p, double tol = 1e-12);

/// Smoothness report for one endpoint of the meridian.
struct PoleSideReport {
  bool is_pole = false;  ///< endpoint radius within tol of 0
  bool smooth = false;   ///< |r'| within tol of 1 and |z'| within tol of 0
  double r_end = 0.0;
  double r_prime_end = 0.0;
  double z_prime_end = 0.0;
};

struct PoleReport {
  PoleSideReport left;
  PoleSideReport right;
};

/// Checks smoothness of the surface at the rotation poles.  Requires a
/// unit-speed profile (see arclength_reparameterize); a smooth pole needs
/// |r'| = 1 and z' = 0 there.  Endpoints with r != 0 are reported as not
/// being poles (smooth is then irrelevant and left false).
PoleReport pole_smoothness_check(const RevolutionProfile& p, double tol);

/// Classifies the global topology of the surface from the endpoint data:
/// both endpoint radii zero -> sphere; exactly one zero -> disk_or_plane;
/// equal nonzero radii with equal heights -> torus; positive radius
/// everywhere otherwise -> cylinder; anything else -> other.
TopologyClass classify_topology(const RevolutionProfile& p, double tol = 1e-9);

/// Reads a tabulated meridian from CSV (header exactly `w,r,z`, UTF-8,
/// decimal points, `#` comment lines ignored) and builds a C¹ profile with
/// monotone-preserving cubic interpolation.  Requires >= 4 data rows with
/// strictly increasing w, non-negative radii, and positive interior radii;
/// errors identify the offending line.
RevolutionProfile load_tabulated_profile(std::istream& in);

}  // namespace georev

#endif  // GEOREV_PROFILE_HPP
