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

#ifndef GEOREV_ELLIPSOID_HPP
#define GEOREV_ELLIPSOID_HPP

#include "georev/metric.hpp"
#include "georev/profile.hpp"

namespace georev {

/// Rotational ellipsoid with equatorial semi-axis k and polar semi-axis 1,
/// meridian r = k sin(φ), z = 1 - cos(φ) on φ ∈ [0, π].
struct EllipsoidParams {
  double k = 1.0;
};

/// Parameter of the one-parameter geodesic deformation
///   r ↦ r / sqrt(1 + a r²),
/// defined wherever 1 + a r² stays positive along the profile.
struct DeformationParams {
  double a = 0.0;
};

/// Point of the deformed meridian in the rescaled coordinates
/// (r̂, ẑ) = sqrt(1 + a k²) (r̄, z̄), chosen so that max r̂ = k.
struct MeridianPoint {
  double r_hat = 0.0;
  double z_hat = 0.0;
};

/// Meridian profile of the ellipsoid in the angular parameter φ, with exact
/// derivatives.  The surface is a topological sphere with smooth poles for
/// every k > 0.
RevolutionProfile ellipsoid_profile(double k);

/// Applies the deformation to an arbitrary profile in its own parameter:
///   r̄ = r / sqrt(1 + a r²),
///   z̄(t) = ∫ sqrt(z'² + a r² (r'² + z'²)) / (1 + a r²)^{3/2} dτ,
/// the integral taken from the left end by adaptive quadrature (1e-12
/// absolute).  Derivatives of both components are propagated analytically.
/// Throws std::domain_error if 1 + a r² or the integrand radicand fails
/// anywhere (the message names the parameter value).
RevolutionProfile deform_profile(const RevolutionProfile& p, const DeformationParams& d);

/// Rescales deformed-meridian coordinates by sqrt(1 + a k²).
MeridianPoint rescale_hat(double r_bar, double z_bar, double k, double a);

/// Slope dẑ/dr̂ of the deformed meridian,
///   r̂ / (k sqrt(k² - r̂²)) * sqrt((1 + a k² (k² - r̂²)) / (1 + a (k² - r̂²))),
/// i.e. the ellipse slope modified by a factor that is 1 for k = 1, 1 for
/// a = 0, and tends to k as a → ∞.  Requires 0 ≤ r_hat < k; the slope
/// diverges at the equator r_hat = k (std::domain_error).
double meridian_slope(double k, double a, double r_hat);

/// Meridian height ẑ(r̂) by adaptive quadrature of the slope, using the
/// substitution r̂ = k sin(u) which removes the equator singularity:
///   ẑ = ∫₀^{asin(r̂/k)} sin(u) sqrt((1 + a k⁴ cos²u)/(1 + a k² cos²u)) du.
/// Valid for every k > 0 and any a for which the radicands stay positive;
/// this is the independent oracle for meridian_z_closed.  Absolute accuracy
/// 1e-11 or better; r_hat may equal k.
double meridian_z_quadrature(double k, double a, double r_hat);

/// Closed form of the deformed meridian height in terms of incomplete
/// elliptic integrals with modulus sqrt(1 - k²); supports the oblate regime
/// 0 < k < 1 with a > 0, plus the circle branch k = 1 where the deformation
/// is the identity (ẑ = 1 - sqrt(1 - r²)).  For k > 1 the modulus would be
/// imaginary; use meridian_z_quadrature instead (std::domain_error here).
double meridian_z_closed(double k, double a, double r);

/// Linear-in-a approximation of the deformed meridian height,
///   z = 1 - sqrt(k² - r²)/k - a k² (1 - k²)/6 + a (1 - k²) (k² - r²)^{3/2} / (6k),
/// with O(a²) remainder; at the equator the shift is -a k² (1 - k²)/6.
double small_a_expansion(double k, double r, double a);

/// Metric of the original ellipsoid in the radial chart of one half-surface,
///   (k² + (1/k² - 1) r²)/(k² - r²) dr² + r² dσ²,
/// on r ∈ (0, k) (restricted to [r_lo, r_hi]).
EquidistantMetric original_ellipsoid_metric(double k, double r_lo, double r_hi,
                                            int fiber_dim = 1);

/// Pullback of the deformed-surface metric to the original ellipsoid's
/// radial chart,
///   (1 + a k²) [ (k² + (1/k² - 1) r²)/((k² - r²)(1 + a r²)²) dr²
///                + r²/(1 + a r²) dσ² ],
/// which equals the (p, q) = (1 + a k², a) image of the original metric.
EquidistantMetric pullback_metric(double k, double a, double r_lo, double r_hi,
                                  int fiber_dim = 1);

/// Intrinsic metric of the deformed surface in its own rescaled radial
/// chart,
///   (k² + a k⁴ + (1/k² - a k² - 1) r̂²) / ((k² - r̂²)(1 + a k² - a r̂²)) dr̂²
///   + r̂² dσ²,
/// whose radial coefficient equals 1 + (dẑ/dr̂)².
EquidistantMetric deformed_surface_metric(double k, double a, double r_lo,
                                          double r_hi, int fiber_dim = 1);

}  // namespace georev

#endif  // GEOREV_ELLIPSOID_HPP
