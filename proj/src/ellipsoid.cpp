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

#include "georev/ellipsoid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "georev/elliptic.hpp"
#include "georev/quadrature.hpp"

namespace georev {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;
constexpr double deform_quad_tol = 1e-12;
constexpr double circle_branch_tol = 1e-9;  // |k-1| below this uses the circle form

}  // namespace

RevolutionProfile ellipsoid_profile(double k) {
  if (!(k > 0.0)) throw std::domain_error("ellipsoid_profile: k must be positive");
  RevolutionProfile p;
  p.w_min = 0.0;
  p.w_max = pi;
  p.kind = ProfileKind::closed_form;
  p.r = [k](double phi) { return k * std::sin(phi); };
  p.r_prime = [k](double phi) { return k * std::cos(phi); };
  p.r_second = [k](double phi) { return -k * std::sin(phi); };
  p.z = [](double phi) { return 1.0 - std::cos(phi); };
  p.z_prime = [](double phi) { return std::sin(phi); };
  p.z_second = [](double phi) { return std::cos(phi); };
  return p;
}

RevolutionProfile deform_profile(const RevolutionProfile& p, const DeformationParams& d) {
  validate_profile(p);
  const double a = d.a;

  // z̄ integrand radicand S = z'² + a r² (r'² + z'²); both S and 1 + a r²
  // must stay non-negative for the deformation to exist.
  const auto radicand = [p, a](double t) {
    const double r = p.r(t), rp = p.r_prime(t), zp = p.z_prime(t);
    return zp * zp + a * r * r * (rp * rp + zp * zp);
  };
  {
    constexpr int samples = 512;
    const double h = (p.w_max - p.w_min) / (samples - 1);
    for (int i = 0; i < samples; ++i) {
      const double t = (i == samples - 1) ? p.w_max : p.w_min + i * h;
      const double r = p.r(t);
      if (!(1.0 + a * r * r > 0.0))
        throw std::domain_error("deform_profile: 1 + a r² <= 0 at w = " +
                                std::to_string(t));
      if (radicand(t) < 0.0)
        throw std::domain_error("deform_profile: negative radicand in the height "
                                "integrand at w = " + std::to_string(t));
    }
  }

  const auto zbar_prime = [p, a, radicand](double t) {
    const double r = p.r(t);
    const double f = 1.0 + a * r * r;
    return std::sqrt(std::max(0.0, radicand(t))) / (f * std::sqrt(f));
  };

  RevolutionProfile out;
  out.w_min = p.w_min;
  out.w_max = p.w_max;
  out.kind = p.kind;
  out.r = [p, a](double t) {
    const double r = p.r(t);
    return r / std::sqrt(1.0 + a * r * r);
  };
  out.r_prime = [p, a](double t) {
    const double r = p.r(t);
    const double f = 1.0 + a * r * r;
    return p.r_prime(t) / (f * std::sqrt(f));
  };
  out.r_second = [p, a](double t) {
    const double r = p.r(t), rp = p.r_prime(t);
    const double f = 1.0 + a * r * r;
    return (p.r_second(t) * f - 3.0 * a * r * rp * rp) / (f * f * std::sqrt(f));
  };
  const double w_min = p.w_min;
  out.z = [zbar_prime, w_min](double t) {
    return integrate(zbar_prime, w_min, t, deform_quad_tol);
  };
  out.z_prime = zbar_prime;
  out.z_second = [p, a, radicand](double t) {
    const double r = p.r(t), rp = p.r_prime(t), zp = p.z_prime(t);
    const double rpp = p.r_second(t), zpp = p.z_second(t);
    const double f = 1.0 + a * r * r;
    const double s = radicand(t);
    const double w2 = rp * rp + zp * zp;
    const double s_prime = 2.0 * zp * zpp +
                           a * (2.0 * r * rp * w2 + 2.0 * r * r * (rp * rpp + zp * zpp));
    const double sqrt_s = std::sqrt(std::max(0.0, s));
    const double f32 = f * std::sqrt(f);
    // d/dt [sqrt(S) f^{-3/2}]
    const double first = s > 0.0 ? s_prime / (2.0 * sqrt_s * f32) : 0.0;
    return first - 3.0 * a * r * rp * sqrt_s / (f32 * f);
  };
  return out;
}

MeridianPoint rescale_hat(double r_bar, double z_bar, double k, double a) {
  const double f = 1.0 + a * k * k;
  if (!(f > 0.0)) throw std::domain_error("rescale_hat: 1 + a k² must be positive");
  const double s = std::sqrt(f);
  return {r_bar * s, z_bar * s};
}

double meridian_slope(double k, double a, double r_hat) {
  if (!(k > 0.0)) throw std::domain_error("meridian_slope: k must be positive");
  if (!(r_hat >= 0.0 && r_hat < k))
    throw std::domain_error("meridian_slope: requires 0 <= r_hat < k (slope diverges "
                            "at the equator)");
  const double kk = k * k - r_hat * r_hat;
  const double den = 1.0 + a * kk;
  const double num = 1.0 + a * k * k * kk;
  if (!(den > 0.0) || num < 0.0)
    throw std::domain_error("meridian_slope: invalid radicand at r_hat = " +
                            std::to_string(r_hat));
  return r_hat / (k * std::sqrt(kk)) * std::sqrt(num / den);
}

double meridian_z_quadrature(double k, double a, double r_hat) {
  if (!(k > 0.0)) throw std::domain_error("meridian_z_quadrature: k must be positive");
  if (!(r_hat >= 0.0 && r_hat <= k))
    throw std::domain_error("meridian_z_quadrature: requires 0 <= r_hat <= k");
  if (r_hat == 0.0) return 0.0;
  const double u_max = std::asin(std::min(1.0, r_hat / k));
  const auto integrand = [k, a](double u) {
    const double c = std::cos(u);
    const double kk = k * k * c * c;  // k² - r̂² at r̂ = k sin u
    const double den = 1.0 + a * kk;
    const double num = 1.0 + a * k * k * kk;
    if (!(den > 0.0) || num < 0.0)
      throw std::domain_error("meridian_z_quadrature: invalid radicand at r_hat = " +
                              std::to_string(k * std::sin(u)));
    return std::sin(u) * std::sqrt(num / den);
  };
  return integrate(integrand, 0.0, u_max, deform_quad_tol);
}

double meridian_z_closed(double k, double a, double r) {
  if (!(k > 0.0)) throw std::domain_error("meridian_z_closed: k must be positive");
  if (!(r >= 0.0 && r <= k))
    throw std::domain_error("meridian_z_closed: requires 0 <= r <= k");
  if (std::abs(k - 1.0) <= circle_branch_tol) {
    // circles are invariant under the deformation
    return 1.0 - std::sqrt(std::max(0.0, 1.0 - r * r));
  }
  if (k > 1.0)
    throw std::domain_error("meridian_z_closed: closed form requires k < 1; use "
                            "meridian_z_quadrature for k > 1");
  if (!(a > 0.0))
    throw std::domain_error("meridian_z_closed: closed form requires a > 0");

  const double k2 = k * k;
  const double r2 = r * r;
  const double kappa = std::sqrt(1.0 - k2);
  const double kk = k2 - r2;

  const double phi_r = std::asin(std::sqrt(kk / (k2 + 1.0 / a - r2)));
  const double phi_0 = std::asin(k / std::sqrt(k2 + 1.0 / a));

  const double algebraic =
      -std::sqrt(kk) / k *
          std::sqrt((1.0 + a * k2 * k2 - a * k2 * r2) / (1.0 + a * k2 - a * r2)) +
      std::sqrt((1.0 + a * k2 * k2) / (1.0 + a * k2));

  // From integrating the slope by parts with the substitution
  // sin²φ = a(k²-ρ²)/(1+a(k²-ρ²)):
  //   ∫ sqrt(1-κ²sin²φ) sec²φ dφ = sqrt(1-κ²sin²φ) tanφ + F - E,
  // so the elliptic bracket carries the prefactor 1/(k sqrt(a)).
  const double elliptic_part =
      (incomplete_elliptic_E(phi_r, kappa) - incomplete_elliptic_E(phi_0, kappa) -
       incomplete_elliptic_F(phi_r, kappa) + incomplete_elliptic_F(phi_0, kappa)) /
      (std::sqrt(a) * k);

  return algebraic + elliptic_part;
}

double small_a_expansion(double k, double r, double a) {
  if (!(k > 0.0)) throw std::domain_error("small_a_expansion: k must be positive");
  if (!(r >= 0.0 && r <= k))
    throw std::domain_error("small_a_expansion: requires 0 <= r <= k");
  const double k2 = k * k;
  const double kk = k2 - r * r;
  return 1.0 - std::sqrt(kk) / k - a * k2 * (1.0 - k2) / 6.0 +
         a * (1.0 - k2) / (6.0 * k) * kk * std::sqrt(kk);
}

namespace {

void check_radial_chart(const char* name, double k, double r_lo, double r_hi) {
  if (!(k > 0.0)) throw std::domain_error(std::string(name) + ": k must be positive");
  if (!(r_lo > 0.0 && r_hi < k && r_lo < r_hi))
    throw std::domain_error(std::string(name) +
                            ": radial chart requires 0 < r_lo < r_hi < k");
}

}  // namespace

EquidistantMetric original_ellipsoid_metric(double k, double r_lo, double r_hi,
                                            int fiber_dim) {
  check_radial_chart("original_ellipsoid_metric", k, r_lo, r_hi);
  const double k2 = k * k;
  const double c = 1.0 / k2 - 1.0;
  EquidistantMetric g;
  g.a = [k2, c](double r) { return (k2 + c * r * r) / (k2 - r * r); };
  g.a_prime = [k2](double r) {
    const double d = k2 - r * r;
    return 2.0 * r / (d * d);
  };
  g.b = [](double r) { return r * r; };
  g.b_prime = [](double r) { return 2.0 * r; };
  g.w_min = r_lo;
  g.w_max = r_hi;
  g.fiber_dim = fiber_dim;
  return g;
}

EquidistantMetric pullback_metric(double k, double a, double r_lo, double r_hi,
                                  int fiber_dim) {
  check_radial_chart("pullback_metric", k, r_lo, r_hi);
  const double k2 = k * k;
  const double c = 1.0 / k2 - 1.0;
  const double scale = 1.0 + a * k2;
  if (!(scale > 0.0))
    throw std::domain_error("pullback_metric: requires 1 + a k² > 0");
  EquidistantMetric g;
  g.a = [k2, c, a, scale](double r) {
    const double f = 1.0 + a * r * r;
    return scale * (k2 + c * r * r) / ((k2 - r * r) * f * f);
  };
  g.a_prime = [k2, c, a, scale](double r) {
    const double d = k2 - r * r;
    const double f = 1.0 + a * r * r;
    const double base = (k2 + c * r * r) / d;
    const double base_prime = 2.0 * r / (d * d);
    return scale * (base_prime * f - 4.0 * a * r * base) / (f * f * f);
  };
  g.b = [a, scale](double r) { return scale * r * r / (1.0 + a * r * r); };
  g.b_prime = [a, scale](double r) {
    const double f = 1.0 + a * r * r;
    return 2.0 * scale * r / (f * f);
  };
  g.w_min = r_lo;
  g.w_max = r_hi;
  g.fiber_dim = fiber_dim;
  return g;
}

EquidistantMetric deformed_surface_metric(double k, double a, double r_lo,
                                          double r_hi, int fiber_dim) {
  check_radial_chart("deformed_surface_metric", k, r_lo, r_hi);
  const double k2 = k * k;
  const double alpha = k2 + a * k2 * k2;
  const double beta = 1.0 / k2 - a * k2 - 1.0;
  const double scale = 1.0 + a * k2;
  if (!(scale > 0.0))
    throw std::domain_error("deformed_surface_metric: requires 1 + a k² > 0");
  EquidistantMetric g;
  g.a = [k2, a, alpha, beta, scale](double r) {
    const double d = (k2 - r * r) * (scale - a * r * r);
    return (alpha + beta * r * r) / d;
  };
  g.a_prime = [k2, a, alpha, beta, scale](double r) {
    const double d = (k2 - r * r) * (scale - a * r * r);
    const double d_prime = -2.0 * r * ((scale - a * r * r) + a * (k2 - r * r));
    const double n = alpha + beta * r * r;
    return (2.0 * beta * r * d - n * d_prime) / (d * d);
  };
  g.b = [](double r) { return r * r; };
  g.b_prime = [](double r) { return 2.0 * r; };
  g.w_min = r_lo;
  g.w_max = r_hi;
  g.fiber_dim = fiber_dim;
  return g;
}

}  // namespace georev
