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

#include "georev/elliptic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace georev {

namespace {

constexpr int max_duplications = 200;
constexpr double half_pi = 1.5707963267948966;

// Truncation error of the fifth-order Taylor tails scales as tol^6, so this
// keeps the series remainder below machine epsilon.
const double duplication_tol = std::pow(4.0 * std::numeric_limits<double>::epsilon(), 1.0 / 6.0);

}  // namespace

double carlson_rf(double x, double y, double z) {
  if (x < 0.0 || y < 0.0 || z < 0.0)
    throw std::domain_error("carlson_rf: arguments must be non-negative");
  if (x + y == 0.0 || y + z == 0.0 || z + x == 0.0)
    throw std::domain_error("carlson_rf: at most one argument may be zero");

  double u = 0.0, dx = 0.0, dy = 0.0, dz = 0.0;
  for (int k = 0; k < max_duplications; ++k) {
    u = (x + y + z) / 3.0;
    dx = 1.0 - x / u;
    dy = 1.0 - y / u;
    dz = 1.0 - z / u;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < duplication_tol) break;
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lambda = sy * (sx + sz) + sz * sx;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
  }
  const double e2 = dx * dy - dz * dz;
  const double e3 = dx * dy * dz;
  return (1.0 + e2 * (e2 / 24.0 - e3 * 3.0 / 44.0 - 0.1) + e3 / 14.0) / std::sqrt(u);
}

double carlson_rd(double x, double y, double z) {
  if (x < 0.0 || y < 0.0)
    throw std::domain_error("carlson_rd: x and y must be non-negative");
  if (x + y == 0.0 || z <= 0.0)
    throw std::domain_error("carlson_rd: requires x+y > 0 and z > 0");

  double sum = 0.0;
  double fac = 1.0;
  double u = 0.0, dx = 0.0, dy = 0.0, dz = 0.0;
  for (int k = 0; k < max_duplications; ++k) {
    u = (x + y + 3.0 * z) / 5.0;
    dx = (u - x) / u;
    dy = (u - y) / u;
    dz = (u - z) / u;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < duplication_tol) break;
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lambda = sy * (sx + sz) + sz * sx;
    sum += fac / (sz * (z + lambda));
    fac *= 0.25;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
  }
  const double ea = dx * dy;
  const double eb = dz * dz;
  const double ec = ea - eb;
  const double ed = ea - 6.0 * eb;
  const double ee = ed + ec + ec;
  const double series =
      1.0 +
      ed * (-3.0 / 14.0 + ed * 9.0 / 88.0 - dz * ee * 4.5 / 26.0) +
      dz * (ee / 6.0 + dz * (-ec * 9.0 / 22.0 + dz * ea * 3.0 / 26.0));
  return 3.0 * sum + fac * series / (u * std::sqrt(u));
}

namespace {

void check_fe_domain(const char* name, double phi, double kappa) {
  constexpr double slack = 1e-12;
  if (!(phi >= -slack && phi <= half_pi + slack))
    throw std::domain_error(std::string(name) + ": phi must lie in [0, pi/2], got " +
                            std::to_string(phi));
  if (!(kappa >= 0.0 && kappa < 1.0))
    throw std::domain_error(std::string(name) + ": kappa must lie in [0, 1), got " +
                            std::to_string(kappa));
}

}  // namespace

double incomplete_elliptic_F(double phi, double kappa) {
  check_fe_domain("incomplete_elliptic_F", phi, kappa);
  if (phi <= 0.0) return 0.0;
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  const double w = 1.0 - kappa * kappa * s * s;
  return s * carlson_rf(c * c, w, 1.0);
}

double incomplete_elliptic_E(double phi, double kappa) {
  check_fe_domain("incomplete_elliptic_E", phi, kappa);
  if (phi <= 0.0) return 0.0;
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  const double k2 = kappa * kappa;
  const double w = 1.0 - k2 * s * s;
  return s * carlson_rf(c * c, w, 1.0) -
         k2 * s * s * s / 3.0 * carlson_rd(c * c, w, 1.0);
}

}  // namespace georev
