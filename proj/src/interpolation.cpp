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

#include "georev/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace georev {

namespace {

// Fornberg's algorithm: weights w[j] such that f'(x0) ≈ Σ w[j] f(x[j]) for an
// arbitrary stencil x[0..n-1].
std::vector<double> first_derivative_weights(double x0, const double* x, int n) {
  constexpr int m = 1;  // derivative order
  std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
  c[0][0] = 1.0;
  double c1 = 1.0;
  double c4 = x[0] - x0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int s = mn; s >= 1; --s)
          c[i][s] = c1 * (s * c[i - 1][s - 1] - c5 * c[i - 1][s]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int s = mn; s >= 1; --s)
        c[j][s] = (c4 * c[j][s] - s * c[j][s - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int j = 0; j < n; ++j) w[j] = c[j][m];
  return w;
}

double sign_of(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

}  // namespace

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 4) throw std::invalid_argument("MonotoneCubic: need at least 4 nodes");
  if (y_.size() != n) throw std::invalid_argument("MonotoneCubic: size mismatch");
  for (std::size_t i = 1; i < n; ++i)
    if (!(x_[i] > x_[i - 1]))
      throw std::invalid_argument("MonotoneCubic: abscissae must be strictly increasing");

  // Secant slopes.
  std::vector<double> d(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    d[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);

  // Fourth-order slope estimates from a 5-point stencil centered when
  // possible, shifted near the ends.
  m_.resize(n);
  const int stencil = std::min<std::size_t>(5, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t lo = i >= 2 ? i - 2 : 0;
    if (lo + stencil > n) lo = n - stencil;
    const auto w = first_derivative_weights(x_[i], x_.data() + lo, stencil);
    double s = 0.0;
    for (int j = 0; j < stencil; ++j) s += w[j] * y_[lo + j];
    m_[i] = s;
  }

  // Monotonicity filter.
  for (std::size_t i = 0; i < n; ++i) {
    double lo_secant, hi_secant;
    if (i == 0) {
      lo_secant = hi_secant = d[0];
    } else if (i == n - 1) {
      lo_secant = hi_secant = d[n - 2];
    } else {
      lo_secant = d[i - 1];
      hi_secant = d[i];
    }
    if (lo_secant * hi_secant <= 0.0 && i != 0 && i != n - 1) {
      m_[i] = 0.0;  // local extremum of the data
      continue;
    }
    const double s = sign_of(hi_secant);
    const double bound = 3.0 * std::min(std::abs(lo_secant), std::abs(hi_secant));
    if (m_[i] * s < 0.0)
      m_[i] = 0.0;
    else if (std::abs(m_[i]) > bound)
      m_[i] = s * bound;
  }
}

std::size_t MonotoneCubic::interval(double x) const {
  if (x <= x_.front()) return 0;
  if (x >= x_.back()) return x_.size() - 2;
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  return static_cast<std::size_t>(it - x_.begin()) - 1;
}

double MonotoneCubic::value(double x) const {
  const std::size_t i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 * y_[i] + h10 * h * m_[i] + h01 * y_[i + 1] + h11 * h * m_[i + 1];
}

double MonotoneCubic::derivative(double x) const {
  const std::size_t i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t;
  const double dh00 = 6.0 * t2 - 6.0 * t;
  const double dh10 = 3.0 * t2 - 4.0 * t + 1.0;
  const double dh01 = -6.0 * t2 + 6.0 * t;
  const double dh11 = 3.0 * t2 - 2.0 * t;
  return (dh00 * y_[i] + dh01 * y_[i + 1]) / h + dh10 * m_[i] + dh11 * m_[i + 1];
}

double MonotoneCubic::second_derivative(double x) const {
  const std::size_t i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double ddh00 = 12.0 * t - 6.0;
  const double ddh10 = 6.0 * t - 4.0;
  const double ddh01 = -12.0 * t + 6.0;
  const double ddh11 = 6.0 * t - 2.0;
  return (ddh00 * y_[i] + ddh01 * y_[i + 1]) / (h * h) +
         (ddh10 * m_[i] + ddh11 * m_[i + 1]) / h;
}

}  // namespace georev
