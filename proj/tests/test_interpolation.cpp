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

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "georev/interpolation.hpp"

using georev::MonotoneCubic;

namespace {
constexpr double pi = 3.141592653589793238462643383279502884;

MonotoneCubic sample(double (*f)(double), double lo, double hi, int n) {
  std::vector<double> x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = lo + (hi - lo) * i / (n - 1);
    y[i] = f(x[i]);
  }
  return MonotoneCubic(std::move(x), std::move(y));
}

}  // namespace

TEST_CASE("interpolates smooth data with high accuracy at midpoints") {
  const MonotoneCubic c = sample(std::sin, 0.0, pi, 101);
  double max_val_err = 0.0, max_der_err = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double x = pi * (i + 0.5) / 100.0;
    max_val_err = std::max(max_val_err, std::abs(c.value(x) - std::sin(x)));
    max_der_err = std::max(max_der_err, std::abs(c.derivative(x) - std::cos(x)));
  }
  CHECK(max_val_err < 1e-8);
  CHECK(max_der_err < 5e-7);
}

TEST_CASE("monotone data yields a monotone interpolant") {
  // steep data that makes an unlimited cubic overshoot
  std::vector<double> x{0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
  std::vector<double> y{0.0, 0.01, 0.02, 1.0, 1.01, 1.02};
  const MonotoneCubic c(x, y);
  double prev = c.value(0.0);
  for (int i = 1; i <= 500; ++i) {
    const double v = c.value(5.0 * i / 500.0);
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
}

TEST_CASE("exactly 4 nodes are accepted, 3 are not") {
  std::vector<double> x{0.0, 1.0, 2.0, 3.0};
  std::vector<double> y{0.0, 1.0, 4.0, 9.0};
  CHECK_NOTHROW(MonotoneCubic(x, y));
  CHECK_THROWS_AS(MonotoneCubic({0.0, 1.0, 2.0}, {0.0, 1.0, 2.0}),
                  std::invalid_argument);
}

TEST_CASE("non-increasing abscissae are rejected") {
  CHECK_THROWS_AS(MonotoneCubic({0.0, 1.0, 1.0, 2.0}, {0.0, 1.0, 2.0, 3.0}),
                  std::invalid_argument);
}

TEST_CASE("second derivative matches on cubic data") {
  // a cubic with monotone growth is reproduced almost exactly
  std::vector<double> x(9), y(9);
  for (int i = 0; i < 9; ++i) {
    x[i] = i * 0.5;
    y[i] = x[i] * x[i] * x[i] + 2.0 * x[i];
  }
  const MonotoneCubic c(x, y);
  for (double t : {0.3, 1.1, 2.7, 3.9})
    CHECK(c.second_derivative(t) == doctest::Approx(6.0 * t).epsilon(1e-9));
}
