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

#include "georev/metric.hpp"

#include <cmath>
#include <stdexcept>

namespace georev {

namespace {

constexpr double inv_golden = 0.6180339887498949;  // 1/phi

// Golden-section minimization of f over [lo, hi]; returns the argument.
double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double arg_tol) {
  double x1 = hi - inv_golden * (hi - lo);
  double x2 = lo + inv_golden * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > arg_tol) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_golden * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_golden * (hi - lo);
      f2 = f(x2);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

FunctionExtrema scan_extrema(const std::function<double(double)>& f, double lo,
                             double hi, int samples, double arg_tol) {
  if (!(hi > lo)) throw std::invalid_argument("scan_extrema: empty interval");
  if (samples < 3) throw std::invalid_argument("scan_extrema: need >= 3 samples");

  int i_min = 0, i_max = 0;
  double v_min = f(lo), v_max = v_min;
  const double h = (hi - lo) / (samples - 1);
  for (int i = 1; i < samples; ++i) {
    const double x = (i == samples - 1) ? hi : lo + i * h;
    const double v = f(x);
    if (v < v_min) {
      v_min = v;
      i_min = i;
    }
    if (v > v_max) {
      v_max = v;
      i_max = i;
    }
  }

  const auto bracket = [&](int i) {
    const double a = (i == 0) ? lo : lo + (i - 1) * h;
    const double b = (i == samples - 1) ? hi : lo + (i + 1) * h;
    return std::pair<double, double>{std::max(a, lo), std::min(b, hi)};
  };

  FunctionExtrema out;
  {
    const auto [a, b] = bracket(i_min);
    out.min_arg = golden_min(f, a, b, arg_tol);
    out.min_value = f(out.min_arg);
    if (v_min < out.min_value) {  // refinement must not lose the scan winner
      out.min_value = v_min;
      out.min_arg = lo + i_min * h;
    }
  }
  {
    const auto [a, b] = bracket(i_max);
    const auto neg = [&f](double x) { return -f(x); };
    out.max_arg = golden_min(neg, a, b, arg_tol);
    out.max_value = f(out.max_arg);
    if (v_max > out.max_value) {
      out.max_value = v_max;
      out.max_arg = lo + i_max * h;
    }
  }
  return out;
}

}  // namespace georev
