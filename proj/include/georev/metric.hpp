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

#ifndef GEOREV_METRIC_HPP
#define GEOREV_METRIC_HPP

#include <functional>

namespace georev {

/// Rotationally symmetric ("equidistant") metric
///
///   ds² = a(w) dw² + b(w) dσ²
///
/// on a domain [w_min, w_max], where dσ² is the round metric of a unit
/// (fiber_dim)-sphere.  Coefficients and their first derivatives are carried
/// as callables; instances are immutable values and safe to share across
/// threads.
struct EquidistantMetric {
  std::function<double(double)> a;
  std::function<double(double)> a_prime;
  std::function<double(double)> b;
  std::function<double(double)> b_prime;
  double w_min = 0.0;
  double w_max = 0.0;
  int fiber_dim = 1;
};

/// Extrema of a scalar function over an interval, found by a uniform scan
/// with golden-section refinement around the best brackets.
struct FunctionExtrema {
  double min_value = 0.0;
  double min_arg = 0.0;
  double max_value = 0.0;
  double max_arg = 0.0;
};

/// Scans f on `samples` uniform points of [lo, hi] (endpoints included) and
/// refines both extrema by golden-section search to argument tolerance
/// arg_tol.
FunctionExtrema scan_extrema(const std::function<double(double)>& f, double lo,
                             double hi, int samples = 2048,
                             double arg_tol = 1e-10);

}  // namespace georev

#endif  // GEOREV_METRIC_HPP
