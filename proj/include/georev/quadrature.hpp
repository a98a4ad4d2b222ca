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

#ifndef GEOREV_QUADRATURE_HPP
#define GEOREV_QUADRATURE_HPP

#include <functional>

namespace georev {

/// Outcome of an adaptive quadrature run.
struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  ///< sum of per-panel |K15 - G7| estimates
  long evaluations = 0;         ///< integrand evaluations
  bool converged = true;        ///< false if the depth limit was hit
};

/// Adaptive Gauss–Kronrod (G7,K15) quadrature of f over [lo, hi] with
/// absolute error target abs_tol.  Panels are bisected until the local
/// Kronrod-minus-Gauss estimate meets its share of the budget.  Handles
/// lo > hi with the usual sign convention.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double lo, double hi, double abs_tol,
                                    int max_depth = 48);

/// Convenience wrapper: returns the value, throws std::runtime_error if the
/// requested tolerance could not be certified.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol);

}  // namespace georev

#endif  // GEOREV_QUADRATURE_HPP
