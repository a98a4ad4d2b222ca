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

#ifndef GEOREV_ODE_HPP
#define GEOREV_ODE_HPP

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>

namespace georev {

struct OdeOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double max_step = std::numeric_limits<double>::infinity();
  double initial_step = 0.0;  ///< 0 = pick automatically
  long max_steps = 20'000'000;
};

struct OdeStats {
  long accepted = 0;
  long rejected = 0;
  double max_error_estimate = 0.0;  ///< largest scaled error among accepted steps
  bool step_underflow = false;
  bool stopped_by_observer = false;
  double t_final = 0.0;
};

enum class OdeControl { keep_going, stop };

/// Adaptive Dormand–Prince 5(4) integration of y' = f(t, y) from t0 to t1
/// (t1 > t0).  The observer is called with (t, y) for the initial state and
/// after every accepted step; returning OdeControl::stop ends the run.
/// Scaled RMS error with error-per-unit-step weighting (the tolerance budget
/// of a step of size h is tol * min(1, h), so the local error per step never
/// exceeds tol and the accumulated error stays near tol * (t1 - t0) instead
/// of tol * steps); step factor 0.9 err^(-1/5) clamped to [0.2, 5], FSAL
/// reuse of the last stage.
template <int N, class Rhs, class Observer>
OdeStats integrate_dopri5(Rhs&& f, Eigen::Matrix<double, N, 1> y, double t0,
                          double t1, const OdeOptions& opt, Observer&& observe) {
  using Vec = Eigen::Matrix<double, N, 1>;

  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  // Difference between the 5th- and 4th-order weights.
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  OdeStats stats;
  double t = t0;
  stats.t_final = t0;

  if (observe(t, y) == OdeControl::stop) {
    stats.stopped_by_observer = true;
    return stats;
  }

  double h = opt.initial_step > 0.0 ? opt.initial_step
                                    : std::min((t1 - t0) * 1e-3, opt.max_step);
  h = std::min(h, t1 - t0);

  Vec k1 = f(t, y);
  bool just_rejected = false;

  while (t < t1) {
    if (stats.accepted + stats.rejected >= opt.max_steps) break;
    h = std::min({h, opt.max_step, t1 - t});
    if (!(h > std::abs(t) * 1e-15 + 1e-300)) {
      stats.step_underflow = true;
      break;
    }

    const Vec k2 = f(t + c2 * h, (y + h * (a21 * k1)).eval());
    const Vec k3 = f(t + c3 * h, (y + h * (a31 * k1 + a32 * k2)).eval());
    const Vec k4 = f(t + c4 * h, (y + h * (a41 * k1 + a42 * k2 + a43 * k3)).eval());
    const Vec k5 = f(t + c5 * h,
                     (y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4)).eval());
    const Vec k6 = f(t + h, (y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 +
                                      a65 * k5)).eval());
    const Vec y_new =
        y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Vec k7 = f(t + h, y_new);
    const Vec err_vec =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    const double budget = std::min(1.0, h);
    double err = 0.0;
    for (int i = 0; i < N; ++i) {
      const double scale =
          (opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]))) *
          budget;
      const double q = err_vec[i] / scale;
      err += q * q;
    }
    err = std::sqrt(err / N);

    if (err <= 1.0) {
      t += h;
      y = y_new;
      k1 = k7;  // FSAL
      ++stats.accepted;
      stats.max_error_estimate = std::max(stats.max_error_estimate, err);
      stats.t_final = t;
      if (observe(t, y) == OdeControl::stop) {
        stats.stopped_by_observer = true;
        return stats;
      }
      const double grow = just_rejected ? 1.0 : 5.0;
      const double fac = err > 0.0 ? 0.9 * std::pow(err, -0.2) : grow;
      h *= std::clamp(fac, 0.2, grow);
      just_rejected = false;
    } else {
      ++stats.rejected;
      h *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
      just_rejected = true;
    }
  }
  return stats;
}

}  // namespace georev

#endif  // GEOREV_ODE_HPP
