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

#include "georev/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace georev {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
// Abscissae are symmetric about the panel midpoint; even indices belong to
// the embedded Gauss rule.
constexpr double kronrod_x[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kronrod_w[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double gauss_w[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double kronrod;
  double gauss;
};

Panel gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = f(c);
  double kron = kronrod_w[7] * fc;
  double gauss = gauss_w[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kronrod_x[i];
    const double fsum = f(c - dx) + f(c + dx);
    kron += kronrod_w[i] * fsum;
    if (i % 2 == 1) gauss += gauss_w[i / 2] * fsum;
  }
  return {kron * h, gauss * h};
}

void refine(const std::function<double(double)>& f, double lo, double hi,
            double tol, int depth, int max_depth, QuadratureResult& acc) {
  const Panel p = gk15(f, lo, hi);
  acc.evaluations += 15;
  const double err = std::abs(p.kronrod - p.gauss);
  if (err <= tol || depth >= max_depth) {
    acc.value += p.kronrod;
    acc.error_estimate += err;
    if (err > tol) acc.converged = false;
    return;
  }
  const double mid = 0.5 * (lo + hi);
  refine(f, lo, mid, 0.5 * tol, depth + 1, max_depth, acc);
  refine(f, mid, hi, 0.5 * tol, depth + 1, max_depth, acc);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double lo, double hi, double abs_tol,
                                    int max_depth) {
  QuadratureResult acc;
  if (lo == hi) return acc;
  if (abs_tol <= 0.0) throw std::domain_error("quadrature: abs_tol must be positive");
  double sign = 1.0;
  if (lo > hi) {
    std::swap(lo, hi);
    sign = -1.0;
  }
  refine(f, lo, hi, abs_tol, 0, max_depth, acc);
  acc.value *= sign;
  return acc;
}

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol) {
  const QuadratureResult r = integrate_adaptive(f, lo, hi, abs_tol);
  if (!r.converged) {
    throw std::runtime_error(
        "quadrature failed to reach tolerance " + std::to_string(abs_tol) +
        " on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return r.value;
}

}  // namespace georev
