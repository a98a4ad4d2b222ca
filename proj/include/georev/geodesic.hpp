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

#ifndef GEOREV_GEODESIC_HPP
#define GEOREV_GEODESIC_HPP

#include <Eigen/Core>

#include <memory>
#include <vector>

#include "georev/mapping.hpp"
#include "georev/metric.hpp"

namespace georev {

/// Phase-space point of a geodesic in (w, σ) coordinates; σ is tracked
/// unwrapped on the real line, dots are derivatives with respect to the
/// affine parameter.
struct GeodesicState {
  double w = 0.0;
  double sigma = 0.0;
  double w_dot = 0.0;
  double sigma_dot = 0.0;

  Eigen::Vector4d as_vector() const { return {w, sigma, w_dot, sigma_dot}; }
  static GeodesicState from_vector(const Eigen::Vector4d& v) {
    return {v[0], v[1], v[2], v[3]};
  }
};

enum class StopReason { completed, pole_contact, domain_exit, step_underflow };

struct IntegratorStats {
  long accepted_steps = 0;
  long rejected_steps = 0;
  double max_error_estimate = 0.0;
};

struct TraceSample {
  double t = 0.0;
  GeodesicState state;
};

/// Integrated geodesic: samples at the integrator's accepted steps (strictly
/// increasing t, no interpolation), the metric it was integrated in, and run
/// statistics.
struct GeodesicTrace {
  std::vector<TraceSample> samples;
  std::shared_ptr<const EquidistantMetric> metric;
  StopReason stop = StopReason::completed;
  double t_requested = 0.0;
  double t_reached = 0.0;
  IntegratorStats stats;
};

struct IntegrationOptions {
  double tol = 1e-10;       ///< local error tolerance (absolute and relative)
  double max_step = 1e9;    ///< cap on the step size
  long max_steps = 20'000'000;
  double pole_guard_fraction = 1e-10;  ///< stop when b(w) < fraction * max b
};

/// Equivalence check between a metric and its (p,q) image along one
/// geodesic.
struct EquivalenceReport {
  double max_transverse_deviation = 0.0;  ///< geometric units, see unparametrized_deviation
  double clairaut_drift_g = 0.0;
  double clairaut_drift_gbar = 0.0;
  double deviation_tol = 0.0;
  double drift_tol = 0.0;
  bool passed = false;
};

/// Right-hand side of the geodesic equations of ds² = a dw² + b dσ²,
///   ẅ = -Γ^w_ww ẇ² - Γ^w_σσ σ̇²,   σ̈ = -2 Γ^σ_wσ ẇ σ̇,
/// as the derivative of the state vector (w, σ, ẇ, σ̇).
Eigen::Vector4d geodesic_rhs(const EquidistantMetric& g, const GeodesicState& s);

/// Integrates the geodesic through `init` from t = 0 to t_end with the
/// embedded Dormand–Prince 5(4) pair at local tolerance tol.  Integration
/// stops early with pole_contact when b(w) enters the guard band (the chart
/// degenerates at poles) and with domain_exit when w leaves the metric's
/// domain.
GeodesicTrace integrate_geodesic(const EquidistantMetric& g, const GeodesicState& init,
                                 double t_end, double tol);
GeodesicTrace integrate_geodesic(const EquidistantMetric& g, const GeodesicState& init,
                                 double t_end, const IntegrationOptions& opt);

/// Clairaut invariant b(w) dσ/ds (arc-length normalized angular momentum);
/// conserved along geodesics of any rotationally symmetric metric.
double clairaut_invariant(const EquidistantMetric& g, const GeodesicState& s);

/// Largest |c(t) - c(0)| of the Clairaut invariant over a trace.
double clairaut_drift(const GeodesicTrace& trace);

/// Largest |speed(t) - speed(0)| of the affine speed sqrt(a ẇ² + b σ̇²).
double speed_drift(const GeodesicTrace& trace);

/// Maximum geometric distance between two traces regarded as unparametrized
/// curves: for each sample of one trace, the distance (in the first trace's
/// metric, frozen at the sample) to the other trace's curve, Hermite-densified
/// from the stored state velocities; symmetric max of both directions,
/// restricted to the overlapping swept region.  Throws std::domain_error if
/// the traces do not overlap at all.
double unparametrized_deviation(const GeodesicTrace& t1, const GeodesicTrace& t2);

/// Integrates `init` under g and the same starting point/direction (tangent
/// rescaled to unit speed in the image metric) under map_metric(g, mp), then
/// reports the unparametrized deviation and both Clairaut drifts.  Passes
/// when deviation <= 1e3 tol and both drifts <= 1e2 tol.
EquivalenceReport verify_geodesic_equivalence(const EquidistantMetric& g,
                                              const MappingParams& mp,
                                              const GeodesicState& init,
                                              double t_end, double tol);

}  // namespace georev

#endif  // GEOREV_GEODESIC_HPP
