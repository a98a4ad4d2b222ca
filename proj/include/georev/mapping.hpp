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

#ifndef GEOREV_MAPPING_HPP
#define GEOREV_MAPPING_HPP

#include "georev/metric.hpp"

namespace georev {

/// Parameters of the two-parameter geodesic-mapping family between
/// rotationally symmetric metrics,
///
///   a ↦ p a / (1 + q b)²,   b ↦ p b / (1 + q b).
///
/// p is a homothety-like scale (must be nonzero, canonically positive), q
/// deforms the metric; q = 0 reduces to a homothety by p.
struct MappingParams {
  double p = 1.0;
  double q = 0.0;
};

/// The three independent Christoffel symbols of ds² = a dw² + b dσ² in its
/// 2D (w, σ) block, evaluated at one w:
///   Γ^w_ww = a'/(2a),  Γ^w_σσ = -b'/(2a),  Γ^σ_wσ = b'/(2b).
/// By rotational symmetry every geodesic lies in such a block, so these
/// carry the full geodesic content for any fiber dimension.
struct ChristoffelSet {
  double w_ww = 0.0;  ///< Γ^w_ww
  double w_ss = 0.0;  ///< Γ^w_σσ
  double s_ws = 0.0;  ///< Γ^σ_wσ
};

/// Admissible ranges of the deformation parameter q for a given metric.
/// The image metric is defined wherever 1 + q b(w) never vanishes:
/// q > -1/max(b) keeps it positive definite; if min(b) > 0 (no poles),
/// q < -1/min(b) flips it to Minkowski signature.  Values with
/// 1 + q b(w) = 0 somewhere form the closed excluded gap in between.
struct QAdmissibility {
  double positive_definite_min = 0.0;          ///< open lower bound, -1/max(b)
  bool has_minkowski = false;
  double minkowski_max = 0.0;                  ///< open upper bound, -1/min(b)
  double excluded_min = 0.0;                   ///< closed; -inf when b attains 0
  double excluded_max = 0.0;                   ///< closed; equals -1/max(b)

  bool positive_definite_contains(double q) const { return q > positive_definite_min; }
  bool minkowski_contains(double q) const { return has_minkowski && q < minkowski_max; }
  bool admissible(double q) const {
    return positive_definite_contains(q) || minkowski_contains(q);
  }
};

/// Residual triple of the Levi-Civita equivalence condition in symmetrized
/// form Γ̄^h_ij = Γ^h_ij + δ^h_i ψ_j + δ^h_j ψ_i with ψ_σ = 0:
///   (Γ̄^w_ww - Γ^w_ww - 2ψ',  Γ̄^σ_wσ - Γ^σ_wσ - ψ',  Γ̄^w_σσ - Γ^w_σσ).
/// All three vanish identically for the (p,q) family.
struct LeviCivitaResidual {
  double w_ww = 0.0;
  double s_ws = 0.0;
  double w_ss = 0.0;

  double max_abs() const;
};

/// Applies the (p,q) mapping to g, propagating coefficient derivatives
/// analytically.  Throws std::domain_error if p = 0 or if 1 + q b(w)
/// vanishes somewhere on the domain (the message reports the crossing w).
EquidistantMetric map_metric(const EquidistantMetric& g, const MappingParams& mp);

/// The generating scalar of the mapping, ψ(w) = -1/2 ln|1 + q b(w)|.
/// Throws std::domain_error at the singularity 1 + q b(w) = 0.
double psi(const EquidistantMetric& g, double q, double w);

/// dψ/dw = -q b'(w) / (2 (1 + q b(w))).
double psi_prime(const EquidistantMetric& g, double q, double w);

/// Scans b over the domain (2048 samples, golden-section refinement) and
/// returns the admissible q ranges.
QAdmissibility admissible_q_range(const EquidistantMetric& g);

/// True iff the mapping with this q is non-affine: q != 0 and b' does not
/// vanish identically (checked on `samples` uniform points against a
/// machine-scale threshold).
bool is_nontrivial(const EquidistantMetric& g, double q, int samples = 256);

/// Christoffel symbols of g at an interior w.  Throws std::domain_error at
/// a pole (b = 0) or where a = 0.
ChristoffelSet christoffel(const EquidistantMetric& g, double w);

/// Evaluates the Levi-Civita residual between g and its (p,q) image at w.
/// This is the module's central correctness oracle: the triple is
/// analytically zero, so anything above roundoff indicates a defect.
LeviCivitaResidual verify_levi_civita(const EquidistantMetric& g,
                                      const MappingParams& mp, double w);

}  // namespace georev

#endif  // GEOREV_MAPPING_HPP
