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

#ifndef GEOREV_ELLIPTIC_HPP
#define GEOREV_ELLIPTIC_HPP

namespace georev {

/// Carlson's symmetric elliptic integral of the first kind,
///   R_F(x,y,z) = 1/2 ∫₀^∞ [(t+x)(t+y)(t+z)]^{-1/2} dt,
/// evaluated by the duplication theorem.  Arguments must be non-negative
/// with at most one of them zero.
double carlson_rf(double x, double y, double z);

/// Carlson's degenerate symmetric integral of the second kind,
///   R_D(x,y,z) = 3/2 ∫₀^∞ [(t+x)(t+y)]^{-1/2} (t+z)^{-3/2} dt,
/// with x,y ≥ 0 (at most one zero) and z > 0.
double carlson_rd(double x, double y, double z);

/// Incomplete elliptic integral of the first kind in modulus convention,
///   F(phi, kappa) = ∫₀^phi (1 - kappa² sin²θ)^{-1/2} dθ,
/// for 0 ≤ phi ≤ π/2 and 0 ≤ kappa < 1.
double incomplete_elliptic_F(double phi, double kappa);

/// Incomplete elliptic integral of the second kind in modulus convention,
///   E(phi, kappa) = ∫₀^phi (1 - kappa² sin²θ)^{1/2} dθ,
/// for 0 ≤ phi ≤ π/2 and 0 ≤ kappa < 1.
double incomplete_elliptic_E(double phi, double kappa);

}  // namespace georev

#endif  // GEOREV_ELLIPTIC_HPP
