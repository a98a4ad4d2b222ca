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
#include <random>
#include <stdexcept>

#include "georev/ellipsoid.hpp"
#include "georev/mapping.hpp"
#include "georev/profile.hpp"

using namespace georev;

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;

EquidistantMetric sphere_metric() {
  return metric_from_profile(ellipsoid_profile(1.0));
}

EquidistantMetric cylinder_metric(double radius) {
  EquidistantMetric g;
  g.a = [](double) { return 1.0; };
  g.a_prime = [](double) { return 0.0; };
  g.b = [radius](double) { return radius * radius; };
  g.b_prime = [](double) { return 0.0; };
  g.w_min = 0.0;
  g.w_max = 1.0;
  g.fiber_dim = 1;
  return g;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

TEST_CASE("q = 0 gives a homothety by p") {
  const EquidistantMetric g = sphere_metric();
  const EquidistantMetric h = map_metric(g, {2.5, 0.0});
  for (double w : {0.4, 1.3, 2.2}) {
    CHECK(h.a(w) == doctest::Approx(2.5 * g.a(w)).epsilon(1e-15));
    CHECK(h.b(w) == doctest::Approx(2.5 * g.b(w)).epsilon(1e-15));
  }
}

TEST_CASE("p = 1, q = 0 is the identity") {
  const EquidistantMetric g = sphere_metric();
  const EquidistantMetric h = map_metric(g, {1.0, 0.0});
  for (double w : {0.4, pi / 2, 2.2}) {
    CHECK(h.a(w) == g.a(w));
    CHECK(h.b(w) == g.b(w));
    CHECK(h.a_prime(w) == g.a_prime(w));
    CHECK(h.b_prime(w) == g.b_prime(w));
  }
}

TEST_CASE("unit sphere, p=1, q=3 at the equator") {
  const EquidistantMetric h = map_metric(sphere_metric(), {1.0, 3.0});
  CHECK(h.a(pi / 2) == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
  CHECK(h.b(pi / 2) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("inadmissible q is rejected with the crossing point") {
  // b reaches 1 on the unit sphere, so q = -2 makes 1 + q b cross zero
  CHECK_THROWS_AS(map_metric(sphere_metric(), {1.0, -2.0}), std::domain_error);
  CHECK_THROWS_AS(map_metric(sphere_metric(), {0.0, 0.5}), std::domain_error);
}

TEST_CASE("psi values") {
  const EquidistantMetric g = sphere_metric();
  SUBCASE("q = 0 vanishes identically") {
    for (double w : {0.3, 1.0, 2.5}) {
      CHECK(psi(g, 0.0, w) == 0.0);
      CHECK(psi_prime(g, 0.0, w) == 0.0);
    }
  }
  SUBCASE("constant radius 1, q = 3 gives -ln 2") {
    const EquidistantMetric c = cylinder_metric(1.0);
    CHECK(psi(c, 3.0, 0.5) == doctest::Approx(-std::log(2.0)).epsilon(1e-15));
  }
  SUBCASE("unit sphere, q = 1 at the equator") {
    CHECK(psi(g, 1.0, pi / 2) == doctest::Approx(-0.5 * std::log(2.0)).epsilon(1e-15));
  }
}

TEST_CASE("admissible q ranges") {
  SUBCASE("unit sphere: positive definite (-1, inf), no Minkowski window") {
    const QAdmissibility adm = admissible_q_range(sphere_metric());
    CHECK(adm.positive_definite_min == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK_FALSE(adm.has_minkowski);
    CHECK(adm.positive_definite_contains(0.0));
    CHECK_FALSE(adm.admissible(-1.5));
  }
  SUBCASE("cylinder r=2: both ranges around the excluded gap at -1/4") {
    const QAdmissibility adm = admissible_q_range(cylinder_metric(2.0));
    CHECK(adm.positive_definite_min == doctest::Approx(-0.25).epsilon(1e-12));
    CHECK(adm.has_minkowski);
    CHECK(adm.minkowski_max == doctest::Approx(-0.25).epsilon(1e-12));
    CHECK(adm.admissible(-1.0));
    CHECK(adm.admissible(0.3));
    CHECK_FALSE(adm.admissible(-0.25));
  }
  SUBCASE("ellipsoid k: lower bound -1/k^2") {
    for (double k : {0.5, 2.0}) {
      const QAdmissibility adm =
          admissible_q_range(metric_from_profile(ellipsoid_profile(k)));
      CHECK(adm.positive_definite_min == doctest::Approx(-1.0 / (k * k)).epsilon(1e-9));
      CHECK_FALSE(adm.has_minkowski);
    }
  }
}

TEST_CASE("map_metric succeeds across the admissible range and fails at the gap") {
  const EquidistantMetric g = metric_from_profile(ellipsoid_profile(2.0));
  const QAdmissibility adm = admissible_q_range(g);
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 50; ++i) {
    const double q = adm.positive_definite_min * 0.999 * uniform01(rng) +
                     10.0 * uniform01(rng);
    CHECK_NOTHROW(map_metric(g, {1.0, q}));
  }
  // q exactly at an excluded point: 1 + q b = 0 at the equator (b_max = 4)
  CHECK_THROWS_AS(map_metric(g, {1.0, -0.25}), std::domain_error);
  CHECK_THROWS_AS(map_metric(g, {1.0, -0.3}), std::domain_error);
}

TEST_CASE("nontriviality") {
  const EquidistantMetric g = metric_from_profile(ellipsoid_profile(2.0));
  CHECK_FALSE(is_nontrivial(g, 0.0));
  CHECK(is_nontrivial(g, 0.5));
  CHECK_FALSE(is_nontrivial(cylinder_metric(1.5), 2.0));  // b' = 0: affine
}

TEST_CASE("christoffel symbols of the unit sphere") {
  const EquidistantMetric g = sphere_metric();
  SUBCASE("equator symmetry zeroes everything") {
    const ChristoffelSet c = christoffel(g, pi / 2);
    CHECK(std::abs(c.w_ww) < 1e-15);
    CHECK(std::abs(c.w_ss) < 1e-15);
    CHECK(std::abs(c.s_ws) < 1e-15);
  }
  SUBCASE("w = pi/4") {
    const ChristoffelSet c = christoffel(g, pi / 4);
    CHECK(c.w_ss == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(c.s_ws == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("pole evaluation is rejected") {
    CHECK_THROWS_AS(christoffel(g, 0.0), std::domain_error);
  }
}

TEST_CASE("christoffel symbols of the flat plane in polar form") {
  EquidistantMetric g;
  g.a = [](double) { return 1.0; };
  g.a_prime = [](double) { return 0.0; };
  g.b = [](double w) { return w * w; };
  g.b_prime = [](double w) { return 2.0 * w; };
  g.w_min = 0.1;
  g.w_max = 10.0;
  const ChristoffelSet c = christoffel(g, 1.0);
  CHECK(c.w_ww == 0.0);
  CHECK(c.w_ss == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(c.s_ws == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("Levi-Civita residuals vanish") {
  SUBCASE("q = 0 residuals are exactly zero") {
    const EquidistantMetric g = sphere_metric();
    for (double w : {0.5, 1.2, 2.7}) {
      const LeviCivitaResidual res = verify_levi_civita(g, {1.0, 0.0}, w);
      CHECK(res.w_ww == 0.0);
      CHECK(res.s_ws == 0.0);
      CHECK(res.w_ss == 0.0);
      // p = 2 is exact in binary arithmetic as well
      CHECK(verify_levi_civita(g, {2.0, 0.0}, w).max_abs() == 0.0);
    }
  }
  SUBCASE("unit sphere, p=1, q=3 at w = pi/3") {
    CHECK(verify_levi_civita(sphere_metric(), {1.0, 3.0}, pi / 3).max_abs() < 1e-12);
  }
  SUBCASE("random admissible (p,q) on spheres and ellipsoids") {
    std::mt19937_64 rng(777);
    for (double k : {1.0, 0.5, 2.0}) {
      const EquidistantMetric g = metric_from_profile(ellipsoid_profile(k));
      const QAdmissibility adm = admissible_q_range(g);
      for (int trial = 0; trial < 20; ++trial) {
        const double p = 0.1 + 9.9 * uniform01(rng);
        const double q = adm.positive_definite_min * 0.95 +
                         (10.0 - adm.positive_definite_min * 0.95) * uniform01(rng);
        for (int i = 1; i <= 100; ++i) {
          const double w = pi * i / 101.0;
          CHECK(verify_levi_civita(g, {p, q}, w).max_abs() < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("composition of q-maps adds the parameters (p = 1)") {
  const EquidistantMetric g = metric_from_profile(ellipsoid_profile(2.0));
  const double q1 = 0.7, q2 = 1.9;
  const EquidistantMetric once = map_metric(map_metric(g, {1.0, q1}), {1.0, q2});
  const EquidistantMetric direct = map_metric(g, {1.0, q1 + q2});
  for (int i = 1; i <= 30; ++i) {
    const double w = pi * i / 31.0;
    CHECK(std::abs(once.a(w) - direct.a(w)) < 1e-12);
    CHECK(std::abs(once.b(w) - direct.b(w)) < 1e-12);
    CHECK(std::abs(once.a_prime(w) - direct.a_prime(w)) < 1e-12);
    CHECK(std::abs(once.b_prime(w) - direct.b_prime(w)) < 1e-12);
  }
}

TEST_CASE("homothety followed by its inverse is the identity") {
  const EquidistantMetric g = metric_from_profile(ellipsoid_profile(0.5));
  const double p = 3.7;
  const EquidistantMetric round = map_metric(map_metric(g, {p, 0.0}), {1.0 / p, 0.0});
  for (int i = 1; i <= 30; ++i) {
    const double w = pi * i / 31.0;
    CHECK(round.a(w) == doctest::Approx(g.a(w)).epsilon(1e-14));
    CHECK(round.b(w) == doctest::Approx(g.b(w)).epsilon(1e-14));
  }
}

TEST_CASE("Minkowski-range q flips the fiber sign only") {
  const EquidistantMetric g = cylinder_metric(2.0);  // b = 4
  const EquidistantMetric h = map_metric(g, {1.0, -1.0});
  for (double w : {0.1, 0.5, 0.9}) {
    CHECK(h.a(w) > 0.0);
    CHECK(h.b(w) < 0.0);
  }
}

TEST_CASE("Levi-Civita residuals also vanish in the Minkowski regime") {
  // torus: b ranges over [1, 9], so q < -1 keeps 1 + q b negative throughout
  RevolutionProfile torus;
  torus.w_min = 0.0;
  torus.w_max = 2.0 * pi;
  torus.kind = ProfileKind::closed_form;
  torus.r = [](double w) { return 2.0 + std::cos(w); };
  torus.r_prime = [](double w) { return -std::sin(w); };
  torus.r_second = [](double w) { return -std::cos(w); };
  torus.z = [](double w) { return std::sin(w); };
  torus.z_prime = [](double w) { return std::cos(w); };
  torus.z_second = [](double w) { return -std::sin(w); };
  const EquidistantMetric g = metric_from_profile(torus);

  const QAdmissibility adm = admissible_q_range(g);
  CHECK(adm.has_minkowski);
  CHECK(adm.minkowski_max == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(adm.positive_definite_min == doctest::Approx(-1.0 / 9.0).epsilon(1e-9));

  for (int i = 1; i < 50; ++i) {
    const double w = 2.0 * pi * i / 50.0;
    CHECK(verify_levi_civita(g, {1.5, -2.0}, w).max_abs() < 1e-10);
  }
}
