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
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>

#include "georev/profile.hpp"
#include "georev/quadrature.hpp"

using namespace georev;

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;

RevolutionProfile unit_sphere_profile() {
  RevolutionProfile p;
  p.w_min = 0.0;
  p.w_max = pi;
  p.kind = ProfileKind::closed_form;
  p.r = [](double w) { return std::sin(w); };
  p.r_prime = [](double w) { return std::cos(w); };
  p.r_second = [](double w) { return -std::sin(w); };
  p.z = [](double w) { return 1.0 - std::cos(w); };
  p.z_prime = [](double w) { return std::sin(w); };
  p.z_second = [](double w) { return std::cos(w); };
  return p;
}

RevolutionProfile ellipse_profile(double k) {
  RevolutionProfile p;
  p.w_min = 0.0;
  p.w_max = pi;
  p.kind = ProfileKind::closed_form;
  p.r = [k](double w) { return k * std::sin(w); };
  p.r_prime = [k](double w) { return k * std::cos(w); };
  p.r_second = [k](double w) { return -k * std::sin(w); };
  p.z = [](double w) { return 1.0 - std::cos(w); };
  p.z_prime = [](double w) { return std::sin(w); };
  p.z_second = [](double w) { return std::cos(w); };
  return p;
}

RevolutionProfile cylinder_profile(double radius, double h0, double h1) {
  RevolutionProfile p;
  p.w_min = h0;
  p.w_max = h1;
  p.kind = ProfileKind::closed_form;
  p.r = [radius](double) { return radius; };
  p.r_prime = [](double) { return 0.0; };
  p.r_second = [](double) { return 0.0; };
  p.z = [](double w) { return w; };
  p.z_prime = [](double) { return 1.0; };
  p.z_second = [](double) { return 0.0; };
  return p;
}

std::string sphere_csv(int rows) {
  std::ostringstream csv;
  csv << "# unit sphere meridian\n";
  csv << "w,r,z\n";
  for (int i = 0; i < rows; ++i) {
    const double w = pi * i / (rows - 1);
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", w, std::sin(w),
                  1.0 - std::cos(w));
    csv << buf;
  }
  return csv.str();
}

}  // namespace

TEST_CASE("unit sphere metric: a = 1, b = sin^2 w") {
  const EquidistantMetric g = metric_from_profile(unit_sphere_profile());
  for (double w : {0.1, 0.7, pi / 2, 2.5}) {
    CHECK(g.a(w) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g.b(w) == doctest::Approx(std::sin(w) * std::sin(w)).epsilon(1e-15));
    CHECK(g.b_prime(w) ==
          doctest::Approx(2.0 * std::sin(w) * std::cos(w)).epsilon(1e-14));
  }
}

TEST_CASE("ellipse k=2 metric in the angular parameter") {
  const EquidistantMetric g = metric_from_profile(ellipse_profile(2.0));
  for (int i = 1; i < 20; ++i) {
    const double phi = pi * i / 20.0;
    const double expect =
        4.0 * std::cos(phi) * std::cos(phi) + std::sin(phi) * std::sin(phi);
    CHECK(g.a(phi) == doctest::Approx(expect).epsilon(1e-15));
  }
  CHECK(g.a(pi / 2) == doctest::Approx(1.0));
  CHECK(g.b(pi / 2) == doctest::Approx(4.0));
}

TEST_CASE("degenerate profile is rejected with the offending parameter") {
  // r'^2 + z'^2 vanishes at w = 0
  RevolutionProfile p;
  p.w_min = 0.0;
  p.w_max = 1.0;
  p.kind = ProfileKind::closed_form;
  p.r = [](double w) { return w * w; };
  p.r_prime = [](double w) { return 2.0 * w; };
  p.r_second = [](double) { return 2.0; };
  p.z = [](double) { return 0.0; };
  p.z_prime = [](double) { return 0.0; };
  p.z_second = [](double) { return 0.0; };
  CHECK_THROWS_AS(metric_from_profile(p), std::domain_error);
}

TEST_CASE("arclength reparameterization of an already unit-speed profile") {
  const RevolutionProfile u = arclength_reparameterize(unit_sphere_profile(), 1e-12);
  CHECK(u.w_min == 0.0);
  CHECK(u.w_max == doctest::Approx(pi).epsilon(1e-12));
  for (double s : {0.3, 1.1, 2.0, 2.9}) {
    CHECK(u.r(s) == doctest::Approx(std::sin(s)).epsilon(1e-10));
    CHECK(u.z(s) == doctest::Approx(1.0 - std::cos(s)).epsilon(1e-10));
  }
}

TEST_CASE("ellipse k=2 meridian length matches the quadrature oracle") {
  const RevolutionProfile u = arclength_reparameterize(ellipse_profile(2.0), 1e-12);
  const double oracle = integrate(
      [](double phi) {
        return std::sqrt(4.0 * std::cos(phi) * std::cos(phi) +
                         std::sin(phi) * std::sin(phi));
      },
      0.0, pi, 1e-13);
  CHECK(u.w_max == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(u.w_max == doctest::Approx(4.844224110273838).epsilon(1e-12));
}

TEST_CASE("reparameterized profiles are unit speed on interior points") {
  for (const double k : {2.0, 0.5}) {
    const RevolutionProfile u = arclength_reparameterize(ellipse_profile(k), 1e-12);
    const EquidistantMetric g = metric_from_profile(u);
    for (int i = 1; i <= 50; ++i) {
      const double s = u.w_max * i / 51.0;
      CHECK(std::abs(g.a(s) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("scaled circle arc parameterization keeps a = 1") {
  // radius-2 circle already parameterized by arc length
  RevolutionProfile p;
  p.w_min = 0.0;
  p.w_max = 2.0 * pi;
  p.kind = ProfileKind::closed_form;
  p.r = [](double w) { return 2.0 * std::sin(w / 2.0); };
  p.r_prime = [](double w) { return std::cos(w / 2.0); };
  p.r_second = [](double w) { return -0.5 * std::sin(w / 2.0); };
  p.z = [](double w) { return 2.0 - 2.0 * std::cos(w / 2.0); };
  p.z_prime = [](double w) { return std::sin(w / 2.0); };
  p.z_second = [](double w) { return 0.5 * std::cos(w / 2.0); };
  const RevolutionProfile u = arclength_reparameterize(p, 1e-12);
  const EquidistantMetric g = metric_from_profile(u);
  for (int i = 1; i <= 50; ++i) {
    const double s = u.w_max * i / 51.0;
    CHECK(std::abs(g.a(s) - 1.0) < 1e-12);
  }
}

TEST_CASE("pole smoothness: unit sphere has two smooth poles") {
  const PoleReport rep = pole_smoothness_check(unit_sphere_profile(), 1e-8);
  CHECK(rep.left.is_pole);
  CHECK(rep.left.smooth);
  CHECK(rep.right.is_pole);
  CHECK(rep.right.smooth);
}

TEST_CASE("pole smoothness: ellipsoids are smooth after reparameterization") {
  for (double k : {0.5, 2.0, 7.0}) {
    const RevolutionProfile u = arclength_reparameterize(ellipse_profile(k), 1e-12);
    const PoleReport rep = pole_smoothness_check(u, 1e-8);
    CHECK(rep.left.smooth);
    CHECK(rep.right.smooth);
    CHECK(std::abs(std::abs(rep.left.r_prime_end) - 1.0) < 1e-12);
    CHECK(std::abs(std::abs(rep.right.r_prime_end) - 1.0) < 1e-12);
  }
}

TEST_CASE("pole smoothness: cylinder endpoints are not poles") {
  const PoleReport rep = pole_smoothness_check(cylinder_profile(1.0, 0.0, 1.0), 1e-8);
  CHECK_FALSE(rep.left.is_pole);
  CHECK_FALSE(rep.right.is_pole);
}

TEST_CASE("topology classification") {
  CHECK(classify_topology(ellipse_profile(2.0)) == TopologyClass::sphere);
  CHECK(classify_topology(cylinder_profile(1.0, 0.0, 1.0)) == TopologyClass::cylinder);

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
  CHECK(classify_topology(torus) == TopologyClass::torus);

  RevolutionProfile disk;
  disk.w_min = 0.0;
  disk.w_max = 1.0;
  disk.kind = ProfileKind::closed_form;
  disk.r = [](double w) { return w; };
  disk.r_prime = [](double) { return 1.0; };
  disk.r_second = [](double) { return 0.0; };
  disk.z = [](double) { return 0.0; };
  disk.z_prime = [](double) { return 0.0; };
  disk.z_second = [](double) { return 0.0; };
  CHECK(classify_topology(disk) == TopologyClass::disk_or_plane);
}

TEST_CASE("topology is invariant under arclength reparameterization") {
  for (double k : {0.5, 1.0, 3.0}) {
    const RevolutionProfile p = ellipse_profile(k);
    CHECK(classify_topology(arclength_reparameterize(p, 1e-12)) ==
          classify_topology(p));
  }
  const RevolutionProfile c = cylinder_profile(2.0, -1.0, 1.0);
  CHECK(classify_topology(arclength_reparameterize(c, 1e-12)) ==
        TopologyClass::cylinder);
}

TEST_CASE("tabulated unit sphere: metric accurate at midpoints") {
  std::istringstream in(sphere_csv(101));
  const RevolutionProfile p = load_tabulated_profile(in);
  CHECK(p.kind == ProfileKind::tabulated);
  const EquidistantMetric g = metric_from_profile(p);
  double worst_a = 0.0, worst_b = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double w = pi * (i + 0.5) / 100.0;
    worst_a = std::max(worst_a, std::abs(g.a(w) - 1.0));
    worst_b = std::max(worst_b, std::abs(g.b(w) - std::sin(w) * std::sin(w)));
  }
  CHECK(worst_a < 1e-6);
  CHECK(worst_b < 1e-7);
}

TEST_CASE("tabulated sphere passes the tabulated-tier pole check") {
  std::istringstream in(sphere_csv(101));
  const RevolutionProfile p = load_tabulated_profile(in);
  const PoleReport rep = pole_smoothness_check(p, pole_tol_tabulated);
  CHECK(rep.left.smooth);
  CHECK(rep.right.smooth);
  CHECK(classify_topology(p, 1e-6) == TopologyClass::sphere);
}

TEST_CASE("CSV loader rejections") {
  SUBCASE("decreasing w names the row") {
    std::istringstream in("w,r,z\n0,0,0\n0.5,0.4,0.1\n0.4,0.6,0.2\n1,0.9,0.4\n");
    CHECK_THROWS_WITH_AS(load_tabulated_profile(in),
                         doctest::Contains("strictly increasing"),
                         std::invalid_argument);
  }
  SUBCASE("empty stream") {
    std::istringstream in("");
    CHECK_THROWS_WITH_AS(load_tabulated_profile(in), doctest::Contains("no data rows"),
                         std::invalid_argument);
  }
  SUBCASE("header only") {
    std::istringstream in("w,r,z\n");
    CHECK_THROWS_WITH_AS(load_tabulated_profile(in), doctest::Contains("no data rows"),
                         std::invalid_argument);
  }
  SUBCASE("wrong header") {
    std::istringstream in("w,radius,z\n0,0,0\n");
    CHECK_THROWS_WITH_AS(load_tabulated_profile(in), doctest::Contains("w,r,z"),
                         std::invalid_argument);
  }
  SUBCASE("malformed row reports the line") {
    std::istringstream in("w,r,z\n0,0,0\n0.5,abc,0.1\n0.7,0.4,0.2\n1,0.9,0.4\n");
    CHECK_THROWS_WITH_AS(load_tabulated_profile(in), doctest::Contains("line 3"),
                         std::invalid_argument);
  }
  SUBCASE("too few rows") {
    std::istringstream in("w,r,z\n0,0,0\n0.5,0.4,0.1\n1,0.9,0.4\n");
    CHECK_THROWS_WITH_AS(load_tabulated_profile(in), doctest::Contains("at least 4"),
                         std::invalid_argument);
  }
  SUBCASE("negative radius") {
    std::istringstream in("w,r,z\n0,0.5,0\n0.4,-0.1,0.1\n0.7,0.4,0.2\n1,0.9,0.4\n");
    CHECK_THROWS_WITH_AS(load_tabulated_profile(in), doctest::Contains("negative"),
                         std::invalid_argument);
  }
}
