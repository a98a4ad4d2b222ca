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

#include "georev/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "georev/ellipsoid.hpp"
#include "georev/geodesic.hpp"
#include "georev/mapping.hpp"
#include "georev/profile.hpp"
#include "georev/version.hpp"

namespace georev::cli {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;
constexpr int exit_ok = 0;
constexpr int exit_checks_failed = 1;
constexpr int exit_usage = 2;

// Deterministic uniform draws independent of the standard library's
// distribution implementations.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  return f;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream f = open_output(path);
  f << j.dump(2) << "\n";
}

RevolutionProfile profile_from_config(double k, const std::string& input_path) {
  if (!input_path.empty()) {
    std::ifstream in(input_path);
    if (!in) throw std::runtime_error("cannot open input file: " + input_path);
    return load_tabulated_profile(in);
  }
  if (!(k > 0.0)) throw std::domain_error("k must be positive");
  return ellipsoid_profile(k);
}

std::vector<double> parse_grid(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string field;
  while (std::getline(ss, field, ',')) {
    if (field.empty()) continue;
    std::size_t pos = 0;
    out.push_back(std::stod(field, &pos));
    if (pos != field.size()) throw std::invalid_argument("bad grid entry: " + field);
  }
  return out;
}

json pole_report_json(const PoleReport& rep) {
  const auto side = [](const PoleSideReport& s) {
    return json{{"is_pole", s.is_pole},
                {"smooth", s.smooth},
                {"r_end", s.r_end},
                {"r_prime_end", s.r_prime_end},
                {"z_prime_end", s.z_prime_end}};
  };
  return json{{"left", side(rep.left)}, {"right", side(rep.right)}};
}

// ---------------------------------------------------------------------------
// profile

struct ProfileOptions {
  double k = 0.0;
  std::string input;
  int n = 181;
  std::string out_path;
};

int cmd_profile(const ProfileOptions& opt, std::ostream& err) {
  try {
    const RevolutionProfile prof = profile_from_config(opt.k, opt.input);
    if (opt.n < 2) throw std::invalid_argument("need at least 2 samples");

    std::ofstream f = open_output(opt.out_path);
    f << "w,r,z\n";
    const double h = (prof.w_max - prof.w_min) / (opt.n - 1);
    for (int i = 0; i < opt.n; ++i) {
      const double w = (i == opt.n - 1) ? prof.w_max : prof.w_min + i * h;
      f << format_double(w) << ',' << format_double(prof.r(w)) << ','
        << format_double(prof.z(w)) << "\n";
    }

    const RevolutionProfile unit = arclength_reparameterize(prof);
    const PoleReport poles = pole_smoothness_check(unit, default_pole_tol(prof));
    const TopologyClass topo = classify_topology(prof, 1e-9);

    json sidecar{{"tool_version", version_string},
                 {"command", "profile"},
                 {"config",
                  {{"k", opt.k},
                   {"input", opt.input},
                   {"n", opt.n},
                   {"out", opt.out_path}}},
                 {"topology", to_string(topo)},
                 {"meridian_length", unit.w_max},
                 {"pole_report", pole_report_json(poles)}};
    write_json_file(opt.out_path + ".json", sidecar);
    return exit_ok;
  } catch (const std::exception& e) {
    err << "profile: " << e.what() << "\n";
    return exit_usage;
  }
}

// ---------------------------------------------------------------------------
// deform

struct DeformOptions {
  double k = 1.0;
  double a = 0.0;
  int n = 101;
  bool closed_form = false;
  std::string out_path;
};

int cmd_deform(const DeformOptions& opt, std::ostream& err) {
  try {
    if (!(opt.k > 0.0)) throw std::domain_error("k must be positive");
    if (opt.n < 2) throw std::invalid_argument("need at least 2 samples");
    const bool closed_supported = opt.k <= 1.0 + 1e-12 && (opt.a > 0.0 || opt.k == 1.0);
    if (opt.closed_form && opt.k > 1.0)
      throw std::domain_error("closed form requires k<1");
    if (opt.closed_form && !closed_supported)
      throw std::domain_error("closed form requires k<1 and a>0");
    if (!(1.0 + opt.a * opt.k * opt.k > 0.0))
      throw std::domain_error("deformation undefined: 1 + a k² <= 0");

    const double k = opt.k, a = opt.a;
    std::ofstream f = open_output(opt.out_path);
    f << "r_hat,z_hat,slope\n";
    double max_discrepancy = 0.0;
    double max_circle_dev = 0.0;
    for (int i = 0; i < opt.n; ++i) {
      const double r_hat = k * static_cast<double>(i) / (opt.n - 1);
      const double z_quad = meridian_z_quadrature(k, a, r_hat);
      const double z_hat =
          (opt.closed_form && closed_supported) ? meridian_z_closed(k, a, r_hat) : z_quad;
      const double slope =
          (i == opt.n - 1) ? std::numeric_limits<double>::infinity()
                           : meridian_slope(k, a, r_hat);
      f << format_double(r_hat) << ',' << format_double(z_hat) << ','
        << format_double(slope) << "\n";
      if (closed_supported)
        max_discrepancy =
            std::max(max_discrepancy, std::abs(meridian_z_closed(k, a, r_hat) - z_quad));
      max_circle_dev = std::max(
          max_circle_dev,
          std::abs(std::hypot(r_hat, z_quad - 1.0) - 1.0));  // vs unit circle (k = 1)
    }

    json sidecar{{"tool_version", version_string},
                 {"command", "deform"},
                 {"config",
                  {{"k", k},
                   {"a", a},
                   {"n", opt.n},
                   {"closed_form", opt.closed_form},
                   {"out", opt.out_path}}},
                 {"r_bar_max", k / std::sqrt(1.0 + a * k * k)},
                 {"equator_shift", meridian_z_quadrature(k, a, k) - 1.0},
                 {"closed_form_supported", closed_supported}};
    if (closed_supported)
      sidecar["closed_quadrature_max_discrepancy"] = max_discrepancy;
    sidecar["circle_invariant"] =
        std::abs(k - 1.0) <= 1e-9 && max_circle_dev < 1e-10;
    write_json_file(opt.out_path + ".json", sidecar);
    return exit_ok;
  } catch (const std::exception& e) {
    err << "deform: " << e.what() << "\n";
    return exit_usage;
  }
}

// ---------------------------------------------------------------------------
// metric

struct MetricOptions {
  double k = 1.0;
  double a = 0.0;
  std::string which = "pullback";
  int n = 101;
  std::string out_path;
};

int cmd_metric(const MetricOptions& opt, std::ostream& err) {
  try {
    if (!(opt.k > 0.0)) throw std::domain_error("k must be positive");
    if (opt.n < 1) throw std::invalid_argument("need at least 1 sample");
    const double r_lo = 1e-3 * opt.k;
    const double r_hi = (1.0 - 1e-3) * opt.k;
    EquidistantMetric g;
    if (opt.which == "original")
      g = original_ellipsoid_metric(opt.k, r_lo, r_hi);
    else if (opt.which == "pullback")
      g = pullback_metric(opt.k, opt.a, r_lo, r_hi);
    else if (opt.which == "deformed")
      g = deformed_surface_metric(opt.k, opt.a, r_lo, r_hi);
    else
      throw std::invalid_argument("--which must be original, pullback, or deformed");

    std::ofstream f = open_output(opt.out_path);
    f << "r,g_rr,g_ss\n";
    for (int i = 0; i < opt.n; ++i) {
      const double r = opt.k * static_cast<double>(i + 1) / (opt.n + 1);
      f << format_double(r) << ',' << format_double(g.a(r)) << ','
        << format_double(g.b(r)) << "\n";
    }
    json sidecar{{"tool_version", version_string},
                 {"command", "metric"},
                 {"config",
                  {{"k", opt.k},
                   {"a", opt.a},
                   {"which", opt.which},
                   {"n", opt.n},
                   {"out", opt.out_path}}}};
    write_json_file(opt.out_path + ".json", sidecar);
    return exit_ok;
  } catch (const std::exception& e) {
    err << "metric: " << e.what() << "\n";
    return exit_usage;
  }
}

// ---------------------------------------------------------------------------
// geodesic

struct GeodesicOptions {
  double k = 1.0;
  std::string input;
  double p = 1.0;
  double q = 0.0;
  double w0 = pi / 2;
  double sigma0 = 0.0;
  double theta = pi / 4;
  double t_end = 5.0;
  double tol = 1e-10;
  std::string out_path;
};

int cmd_geodesic(const GeodesicOptions& opt, std::ostream& err) {
  try {
    const RevolutionProfile prof = profile_from_config(opt.k, opt.input);
    EquidistantMetric g = metric_from_profile(prof);
    if (opt.q != 0.0 || opt.p != 1.0) g = map_metric(g, {opt.p, opt.q});

    GeodesicState init;
    init.w = opt.w0;
    init.sigma = opt.sigma0;
    init.w_dot = std::cos(opt.theta) / std::sqrt(g.a(opt.w0));
    init.sigma_dot = std::sin(opt.theta) / std::sqrt(g.b(opt.w0));

    const GeodesicTrace trace = integrate_geodesic(g, init, opt.t_end, opt.tol);

    std::ofstream f = open_output(opt.out_path);
    f << "t,w,sigma,w_dot,sigma_dot,clairaut\n";
    for (const TraceSample& s : trace.samples) {
      f << format_double(s.t) << ',' << format_double(s.state.w) << ','
        << format_double(s.state.sigma) << ',' << format_double(s.state.w_dot) << ','
        << format_double(s.state.sigma_dot) << ','
        << format_double(clairaut_invariant(g, s.state)) << "\n";
    }

    const char* stop = "completed";
    switch (trace.stop) {
      case StopReason::completed: break;
      case StopReason::pole_contact: stop = "pole_contact"; break;
      case StopReason::domain_exit: stop = "domain_exit"; break;
      case StopReason::step_underflow: stop = "step_underflow"; break;
    }
    json sidecar{{"tool_version", version_string},
                 {"command", "geodesic"},
                 {"config",
                  {{"k", opt.k},
                   {"input", opt.input},
                   {"p", opt.p},
                   {"q", opt.q},
                   {"w0", opt.w0},
                   {"sigma0", opt.sigma0},
                   {"theta", opt.theta},
                   {"t_end", opt.t_end},
                   {"tol", opt.tol},
                   {"out", opt.out_path}}},
                 {"stop_reason", stop},
                 {"t_reached", trace.t_reached},
                 {"accepted_steps", trace.stats.accepted_steps},
                 {"rejected_steps", trace.stats.rejected_steps},
                 {"clairaut_drift", clairaut_drift(trace)},
                 {"speed_drift", speed_drift(trace)}};
    write_json_file(opt.out_path + ".json", sidecar);
    return exit_ok;
  } catch (const std::exception& e) {
    err << "geodesic: " << e.what() << "\n";
    return exit_usage;
  }
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  double k = 1.0;
  std::string input;
  double p = 1.0;
  double q = 0.0;
  int points = 100;
  int geodesics = 0;
  unsigned long long seed = 0;
  double tol = 1e-10;
  double t_end = 5.0;
  double lc_tol = 1e-10;
  std::string out_path;  // empty = stdout
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  EquidistantMetric g;
  try {
    const RevolutionProfile prof = profile_from_config(opt.k, opt.input);
    g = metric_from_profile(prof);
    if (opt.points < 1) throw std::invalid_argument("--points must be >= 1");
    if (opt.geodesics < 0) throw std::invalid_argument("--geodesics must be >= 0");

    const QAdmissibility adm = admissible_q_range(g);
    if (!adm.admissible(opt.q)) {
      std::ostringstream msg;
      msg << "q = " << opt.q << " is inadmissible; positive-definite range ("
          << adm.positive_definite_min << ", inf)";
      if (adm.has_minkowski)
        msg << ", Minkowski range (-inf, " << adm.minkowski_max << ")";
      throw std::domain_error(msg.str());
    }
    if (opt.geodesics > 0 && !adm.positive_definite_contains(opt.q))
      throw std::domain_error(
          "geodesic verification requires q in the positive-definite range (" +
          std::to_string(adm.positive_definite_min) + ", inf)");
  } catch (const std::exception& e) {
    err << "verify: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    const MappingParams mp{opt.p, opt.q};
    const double span = g.w_max - g.w_min;

    double residual_max = 0.0;
    for (int i = 0; i < opt.points; ++i) {
      const double w = g.w_min + span * (i + 1) / (opt.points + 1);
      residual_max = std::max(residual_max, verify_levi_civita(g, mp, w).max_abs());
    }
    const bool lc_passed = residual_max <= opt.lc_tol;

    json runs = json::array();
    bool geo_passed = true;
    double deviation_max = 0.0;
    double drift_max = 0.0;
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < opt.geodesics; ++i) {
      GeodesicState init;
      init.w = uniform_in(rng, g.w_min + 0.1 * span, g.w_max - 0.1 * span);
      init.sigma = uniform_in(rng, 0.0, 2.0 * pi);
      const double theta = uniform_in(rng, 0.0, 2.0 * pi);
      init.w_dot = std::cos(theta) / std::sqrt(g.a(init.w));
      init.sigma_dot = std::sin(theta) / std::sqrt(g.b(init.w));
      const EquivalenceReport rep =
          verify_geodesic_equivalence(g, mp, init, opt.t_end, opt.tol);
      runs.push_back({{"index", i},
                      {"w0", init.w},
                      {"sigma0", init.sigma},
                      {"theta", theta},
                      {"deviation_max", rep.max_transverse_deviation},
                      {"clairaut_drift_g", rep.clairaut_drift_g},
                      {"clairaut_drift_gbar", rep.clairaut_drift_gbar},
                      {"passed", rep.passed}});
      geo_passed = geo_passed && rep.passed;
      deviation_max = std::max(deviation_max, rep.max_transverse_deviation);
      drift_max = std::max(drift_max,
                           std::max(rep.clairaut_drift_g, rep.clairaut_drift_gbar));
    }

    const bool passed = lc_passed && geo_passed;
    json report{{"tool_version", version_string},
                {"command", "verify"},
                {"config",
                 {{"k", opt.k},
                  {"input", opt.input},
                  {"p", opt.p},
                  {"q", opt.q},
                  {"points", opt.points},
                  {"geodesics", opt.geodesics},
                  {"seed", opt.seed},
                  {"tol", opt.tol},
                  {"t_end", opt.t_end},
                  {"lc_tol", opt.lc_tol},
                  {"out", opt.out_path}}},
                {"levi_civita",
                 {{"points", opt.points},
                  {"residual_max", residual_max},
                  {"passed", lc_passed}}},
                {"geodesic_equivalence", runs},
                {"residual_max", residual_max},
                {"deviation_max", deviation_max},
                {"clairaut_drift", drift_max},
                {"passed", passed}};
    if (opt.out_path.empty())
      out << report.dump(2) << "\n";
    else
      write_json_file(opt.out_path, report);
    return passed ? exit_ok : exit_checks_failed;
  } catch (const std::exception& e) {
    err << "verify: " << e.what() << "\n";
    return exit_usage;
  }
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOptions {
  double k = 1.0;
  std::string a_grid;
  std::string q_grid;
  int points = 100;
  std::string format = "csv";
  std::string out_path;
};

int cmd_sweep(const SweepOptions& opt, std::ostream& err) {
  try {
    if (!(opt.k > 0.0)) throw std::domain_error("k must be positive");
    const std::vector<double> a_values = parse_grid(opt.a_grid);
    const std::vector<double> q_values = parse_grid(opt.q_grid);
    if (a_values.empty() && q_values.empty())
      throw std::invalid_argument("empty grid: provide --a-grid or --q-grid");
    if (!a_values.empty() && !q_values.empty())
      throw std::invalid_argument("provide only one of --a-grid and --q-grid");
    if (opt.format != "csv" && opt.format != "json")
      throw std::invalid_argument("--format must be csv or json");

    const double k = opt.k;
    const EquidistantMetric g = metric_from_profile(ellipsoid_profile(k));
    const double span = g.w_max - g.w_min;
    const auto residual_over_points = [&](const MappingParams& mp) {
      double m = 0.0;
      for (int i = 0; i < opt.points; ++i) {
        const double w = g.w_min + span * (i + 1) / (opt.points + 1);
        m = std::max(m, verify_levi_civita(g, mp, w).max_abs());
      }
      return m;
    };

    json rows = json::array();
    if (!a_values.empty()) {
      for (const double a : a_values) {
        if (!(1.0 + a * k * k > 0.0))
          throw std::domain_error("deformation undefined for a = " + std::to_string(a));
        // distance of the rescaled deformed meridian to the radius-k circle
        // centered on the axis at height k (the large-a limit curve)
        double circle_distance = 0.0;
        constexpr int grid = 65;
        for (int i = 0; i < grid; ++i) {
          const double r_hat = k * static_cast<double>(i) / (grid - 1);
          const double z_hat = meridian_z_quadrature(k, a, r_hat);
          circle_distance = std::max(circle_distance,
                                     std::abs(std::hypot(r_hat, z_hat - k) - k));
        }
        rows.push_back({{"a", a},
                        {"r_bar_max", k / std::sqrt(1.0 + a * k * k)},
                        {"equator_shift", meridian_z_quadrature(k, a, k) - 1.0},
                        {"circle_distance", circle_distance},
                        {"lc_residual_max", residual_over_points({1.0, a})}});
      }
    } else {
      const QAdmissibility adm = admissible_q_range(g);
      for (const double q : q_values) {
        if (!adm.admissible(q))
          throw std::domain_error("q = " + std::to_string(q) +
                                  " is inadmissible; positive-definite range (" +
                                  std::to_string(adm.positive_definite_min) + ", inf)");
        rows.push_back({{"q", q}, {"lc_residual_max", residual_over_points({1.0, q})}});
      }
    }

    std::ofstream f = open_output(opt.out_path);
    if (opt.format == "json") {
      json doc{{"tool_version", version_string},
               {"command", "sweep"},
               {"config",
                {{"k", k},
                 {"a_grid", opt.a_grid},
                 {"q_grid", opt.q_grid},
                 {"points", opt.points},
                 {"format", opt.format},
                 {"out", opt.out_path}}},
               {"rows", rows}};
      f << doc.dump(2) << "\n";
    } else if (!a_values.empty()) {
      f << "a,r_bar_max,equator_shift,circle_distance,lc_residual_max\n";
      for (const auto& row : rows)
        f << format_double(row.at("a").get<double>()) << ','
          << format_double(row.at("r_bar_max").get<double>()) << ','
          << format_double(row.at("equator_shift").get<double>()) << ','
          << format_double(row.at("circle_distance").get<double>()) << ','
          << format_double(row.at("lc_residual_max").get<double>()) << "\n";
    } else {
      f << "q,lc_residual_max\n";
      for (const auto& row : rows)
        f << format_double(row.at("q").get<double>()) << ','
          << format_double(row.at("lc_residual_max").get<double>()) << "\n";
    }
    return exit_ok;
  } catch (const std::exception& e) {
    err << "sweep: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"geodesic mappings of surfaces of revolution"};
  app.require_subcommand(1);

  ProfileOptions popt;
  CLI::App* profile = app.add_subcommand("profile", "emit a meridian profile table");
  profile->add_option("--k", popt.k, "equatorial semi-axis of the ellipsoid");
  profile->add_option("--input", popt.input, "tabulated profile CSV (header w,r,z)");
  profile->add_option("--n", popt.n, "number of samples");
  profile->add_option("--out", popt.out_path, "output CSV path")->required();

  DeformOptions dopt;
  CLI::App* deform = app.add_subcommand("deform", "emit the deformed meridian table");
  deform->add_option("--k", dopt.k, "equatorial semi-axis")->required();
  deform->add_option("--a", dopt.a, "deformation parameter")->required();
  deform->add_option("--n", dopt.n, "number of samples");
  deform->add_flag("--closed-form", dopt.closed_form,
                   "use the elliptic-integral closed form (requires k < 1, a > 0)");
  deform->add_option("--out", dopt.out_path, "output CSV path")->required();

  MetricOptions mopt;
  CLI::App* metric = app.add_subcommand("metric", "emit metric coefficients over r");
  metric->add_option("--k", mopt.k, "equatorial semi-axis")->required();
  metric->add_option("--a", mopt.a, "deformation parameter");
  metric->add_option("--which", mopt.which, "original | pullback | deformed");
  metric->add_option("--n", mopt.n, "number of samples");
  metric->add_option("--out", mopt.out_path, "output CSV path")->required();

  GeodesicOptions gopt;
  CLI::App* geodesic = app.add_subcommand("geodesic", "integrate one geodesic");
  geodesic->add_option("--k", gopt.k, "equatorial semi-axis");
  geodesic->add_option("--input", gopt.input, "tabulated profile CSV");
  geodesic->add_option("--p", gopt.p, "homothety factor of the metric image");
  geodesic->add_option("--q", gopt.q, "deformation parameter of the metric image");
  geodesic->add_option("--w0", gopt.w0, "initial meridian parameter");
  geodesic->add_option("--sigma0", gopt.sigma0, "initial angle");
  geodesic->add_option("--theta", gopt.theta,
                       "tangent direction in the orthonormal frame");
  geodesic->add_option("--t-end", gopt.t_end, "affine parameter length");
  geodesic->add_option("--tol", gopt.tol, "integrator tolerance");
  geodesic->add_option("--out", gopt.out_path, "output CSV path")->required();

  VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand("verify", "run the equivalence checks");
  verify->add_option("--k", vopt.k, "equatorial semi-axis");
  verify->add_option("--input", vopt.input, "tabulated profile CSV");
  verify->add_option("--p", vopt.p, "homothety factor");
  verify->add_option("--q", vopt.q, "deformation parameter");
  verify->add_option("--points", vopt.points, "Levi-Civita residual sample points");
  verify->add_option("--geodesics", vopt.geodesics, "number of random geodesics");
  verify->add_option("--seed", vopt.seed, "random seed");
  verify->add_option("--tol", vopt.tol, "integrator tolerance");
  verify->add_option("--t-end", vopt.t_end, "geodesic parameter length");
  verify->add_option("--lc-tol", vopt.lc_tol, "Levi-Civita residual threshold");
  verify->add_option("--out", vopt.out_path, "report path (default: stdout)");

  SweepOptions sopt;
  CLI::App* sweep = app.add_subcommand("sweep", "summary scalars over a parameter grid");
  sweep->add_option("--k", sopt.k, "equatorial semi-axis")->required();
  sweep->add_option("--a-grid", sopt.a_grid, "comma-separated deformation parameters");
  sweep->add_option("--q-grid", sopt.q_grid, "comma-separated mapping parameters");
  sweep->add_option("--points", sopt.points, "residual sample points per row");
  sweep->add_option("--format", sopt.format, "csv | json");
  sweep->add_option("--out", sopt.out_path, "output path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return exit_usage;
  }

  if (profile->parsed()) return cmd_profile(popt, err);
  if (deform->parsed()) return cmd_deform(dopt, err);
  if (metric->parsed()) return cmd_metric(mopt, err);
  if (geodesic->parsed()) return cmd_geodesic(gopt, err);
  if (verify->parsed()) return cmd_verify(vopt, out, err);
  if (sweep->parsed()) return cmd_sweep(sopt, err);
  err << "no subcommand given\n";
  return exit_usage;
}

}  // namespace georev::cli
