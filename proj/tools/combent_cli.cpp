// Command-line front end: exact comb entropies, asymptotic coefficients,
// sweeps, scaling fits and the self-check suite.

#include <omp.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "combent/asymptotics.hpp"
#include "combent/csv.hpp"
#include "combent/entropy.hpp"
#include "combent/errors.hpp"
#include "combent/oracles.hpp"
#include "combent/sweep.hpp"

namespace {

using nlohmann::json;

// Angles arrive either as plain decimals or as the exact literal pi/N; the
// latter matters because cusp experiments need k = pi/l to machine precision.
double parse_angle(const std::string& text) {
  try {
    if (text.rfind("pi/", 0) == 0) {
      std::size_t pos = 0;
      const long n = std::stol(text.substr(3), &pos);
      if (pos != text.size() - 3 || n == 0)
        throw comb::validation_error("angle: expected pi/N with integer N");
      return comb::pi / static_cast<double>(n);
    }
    if (text == "pi") return comb::pi;
    std::size_t pos = 0;
    const double value = std::stod(text, &pos);
    if (pos != text.size())
      throw comb::validation_error("angle: could not parse '" + text + "'");
    return value;
  } catch (const comb::validation_error&) {
    throw;
  } catch (const std::exception&) {
    throw comb::validation_error("angle: could not parse '" + text + "'");
  }
}

struct AngleInput {
  std::string k_text;
  double h = 0.0;
  bool has_k = false, has_h = false;

  comb::ChainParams resolve() const {
    if (has_k == has_h)
      throw comb::validation_error("exactly one of --k and --h is required");
    return has_k ? comb::ChainParams(parse_angle(k_text))
                 : comb::ChainParams::from_field(h);
  }
};

void add_angle_flags(CLI::App* cmd, AngleInput& angle) {
  // The default help flag claims -h, which collides with --h.
  cmd->set_help_flag("--help", "print help");
  auto* k_opt = cmd->add_option("--k", angle.k_text,
                                "Fermi angle k in (0, pi); decimal or pi/N");
  auto* h_opt =
      cmd->add_option("--h", angle.h, "magnetic field h = cos k, |h| <= 1");
  k_opt->excludes(h_opt);
  cmd->parse_complete_callback([&angle, k_opt, h_opt] {
    angle.has_k = k_opt->count() > 0;
    angle.has_h = h_opt->count() > 0;
  });
}

void emit(const std::string& payload, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out)
    throw comb::validation_error("cannot open output path " + output_path);
  out << payload;
}

std::string joined_command_line(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

// Geometric L schedule from --L-min/--L-max/--L-count, deduplicated after
// rounding.
std::vector<int> schedule_from(int L_min, int L_max, int L_count) {
  if (L_count < 2 || L_min < 1 || L_max <= L_min)
    throw comb::validation_error("L schedule requires L-min < L-max, count >= 2");
  std::vector<int> out;
  const double ratio = std::pow(static_cast<double>(L_max) / L_min,
                                1.0 / (L_count - 1));
  for (int i = 0; i < L_count; ++i) {
    const int L = static_cast<int>(std::lround(L_min * std::pow(ratio, i)));
    if (out.empty() || L != out.back()) out.push_back(L);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Comb entanglement in the critical XX chain"};
  app.require_subcommand(1);
  app.set_version_flag("--version", comb::version_string);

  int threads = 0;
  app.add_option("--threads", threads, "cap OpenMP worker count")
      ->check(CLI::PositiveNumber);

  std::string output_path;
  app.add_option("--output", output_path, "output file (default stdout)");

  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  // exact
  auto* exact = app.add_subcommand("exact", "exact entropy of an L-tooth comb");
  AngleInput exact_angle;
  add_angle_flags(exact, exact_angle);
  int exact_p = 0, exact_L = 0;
  exact->add_option("--p", exact_p, "tooth spacing")->required();
  exact->add_option("--L", exact_L, "number of teeth")->required();

  // coeffs
  auto* coeffs = app.add_subcommand("coeffs", "asymptotic coefficients E1, E2");
  AngleInput coeffs_angle;
  add_angle_flags(coeffs, coeffs_angle);
  int coeffs_p = 0;
  bool want_e2 = false;
  coeffs->add_option("--p", coeffs_p, "tooth spacing")->required();
  coeffs->add_flag("--e2", want_e2, "fail loudly if E2 is unavailable");

  // sweep-k
  auto* sweep_k = app.add_subcommand("sweep-k", "E1 against k for several p");
  std::vector<int> sweep_k_p = {1, 2, 3, 4, 5};
  int grid_points = comb::default_grid_points;
  sweep_k->add_option("--p", sweep_k_p, "spacings (repeatable)");
  sweep_k->add_option("--grid-points", grid_points, "interior k-grid size")
      ->check(CLI::PositiveNumber);

  // sweep-p
  auto* sweep_p = app.add_subcommand("sweep-p", "E1 against real p at k = pi/l");
  int ell = 0;
  double p_max = 20.0, resolution = 0.02;
  sweep_p->add_option("--ell", ell, "length scale l, k = pi/l")->required();
  sweep_p->add_option("--p-max", p_max, "largest spacing");
  sweep_p->add_option("--resolution", resolution, "real-p step, <= 0.05");

  // sweep-e2
  auto* sweep_e2_cmd = app.add_subcommand("sweep-e2", "E2 against k for several p");
  std::vector<int> sweep_e2_p = {2, 3};
  int e2_grid_points = comb::default_grid_points;
  sweep_e2_cmd->add_option("--p", sweep_e2_p, "spacings >= 2 (repeatable)");
  sweep_e2_cmd->add_option("--grid-points", e2_grid_points, "interior k-grid size")
      ->check(CLI::PositiveNumber);

  // fit
  auto* fit = app.add_subcommand("fit", "fit exact entropies to a L + b ln L + c");
  AngleInput fit_angle;
  add_angle_flags(fit, fit_angle);
  std::vector<int> fit_p = {1};
  int L_min = 0, L_max = 0, L_count = 0;
  fit->add_option("--p", fit_p, "spacings (repeatable)");
  fit->add_option("--L-min", L_min, "smallest L of a geometric schedule");
  fit->add_option("--L-max", L_max, "largest L");
  fit->add_option("--L-count", L_count, "schedule length");

  // verify
  auto* verify = app.add_subcommand("verify", "run the oracle self-checks");
  bool quick = false;
  verify->add_flag("--quick", quick, "reduced ranges, finishes in seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (threads > 0) omp_set_num_threads(threads);
  // sweep_to_csv prepends the version line itself.
  const std::vector<std::string> metadata = {
      "command: " + joined_command_line(argc, argv)};

  try {
    if (*exact) {
      const comb::ChainParams params = exact_angle.resolve();
      const auto result =
          comb::exact_entropy(comb::CombSpec(exact_L, exact_p), params);
      if (format == "csv") {
        std::ostringstream out;
        out << "# " << comb::version_string << "\n";
        for (const auto& line : metadata) out << "# " << line << "\n";
        out << "k,h,p,L,entropy_bits\n"
            << comb::format_full(params.k) << ',' << comb::format_full(params.field())
            << ',' << exact_p << ',' << exact_L << ','
            << comb::format_full(result.entropy_bits) << "\n";
        emit(out.str(), output_path);
      } else {
        const json doc = {{"k", params.k},
                          {"h", params.field()},
                          {"p", exact_p},
                          {"L", exact_L},
                          {"entropy_bits", result.entropy_bits},
                          {"eigenvalue_count", result.eigenvalues.size()}};
        emit(doc.dump(2) + "\n", output_path);
      }
    } else if (*coeffs) {
      const comb::ChainParams params = coeffs_angle.resolve();
      if (coeffs_p < 1) throw comb::validation_error("coeffs: p must be >= 1");
      const double e1 = comb::e1_coefficient(coeffs_p, params);
      json doc = {{"k", params.k},
                  {"h", params.field()},
                  {"p", coeffs_p},
                  {"e1", e1}};
      if (coeffs_p >= 2) {
        const auto co = comb::asymptotic_coeffs(coeffs_p, params);
        doc["e2"] = co.e2;
        doc["series_terms"] = co.series_terms_used;
        doc["series_tail_bound"] = co.series_tail_bound;
        doc["theta_star"] = co.branches.theta_star;
        doc["g_at_0"] = co.branches.g_at_0;
        doc["g_at_pi"] = co.branches.g_at_pi;
      } else {
        if (want_e2)
          throw comb::divergence_error("coeffs: E2 diverges at p = 1");
        doc["e2"] = "divergent (p=1)";
      }
      emit(doc.dump(2) + "\n", output_path);
    } else if (*sweep_k) {
      auto meta = metadata;
      meta.push_back("grid: " + std::to_string(grid_points) +
                     " interior points of (0, pi)");
      const auto rows =
          comb::sweep_e1_vs_k(sweep_k_p, comb::interior_k_grid(grid_points));
      emit(comb::sweep_to_csv(rows, comb::SweepKind::e1_vs_k, meta), output_path);
    } else if (*sweep_p) {
      auto meta = metadata;
      meta.push_back("grid: real p in [1, " + comb::format_full(p_max) +
                     "] step " + comb::format_full(resolution) + ", k = pi/" +
                     std::to_string(ell));
      const auto rows = comb::sweep_e1_vs_p(ell, p_max, resolution);
      emit(comb::sweep_to_csv(rows, comb::SweepKind::e1_vs_p, meta), output_path);
    } else if (*sweep_e2_cmd) {
      auto meta = metadata;
      meta.push_back("grid: " + std::to_string(e2_grid_points) +
                     " interior points of (0, pi)");
      const auto rows =
          comb::sweep_e2(sweep_e2_p, comb::interior_k_grid(e2_grid_points));
      emit(comb::sweep_to_csv(rows, comb::SweepKind::e2, meta), output_path);
    } else if (*fit) {
      const comb::ChainParams params = fit_angle.resolve();
      const std::vector<int> schedule =
          L_count > 0 ? schedule_from(L_min, L_max, L_count)
                      : comb::default_fit_L_values();
      std::vector<comb::FitRow> rows;
      for (int p : fit_p) {
        comb::FitRow row{comb::fit_scaling(p, params, schedule),
                         comb::e1_coefficient(p, params),
                         std::numeric_limits<double>::quiet_NaN()};
        if (p >= 2) row.e2_ref = comb::e2_coefficient(p, params);
        rows.push_back(row);
      }
      auto meta = metadata;
      std::string sched = "L schedule:";
      for (int L : schedule) sched += ' ' + std::to_string(L);
      meta.push_back(sched);
      emit(comb::fits_to_csv(rows, meta), output_path);
    } else if (*verify) {
      const auto results = comb::oracles::run_verification(quick);
      bool all_pass = true;
      std::ostringstream out;
      for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name
            << "  max_dev=" << comb::format_full(r.max_dev)
            << " tol=" << comb::format_full(r.tol) << "\n";
      }
      emit(out.str(), output_path);
      if (!all_pass) return 1;
    }
  } catch (const comb::validation_error& e) {
    std::cerr << "error: validation: " << e.what() << "\n";
    return 2;
  } catch (const comb::numerical_error& e) {
    std::cerr << "error: numerical: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
