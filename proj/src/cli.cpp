#include "bym/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bym/bundle.hpp"
#include "bym/core.hpp"
#include "bym/io.hpp"
#include "bym/metric.hpp"
#include "bym/yangmills.hpp"

namespace bym {

namespace {

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::filesystem::path resolve_out_path(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("BYM_OUT_DIR")) p = std::filesystem::path(dir) / p;
  }
  return p;
}

void emit(const std::string& payload, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << payload;
    return;
  }
  const auto path = resolve_out_path(out_path);
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  f << payload;
}

struct VerifyOptions {
  YmConfig config;
  std::string format = "json";
  std::string out_path;
  bool both_cases = false;
};

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  YmConfig config = opt.config;
  if (opt.format == "human")
    config.on_sample = [&err](int sample, double max_residual) {
      err << "sample " << sample << " done, max residual " << max_residual << "\n";
    };

  bool all_passed = true;
  std::vector<YmReport> reports;
  for (int pass = 0; pass < (opt.both_cases ? 2 : 1); ++pass) {
    if (opt.both_cases) config.normalized = (pass == 1);
    reports.push_back(verify_yang_mills(config));
    all_passed = all_passed && reports.back().passed;
  }

  std::string payload;
  for (const YmReport& report : reports) {
    if (opt.format == "csv") {
      payload += report_to_csv(report);
    } else if (opt.format == "human") {
      payload += "dim " + std::to_string(report.dim) +
                 (report.normalized ? " (normalized)" : " (unnormalized)") + ", " +
                 std::to_string(report.samples) + " samples: max residual " +
                 fmt17(report.max_residual) + ", scale " + fmt17(report.scale) +
                 ", tolerance " + fmt17(report.tolerance) +
                 (report.passed ? " -> PASS" : " -> FAIL") + "\n";
    } else {
      payload += report_to_json(report).dump() + "\n";
    }
  }
  emit(payload, opt.out_path, out);
  return all_passed ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bures geometry toolkit: Uhlmann connection, curvature, and a "
               "numerical check of the source-free Yang-Mills equation"};
  app.require_subcommand(1);

  // verify ------------------------------------------------------------------
  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "run a Yang-Mills verification campaign");
  verify->add_option("--dim", vopt.config.dim, "Hilbert space dimension")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopt.config.seed, "PRNG seed");
  verify->add_option("--samples", vopt.config.samples, "number of sampled base points")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol", vopt.config.tolerance,
                     "relative residual tolerance (default depends on dim)");
  verify->add_option("--cond-cap", vopt.config.cond_cap,
                     "eigenvalue-ratio cap for sampled density matrices")
      ->check(CLI::Range(1.0, 1e16));
  verify->add_flag("--normalized", vopt.config.normalized,
                   "verify on trace-one states");
  verify->add_flag("--both-cases", vopt.both_cases,
                   "verify the unnormalized and normalized cases in turn");
  verify->add_option("--format", vopt.format, "json|csv|human")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  verify->add_option("--out", vopt.out_path, "write the report here instead of stdout");

  // distance ----------------------------------------------------------------
  std::string rho_path, mu_path, dist_format = "human";
  auto* distance = app.add_subcommand("distance",
                                      "Bures distance between two trace-one states");
  distance->add_option("rho", rho_path, "first state (matrix JSON)")->required();
  distance->add_option("mu", mu_path, "second state (matrix JSON)")->required();
  distance->add_option("--format", dist_format, "json|human")
      ->check(CLI::IsMember({"json", "human"}));

  // metric ------------------------------------------------------------------
  std::string md_path, mx_path, my_path;
  auto* metric = app.add_subcommand("metric", "Bures metric pairing g^B(X, Y) at D");
  metric->add_option("density", md_path, "base point D (matrix JSON)")->required();
  metric->add_option("x", mx_path, "first tangent (hermitian)")->required();
  metric->add_option("y", my_path, "second tangent (hermitian)")->required();

  // curvature ---------------------------------------------------------------
  std::string cw_path, cg_path, ct_path, curv_out;
  auto* curv = app.add_subcommand("curvature",
                                  "curvature Omega(GW, T) at a purification W");
  curv->add_option("w", cw_path, "purification W (matrix JSON)")->required();
  curv->add_option("g", cg_path, "hermitian generator G")->required();
  curv->add_option("t", ct_path, "tangent T")->required();
  curv->add_option("--out", curv_out, "write the result matrix here");

  // transport ---------------------------------------------------------------
  std::string curve_path, w0_path, trans_out;
  bool trans_normalized = false;
  auto* trans = app.add_subcommand("transport",
                                   "parallel transport along a curve of density matrices");
  trans->add_option("curve", curve_path, "JSON array of density matrices")->required();
  trans->add_option("w0", w0_path, "start purification over the first point")->required();
  trans->add_flag("--normalized", trans_normalized, "validate trace-one invariants");
  trans->add_option("--out", trans_out, "write the result here instead of stdout");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return 2;
  }

  try {
    if (*verify) return run_verify(vopt, out, err);

    if (*distance) {
      const DensityMatrix rho(read_matrix_file(rho_path), true);
      const DensityMatrix mu(read_matrix_file(mu_path), true);
      const double fid = fidelity_root(rho, mu);
      const double dist = bures_distance(rho, mu);
      if (dist_format == "json") {
        nlohmann::ordered_json j;
        j["bures_distance"] = dist;
        j["fidelity_root"] = fid;
        out << j.dump() << "\n";
      } else {
        out << "bures_distance " << fmt17(dist) << "\n";
        out << "fidelity_root " << fmt17(fid) << "\n";
      }
      return 0;
    }

    if (*metric) {
      const DensityMatrix d(read_matrix_file(md_path), false);
      const Matrix x = read_matrix_file(mx_path);
      const Matrix y = read_matrix_file(my_path);
      out << fmt17(bures_metric(d, x, y)) << "\n";
      return 0;
    }

    if (*curv) {
      const Purification w(read_matrix_file(cw_path), false);
      const Matrix g = read_matrix_file(cg_path);
      const Matrix t = read_matrix_file(ct_path);
      emit(write_matrix(curvature(w, g, t)), curv_out, out);
      return 0;
    }

    if (*trans) {
      const auto curve = read_curve_file(curve_path, trans_normalized);
      const Purification w0(read_matrix_file(w0_path), trans_normalized);
      const Purification wm = transport(curve, w0);
      const bool closed =
          frobenius(curve.back().mat() - curve.front().mat()) <=
          1e-12 * std::max(1.0, frobenius(curve.front().mat()));
      nlohmann::ordered_json j;
      j["steps"] = curve.size() - 1;
      j["closed"] = closed;
      j["final_w"] = matrix_to_json(wm.mat());
      if (closed) j["holonomy"] = matrix_to_json(holonomy(w0, wm));
      emit(j.dump() + "\n", trans_out, out);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace bym
