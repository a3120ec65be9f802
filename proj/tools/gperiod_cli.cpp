// Command-line front end: analyze, solve, oracle, gallery, crosscheck.
// JSON goes to stdout, a short human summary to stderr.
// Exit status: 0 success / PASS, 1 engine or usage error, 2 expectation FAIL.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "gperiod/contraction.hpp"
#include "gperiod/error.hpp"
#include "gperiod/finite_oracle.hpp"
#include "gperiod/gallery.hpp"
#include "gperiod/instance_io.hpp"
#include "gperiod/periodic_solver.hpp"

namespace {

using nlohmann::json;
using namespace gperiod;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFail = 2;

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

int run_analyze(const std::string& input, std::uint64_t order, std::uint64_t index_cap, bool emit_samples) {
  const Instance inst = load_instance_file(input);
  const ContractionReport report = analyze(inst, order, index_cap);
  emit(report_json(inst, report, emit_samples));
  std::cerr << "order " << order << ": " << to_string(report.verdict) << ", alpha_min " << report.alpha_min
            << (report.exact ? " (exhaustive)" : " (sampled)") << '\n';
  return kExitOk;
}

int run_solve(const std::string& input, std::uint64_t order, const std::string& start, const SolveOptions& opts) {
  const Instance inst = load_instance_file(input);
  const PeriodicSolution sol = solve(inst, order, parse_point(inst.space(), start), opts);
  emit(solution_json(inst, sol));
  std::cerr << "case " << to_string(sol.solution_case) << ", prime period " << sol.period << " (divides " << order
            << "), representative " << point_label(inst.space(), sol.representative) << ", residual "
            << sol.residual << '\n';
  return kExitOk;
}

int run_oracle(const std::string& input, std::uint64_t order, bool full_scan) {
  const Instance inst = load_instance_file(input);
  const OracleResult result = enumerate_periodic(inst, order, full_scan);
  emit(oracle_json(inst, result));
  std::cerr << result.periodic_points.size() << " periodic points in " << result.orbits.size() << " orbits"
            << (result.divisor_ok ? "" : " (divisor check failed)") << '\n';
  return kExitOk;
}

int run_gallery_command(const std::string& id_text, std::optional<double> a, std::optional<double> b) {
  const GalleryId id = parse_gallery_id(id_text);
  GalleryParams params;
  if (a || b) {
    if (id != GalleryId::Example23 && id != GalleryId::Example24) {
      throw Error(ErrorCode::BadParams, std::string(to_string(id)) + " takes no --a/--b parameters");
    }
    params.a = a.value_or(params.a);
    params.b = b.value_or(params.b);
  }
  const GalleryCase gc = build_case(id, params);
  const GalleryReport report = run_gallery(gc, [](const CheckOutcome& c) {
    std::cerr << (c.pass ? "PASS " : "FAIL ") << c.instance << ": " << c.name << " -- " << c.detail << '\n';
  });
  emit(gallery_json(report));
  std::cerr << to_string(id) << ": " << (report.pass() ? "PASS" : "FAIL") << '\n';
  return report.pass() ? kExitOk : kExitFail;
}

int run_crosscheck(const std::string& input, std::uint64_t order, const std::string& start) {
  const Instance inst = load_instance_file(input);
  if (inst.finite_space() == nullptr) throw Error(ErrorCode::BadParams, "crosscheck needs a finite instance");
  const PeriodicSolution sol = solve(inst, order, parse_point(inst.space(), start));
  const CrosscheckResult cr = crosscheck(inst, order, sol);
  emit(json{{"agree", cr.agree}, {"detail", cr.detail}, {"solution", solution_json(inst, sol)}});
  std::cerr << (cr.agree ? "Agree: " : "Disagree: ") << cr.detail << '\n';
  return cr.agree ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graphic contractions of order n: analysis, periodic-point solver and exhaustive oracle"};
  app.require_subcommand(1);

  std::string input;
  std::uint64_t order = 1;
  std::string start;

  auto* analyze_cmd = app.add_subcommand("analyze", "Estimate or compute the minimal contraction constant");
  std::uint64_t index_cap = kDefaultIndexSample;
  bool emit_samples = false;
  analyze_cmd->add_option("--input", input, "Instance file")->required()->check(CLI::ExistingFile);
  analyze_cmd->add_option("--order", order, "Order n")->required()->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--index-cap", index_cap, "Terms x_1..x_K sampled on sequence spaces")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_flag("--emit-samples", emit_samples, "Include every pointwise ratio");

  auto* solve_cmd = app.add_subcommand("solve", "Compute a periodic point by residue-subsequence iteration");
  SolveOptions opts;
  solve_cmd->add_option("--input", input, "Instance file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--order", order, "Order n")->required()->check(CLI::PositiveNumber);
  solve_cmd->add_option("--start", start, "Start point label")->required();
  solve_cmd->add_option("--tol", opts.tol, "Tail-bound tolerance")->capture_default_str();
  solve_cmd->add_option("--cluster-tol", opts.cluster_tol, "Limit clustering tolerance")->capture_default_str();
  solve_cmd->add_option("--max-outer", opts.max_outer, "Maximum T^n steps per subsequence")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* oracle_cmd = app.add_subcommand("oracle", "Enumerate periodic points of a finite map exhaustively");
  bool full_scan = false;
  oracle_cmd->add_option("--input", input, "Instance file")->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--order", order, "Order n")->required()->check(CLI::PositiveNumber);
  oracle_cmd->add_flag("--full-scan", full_scan, "Try every period up to |X|, not only divisors of n");

  auto* gallery_cmd = app.add_subcommand("gallery", "Reproduce a built-in worked example");
  std::string id;
  std::optional<double> a;
  std::optional<double> b;
  gallery_cmd->add_option("--id", id, "example_2_2 | example_2_3 | example_2_4 | example_2_5")->required();
  gallery_cmd->add_option("--a", a, "Lower accumulation point (sequence examples)");
  gallery_cmd->add_option("--b", b, "Upper accumulation point (sequence examples)");

  auto* cross_cmd = app.add_subcommand("crosscheck", "Compare the solver against the exhaustive oracle");
  cross_cmd->add_option("--input", input, "Instance file")->required()->check(CLI::ExistingFile);
  cross_cmd->add_option("--order", order, "Order n")->required()->check(CLI::PositiveNumber);
  cross_cmd->add_option("--start", start, "Start point label")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*analyze_cmd) return run_analyze(input, order, index_cap, emit_samples);
    if (*solve_cmd) return run_solve(input, order, start, opts);
    if (*oracle_cmd) return run_oracle(input, order, full_scan);
    if (*gallery_cmd) return run_gallery_command(id, a, b);
    if (*cross_cmd) return run_crosscheck(input, order, start);
  } catch (const Error& e) {
    emit(json{{"error", to_string(e.code())}, {"message", e.what()}});
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
