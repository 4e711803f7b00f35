// Command-line front end: randomized verification runs, single-trial replay,
// and a viewer for the singular-value data of a matrix file.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "logmaj/error.hpp"
#include "logmaj/harness.hpp"
#include "logmaj/io.hpp"
#include "logmaj/spectral.hpp"

namespace {

using nlohmann::json;
using namespace logmaj;

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

void add_run_options(CLI::App* cmd, TrialConfig& cfg) {
  cmd->add_option("--delta", cfg.delta, "Strict contraction margin")->capture_default_str();
  cmd->add_option("--atol", cfg.atol, "Absolute tolerance")->capture_default_str();
  cmd->add_option("--rtol", cfg.rtol, "Relative tolerance")->capture_default_str();
  cmd->add_option("--k-max", cfg.k_max, "Maximum number of intervals in sampled K")->capture_default_str();
}

int run_verify(const TrialConfig& cfg) {
  validate(cfg);
  const SuiteReport report = run_suite(cfg);
  if (cfg.output.empty() || cfg.output == "-") {
    if (cfg.format == "csv") {
      std::cout << to_csv(report);
    } else {
      std::cout << to_json(report).dump(2) << '\n';
    }
  } else {
    write_report(report, cfg);
  }
  for (const auto& c : report.checkers) {
    std::cerr << c.checker << ": " << c.passes << " pass, " << c.vacuous << " vacuous, " << c.failures
              << " fail (min slack " << number_to_json(c.min_slack).dump() << ")\n";
  }
  return report.all_passed() ? 0 : kExitFailure;
}

int run_replay(const std::string& checker, std::size_t dim, std::uint64_t seed, const TrialConfig& cfg) {
  validate(cfg);
  const TrialResult t = run_trial(checker, dim, seed, cfg, true);
  json reports = json::array();
  for (const auto& r : t.reports) reports.push_back(to_json(r));
  json out = {{"checker", t.checker}, {"dim", t.dim},         {"seed", t.seed},
              {"outcome", to_string(t.outcome)}, {"inputs", t.inputs}, {"reports", reports}};
  if (!t.error.empty()) out["error"] = t.error;
  std::cout << out.dump(2) << '\n';
  return t.outcome == Outcome::kFail ? kExitFailure : 0;
}

int run_show(const std::string& input, const std::string& what) {
  const ComplexMatrix x = read_matrix_file(input);
  json out;
  if (what == "mu") {
    out = {{"mu", to_json(mu(x))}};
  } else if (what == "lambda") {
    out = {{"lambda", to_json(lambda_scale(x))}};
  } else if (what == "det") {
    out = {{"fk_det", fk_det(x)}, {"log_fk_det", number_to_json(log_fk_det(x).value())}};
  } else {
    const ComplexMatrix c = cayley(x);
    const ComplexMatrix defect = adjoint(c) * c - ComplexMatrix::identity(x.dim());
    out = {{"cayley", to_json(c)}, {"unitarity_residual", frobenius_norm(defect)}, {"mu", to_json(mu(c))}};
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomized checks of determinant and singular-value inequalities for contractions"};
  app.require_subcommand(1);

  TrialConfig cfg;
  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run the randomized suite");
  verify->add_option("--suite", suite, "Comma-separated checker ids, or all")->capture_default_str();
  verify->add_option("--trials", cfg.trials, "Trials per checker and dimension")->capture_default_str();
  verify->add_option("--dims", cfg.dims, "Comma-separated dimensions")->delimiter(',');
  verify->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
  verify->add_option("--format", cfg.format, "json or csv")->capture_default_str();
  verify->add_option("--output", cfg.output, "Report path (stdout when omitted)");
  verify->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)")->capture_default_str();
  add_run_options(verify, cfg);

  std::string checker;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  auto* replay = app.add_subcommand("replay", "Rerun a single trial from its seed");
  replay->add_option("--checker", checker, "Checker id")->required();
  replay->add_option("--dim", dim, "Dimension")->required();
  replay->add_option("--seed", seed, "Trial seed as printed in a report")->required();
  add_run_options(replay, cfg);

  std::string input;
  std::string what = "mu";
  auto* show = app.add_subcommand("show", "Print step functions and functionals of a matrix file");
  show->add_option("--input", input, "Matrix JSON file")->required();
  show->add_option("--what", what, "mu, lambda, det or cayley")
      ->check(CLI::IsMember({"mu", "lambda", "det", "cayley"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*verify) {
      cfg.suite.clear();
      std::stringstream ss(suite);
      for (std::string id; std::getline(ss, id, ',');) {
        if (!id.empty()) cfg.suite.push_back(id);
      }
      return run_verify(cfg);
    }
    if (*replay) return run_replay(checker, dim, seed, cfg);
    return run_show(input, what);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kConfigInvalid ? kExitConfig : kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
