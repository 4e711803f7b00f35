#pragma once

// Randomized suite runner over the inequality checkers.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "logmaj/inequalities.hpp"

namespace logmaj {

struct TrialConfig {
  /// Checker ids, or {"all"}.
  std::vector<std::string> suite{"all"};
  std::size_t trials = 1000;
  std::vector<std::size_t> dims{1, 2, 4, 8};
  std::uint64_t seed = 0;
  double delta = kDefaultDelta;
  double atol = 1e-9;
  double rtol = 1e-9;
  std::size_t k_max = 4;
  std::string output;
  std::string format = "json";
  /// 0 picks the hardware concurrency. LOGMAJ_THREADS caps either choice.
  std::size_t threads = 0;
};

/// Every checker id known to the runner, in report order.
const std::vector<std::string>& checker_ids();

/// Throws ConfigInvalid.
void validate(const TrialConfig& cfg);

/// Checker ids selected by cfg.suite, expanded and in report order.
std::vector<std::string> selected_checkers(const TrialConfig& cfg);

/// Worker count actually used for cfg.
std::size_t effective_threads(const TrialConfig& cfg);

struct TrialResult {
  std::string checker;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  Outcome outcome = Outcome::kPass;
  Reports reports;
  /// Set when the checker threw; the trial then counts as a failure.
  std::string error;
  /// Generated inputs, filled only on request.
  nlohmann::json inputs;
};

/// Regenerates the inputs for (checker, dim, seed) and runs the checker.
TrialResult run_trial(std::string_view checker, std::size_t dim, std::uint64_t seed, const TrialConfig& cfg,
                      bool capture_inputs = false);

struct CsvRow {
  std::string checker;
  std::size_t dim;
  std::size_t trial;
  double lhs;
  double rhs;
  double slack;
  bool pass;
  bool vacuous;
  std::uint64_t seed;
};

struct CheckerSummary {
  std::string checker;
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::size_t vacuous = 0;
  std::size_t failures = 0;
  /// Each entry: dim, trial, seed, inputs, failing reports or error.
  std::vector<nlohmann::json> failure_details;
  double min_slack = 0.0;
  /// dim, trial, seed, inputs and the report attaining min_slack.
  nlohmann::json argmin;
};

struct SuiteReport {
  nlohmann::json config;
  std::vector<CheckerSummary> checkers;
  double wall_time_seconds = 0.0;
  /// Populated only for format "csv".
  std::vector<CsvRow> rows;

  bool all_passed() const;
};

/// Throws ConfigInvalid.
SuiteReport run_suite(const TrialConfig& cfg);

nlohmann::json to_json(const SuiteReport& report, bool include_wall_time = true);
std::string to_csv(const SuiteReport& report);

/// Writes the report to cfg.output in cfg.format. Throws IoError.
void write_report(const SuiteReport& report, const TrialConfig& cfg);

}  // namespace logmaj
