#include "logmaj/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "logmaj/error.hpp"
#include "logmaj/io.hpp"
#include "logmaj/random.hpp"

namespace logmaj {

namespace {

using nlohmann::json;

struct Case {
  Reports reports;
  json inputs;
};

using CaseFn = std::function<Case(std::size_t n, SeedStream& s, const CheckOptions& opts, std::size_t k_max,
                                  bool capture)>;

json matrices_json(std::initializer_list<std::pair<const char*, const ComplexMatrix*>> named) {
  json out = json::object();
  for (const auto& [name, m] : named) out[name] = to_json(*m);
  return out;
}

Case harnack_middle_case(std::size_t n, SeedStream& s, const CheckOptions& opts, std::size_t, bool capture) {
  const ComplexMatrix x = gen_contraction(n, s.next(), opts.delta);
  Case c{check_harnack_middle(x, opts), {}};
  if (capture) c.inputs = matrices_json({{"x", &x}});
  return c;
}

Case re_im_case(std::size_t n, SeedStream& s, const CheckOptions& opts, std::size_t, bool capture) {
  const ComplexMatrix x = gen_gaussian(n, s.next());
  Case c{check_re_im_bounds(x, opts), {}};
  if (capture) c.inputs = matrices_json({{"x", &x}});
  return c;
}

Case cor_alpha_case(std::size_t n, SeedStream& s, const CheckOptions& opts, std::size_t, bool capture) {
  const ComplexMatrix x = gen_hermitian(n, s.next());
  const ComplexMatrix y = gen_gaussian(n, s.next());
  const double alpha = s.uniform(-2.0, 2.0);
  Case c{check_cor_alpha(x, y, alpha, opts), {}};
  if (capture) {
    c.inputs = matrices_json({{"x", &x}, {"y", &y}});
    c.inputs["alpha"] = alpha;
  }
  return c;
}

Case remark33_case(std::size_t n, SeedStream& s, const CheckOptions& opts, std::size_t, bool capture) {
  const ComplexMatrix x = gen_gaussian(n, s.next());
  const std::vector<double> ts{0.5, 1.0, 2.0, std::exp(s.uniform(std::log(0.1), std::log(10.0)))};
  Case c{check_remark33(x, ts, opts), {}};
  if (capture) {
    c.inputs = matrices_json({{"x", &x}});
    c.inputs["ts"] = ts;
  }
  return c;
}

// Odd draws build x = V(diag(a) ⊕ 0)V* and u = V(I ⊕ W)V*, for which
// tau|x - u| = tau|x - I| holds exactly; even draws use a Haar u, so part (2)
// is normally skipped.
Case prop35_case(std::size_t n, SeedStream& s, const CheckOptions& opts, std::size_t, bool capture) {
  const bool constructed = (s.next() & 1U) != 0;
  const ComplexMatrix v = haar_unitary(n, s.next());
  std::vector<double> eig(n, 0.0);
  ComplexMatrix u;
  if (constructed) {
    const std::size_t rank = n == 1 ? 1 : s.integer(1, n - 1);
    eig[0] = s.uniform(1.1, 5.0);
    for (std::size_t i = 1; i < rank; ++i) eig[i] = s.uniform(0.1, 5.0);
    ComplexMatrix block(n);
    for (std::size_t i = 0; i < rank; ++i) block(i, i) = 1.0;
    if (rank < n) {
      const ComplexMatrix w = haar_unitary(n - rank, s.next());
      for (std::size_t i = 0; i < n - rank; ++i) {
        for (std::size_t j = 0; j < n - rank; ++j) block(rank + i, rank + j) = w(i, j);
      }
    }
    u = v * block * adjoint(v);
  } else {
    eig[0] = s.uniform(1.1, 5.0);
    for (std::size_t i = 1; i < n; ++i) eig[i] = s.uniform(0.0, 5.0);
    u = haar_unitary(n, s.next());
  }
  const ComplexMatrix x = real_part(v * ComplexMatrix::diagonal(std::span<const double>(eig)) * adjoint(v));
  Case c{check_prop35(x, u, opts), {}};
  if (capture) {
    c.inputs = matrices_json({{"x", &x}, {"u", &u}});
    c.inputs["side_condition_constructed"] = constructed;
  }
  return c;
}

Case lemma36_case(std::size_t n, SeedStream& s, const CheckOptions& opts, std::size_t, bool capture) {
  const ComplexMatrix x = gen_positive_invertible(n, s.next());
  Case c{{check_lemma36(x, opts)}, {}};
  if (capture) c.inputs = matrices_json({{"x", &x}});
  return c;
}

Case lemma37_case(std::size_t n, SeedStream& s, const CheckOptions& opts, std::size_t, bool capture) {
  const bool positive = (s.next() & 1U) != 0;
  const ComplexMatrix x = positive ? gen_positive_contraction(n, s.next(), opts.delta) : gen_gaussian(n, s.next());
  Case c{check_lemma37(x, opts, positive), {}};
  if (capture) {
    c.inputs = matrices_json({{"x", &x}});
    c.inputs["with_item5"] = positive;
  }
  return c;
}

Case borel_case(std::size_t n, SeedStream& s, const CheckOptions& opts, std::size_t k_max, bool capture) {
  const ComplexMatrix x = gen_invertible(n, s.next());
  const ComplexMatrix y = gen_invertible(n, s.next());
  const IntervalSet k = gen_interval_set(s.next(), k_max);
  Case c{check_borel_lemma(x, y, k, opts), {}};
  if (capture) {
    c.inputs = matrices_json({{"x", &x}, {"y", &y}});
    c.inputs["K"] = to_json(k);
  }
  return c;
}

Case harnack_upper_case(std::size_t n, SeedStream& s, const CheckOptions& opts, std::size_t k_max, bool capture) {
  const ComplexMatrix x = gen_contraction(n, s.next(), opts.delta);
  const IntervalSet k = gen_interval_set(s.next(), k_max);
  Case c{check_harnack_upper(x, k, opts), {}};
  if (capture) {
    c.inputs = matrices_json({{"x", &x}});
    c.inputs["K"] = to_json(k);
  }
  return c;
}

Case harnack_lower_case(std::size_t n, SeedStream& s, const CheckOptions& opts, std::size_t k_max, bool capture) {
  const ComplexMatrix x = gen_contraction(n, s.next(), opts.delta);
  const IntervalSet k = gen_interval_set(s.next(), k_max);
  Case c{{check_harnack_lower(x, k, opts)}, {}};
  if (capture) {
    c.inputs = matrices_json({{"x", &x}});
    c.inputs["K"] = to_json(k);
  }
  return c;
}

Case corollary_case(std::size_t n, SeedStream& s, const CheckOptions& opts, std::size_t, bool capture) {
  const ComplexMatrix x = gen_contraction(n, s.next(), opts.delta);
  const std::vector<double> ts{0.25, 0.5, 0.75, 1.0, 1.0 - s.uniform()};
  Case c{check_harnack_corollary(x, ts, opts), {}};
  if (capture) {
    c.inputs = matrices_json({{"x", &x}});
    c.inputs["ts"] = ts;
  }
  return c;
}

Case weighted_case(std::size_t n, SeedStream& s, const CheckOptions& opts, std::size_t, bool capture) {
  const std::size_t count = s.integer(1, 3);
  std::vector<ComplexMatrix> xs;
  std::vector<double> ws;
  double total = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    xs.push_back(gen_positive_contraction(n, s.next(), opts.delta));
    ws.push_back(s.uniform(0.05, 1.0));
    total += ws.back();
  }
  for (auto& w : ws) w /= total;
  const ComplexMatrix u = haar_unitary(n, s.next());
  Case c{check_weighted(xs, ws, u, opts), {}};
  if (capture) {
    json list = json::array();
    for (const auto& x : xs) list.push_back(to_json(x));
    c.inputs = {{"xs", list}, {"weights", ws}, {"u", to_json(u)}};
  }
  return c;
}

Case cayley_case(std::size_t n, SeedStream& s, const CheckOptions& opts, std::size_t k_max, bool capture) {
  const ComplexMatrix x = gen_contraction(n, s.next(), opts.delta);
  const ComplexMatrix y = gen_contraction(n, s.next(), opts.delta);
  const IntervalSet k = gen_interval_set(s.next(), k_max);
  Case c{check_cayley(x, y, k, opts), {}};
  if (capture) {
    c.inputs = matrices_json({{"x", &x}, {"y", &y}});
    c.inputs["K"] = to_json(k);
  }
  return c;
}

Case tung_case(std::size_t n, SeedStream& s, const CheckOptions& opts, std::size_t, bool capture) {
  const ComplexMatrix z = gen_contraction(n, s.next(), opts.delta);
  const ComplexMatrix u = haar_unitary(n, s.next());
  std::vector<std::size_t> index_set;
  for (std::size_t k = 1; k <= n; ++k) {
    if (s.uniform() < 0.5) index_set.push_back(k);
  }
  if (index_set.empty()) index_set.push_back(s.integer(1, n));
  Case c{check_tung_matrix(z, u, index_set, opts), {}};
  if (capture) {
    c.inputs = matrices_json({{"z", &z}, {"u", &u}});
    c.inputs["index_set"] = index_set;
  }
  return c;
}

const std::vector<std::pair<std::string, CaseFn>>& registry() {
  static const std::vector<std::pair<std::string, CaseFn>> table{
      {"harnack_middle", harnack_middle_case},
      {"check_re_im_bounds", re_im_case},
      {"check_cor_alpha", cor_alpha_case},
      {"check_remark33", remark33_case},
      {"check_prop35", prop35_case},
      {"check_lemma36", lemma36_case},
      {"check_lemma37", lemma37_case},
      {"check_borel_lemma", borel_case},
      {"check_harnack_upper", harnack_upper_case},
      {"check_harnack_lower", harnack_lower_case},
      {"check_harnack_corollary", corollary_case},
      {"check_weighted", weighted_case},
      {"check_cayley", cayley_case},
      {"check_tung_matrix", tung_case},
  };
  return table;
}

const CaseFn* find_case(std::string_view id) {
  for (const auto& [name, fn] : registry()) {
    if (name == id) return &fn;
  }
  return nullptr;
}

CheckOptions options_of(const TrialConfig& cfg) { return {Tolerance{cfg.atol, cfg.rtol}, cfg.delta}; }

Outcome classify(const Reports& reports) {
  bool vacuous = false;
  for (const auto& r : reports) {
    if (r.outcome == Outcome::kFail) return Outcome::kFail;
    vacuous = vacuous || r.vacuous();
  }
  return vacuous ? Outcome::kVacuousPass : Outcome::kPass;
}

// What the merge step needs from a trial, without keeping every report alive.
struct TrialDigest {
  Outcome outcome = Outcome::kPass;
  std::optional<InequalityReport> tightest;
  std::vector<CsvRow> rows;
};

TrialDigest digest(const TrialResult& t, std::size_t trial, bool keep_rows) {
  TrialDigest d;
  d.outcome = t.outcome;
  for (const auto& r : t.reports) {
    if (r.skipped() || std::isnan(r.slack)) continue;
    if (!d.tightest || r.slack < d.tightest->slack) d.tightest = r;
  }
  if (keep_rows) {
    for (const auto& r : t.reports) {
      d.rows.push_back({t.checker, t.dim, trial, r.lhs, r.rhs, r.slack, r.passed(), r.vacuous(), t.seed});
    }
    if (!t.error.empty()) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      d.rows.push_back({t.checker, t.dim, trial, nan, nan, nan, false, false, t.seed});
    }
  }
  return d;
}

json failure_json(const TrialResult& t, std::size_t trial) {
  json reports = json::array();
  for (const auto& r : t.reports) {
    if (r.outcome == Outcome::kFail) reports.push_back(to_json(r));
  }
  json out = {{"dim", t.dim}, {"trial", trial}, {"seed", t.seed}, {"inputs", t.inputs}, {"reports", reports}};
  if (!t.error.empty()) out["error"] = t.error;
  return out;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

const std::vector<std::string>& checker_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return ids;
}

void validate(const TrialConfig& cfg) {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::kConfigInvalid, msg); };
  if (cfg.trials < 1) fail("trials must be at least 1");
  if (cfg.dims.empty()) fail("dims must not be empty");
  for (std::size_t d : cfg.dims) {
    if (d < 1 || d > 64) fail("dims must lie in [1, 64]");
  }
  if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) fail("delta must lie in (0, 1)");
  if (!(cfg.atol >= 0.0) || !(cfg.rtol >= 0.0)) fail("tolerances must be non-negative");
  if (cfg.k_max < 1) fail("k-max must be at least 1");
  if (cfg.format != "json" && cfg.format != "csv") fail("format must be json or csv");
  if (cfg.suite.empty()) fail("suite must not be empty");
  for (const auto& id : cfg.suite) {
    if (id != "all" && find_case(id) == nullptr) fail("unknown checker id: " + id);
  }
}

std::vector<std::string> selected_checkers(const TrialConfig& cfg) {
  if (std::find(cfg.suite.begin(), cfg.suite.end(), "all") != cfg.suite.end()) return checker_ids();
  std::vector<std::string> out;
  for (const auto& id : checker_ids()) {
    if (std::find(cfg.suite.begin(), cfg.suite.end(), id) != cfg.suite.end()) out.push_back(id);
  }
  return out;
}

std::size_t effective_threads(const TrialConfig& cfg) {
  std::size_t n = cfg.threads != 0 ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("LOGMAJ_THREADS")) {
    const long parsed = std::strtol(cap, nullptr, 10);
    if (parsed >= 1) n = std::min(n, static_cast<std::size_t>(parsed));
  }
  return n;
}

TrialResult run_trial(std::string_view checker, std::size_t dim, std::uint64_t seed, const TrialConfig& cfg,
                      bool capture_inputs) {
  const CaseFn* fn = find_case(checker);
  if (fn == nullptr) throw Error(ErrorCode::kConfigInvalid, "unknown checker id: " + std::string(checker));
  TrialResult t;
  t.checker = std::string(checker);
  t.dim = dim;
  t.seed = seed;
  SeedStream stream(seed);
  try {
    Case c = (*fn)(dim, stream, options_of(cfg), cfg.k_max, capture_inputs);
    t.reports = std::move(c.reports);
    t.inputs = std::move(c.inputs);
    t.outcome = classify(t.reports);
  } catch (const std::exception& e) {
    t.error = e.what();
    t.outcome = Outcome::kFail;
  }
  return t;
}

bool SuiteReport::all_passed() const {
  return std::all_of(checkers.begin(), checkers.end(), [](const auto& c) { return c.failures == 0; });
}

SuiteReport run_suite(const TrialConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  const auto ids = selected_checkers(cfg);
  const bool keep_rows = cfg.format == "csv";

  struct Job {
    std::size_t checker;
    std::size_t dim;
    std::size_t trial;
  };
  std::vector<Job> jobs;
  for (std::size_t c = 0; c < ids.size(); ++c) {
    for (std::size_t d : cfg.dims) {
      for (std::size_t t = 0; t < cfg.trials; ++t) jobs.push_back({c, d, t});
    }
  }
  std::vector<TrialDigest> digests(jobs.size());
  auto seed_of = [&](const Job& j) { return derive_seed(cfg.seed, ids[j.checker], j.dim, j.trial); };

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const Job& j = jobs[i];
      digests[i] = digest(run_trial(ids[j.checker], j.dim, seed_of(j), cfg), j.trial, keep_rows);
    }
  };
  const std::size_t workers = std::min(effective_threads(cfg), std::max<std::size_t>(jobs.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  SuiteReport report;
  report.config = {{"suite", ids},   {"trials", cfg.trials}, {"dims", cfg.dims},   {"seed", cfg.seed},
                   {"delta", cfg.delta}, {"atol", cfg.atol},  {"rtol", cfg.rtol}, {"k_max", cfg.k_max},
                   {"format", cfg.format}};
  report.checkers.resize(ids.size());
  std::vector<std::optional<std::size_t>> argmin_job(ids.size());
  for (std::size_t c = 0; c < ids.size(); ++c) {
    report.checkers[c].checker = ids[c];
    report.checkers[c].min_slack = std::numeric_limits<double>::infinity();
  }
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const Job& j = jobs[i];
    TrialDigest& d = digests[i];
    CheckerSummary& sum = report.checkers[j.checker];
    ++sum.trials;
    switch (d.outcome) {
      case Outcome::kFail: {
        ++sum.failures;
        const TrialResult replay = run_trial(ids[j.checker], j.dim, seed_of(j), cfg, true);
        sum.failure_details.push_back(failure_json(replay, j.trial));
        break;
      }
      case Outcome::kVacuousPass: ++sum.vacuous; break;
      default: ++sum.passes; break;
    }
    if (d.tightest && d.tightest->slack < sum.min_slack) {
      sum.min_slack = d.tightest->slack;
      argmin_job[j.checker] = i;
    }
    if (keep_rows) {
      std::move(d.rows.begin(), d.rows.end(), std::back_inserter(report.rows));
    }
  }
  for (std::size_t c = 0; c < ids.size(); ++c) {
    if (!argmin_job[c]) continue;
    const std::size_t i = *argmin_job[c];
    const Job& j = jobs[i];
    const TrialResult replay = run_trial(ids[c], j.dim, seed_of(j), cfg, true);
    report.checkers[c].argmin = {{"dim", j.dim},
                                 {"trial", j.trial},
                                 {"seed", replay.seed},
                                 {"inputs", replay.inputs},
                                 {"report", to_json(*digests[i].tightest)}};
  }
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json to_json(const SuiteReport& report, bool include_wall_time) {
  json checkers = json::array();
  for (const auto& c : report.checkers) {
    checkers.push_back({{"checker", c.checker},
                        {"trials", c.trials},
                        {"passes", c.passes},
                        {"vacuous", c.vacuous},
                        {"failures", c.failures},
                        {"failure_details", c.failure_details},
                        {"min_slack", number_to_json(c.min_slack)},
                        {"argmin", c.argmin}});
  }
  json out = {{"config", report.config}, {"checkers", checkers}, {"all_passed", report.all_passed()}};
  if (include_wall_time) out["wall_time_seconds"] = report.wall_time_seconds;
  return out;
}

std::string to_csv(const SuiteReport& report) {
  std::ostringstream out;
  out << "checker,dim,trial,lhs,rhs,slack,pass,vacuous,seed\n";
  for (const auto& r : report.rows) {
    out << r.checker << ',' << r.dim << ',' << r.trial << ',' << format_number(r.lhs) << ',' << format_number(r.rhs)
        << ',' << format_number(r.slack) << ',' << (r.pass ? 1 : 0) << ',' << (r.vacuous ? 1 : 0) << ',' << r.seed
        << '\n';
  }
  return out.str();
}

void write_report(const SuiteReport& report, const TrialConfig& cfg) {
  std::ofstream out(cfg.output);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open " + cfg.output);
  if (cfg.format == "csv") {
    out << to_csv(report);
  } else {
    out << to_json(report).dump(2) << '\n';
  }
  if (!out) throw Error(ErrorCode::kIoError, "failed writing " + cfg.output);
}

}  // namespace logmaj
