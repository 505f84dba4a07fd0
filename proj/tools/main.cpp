#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "annular/closed_forms.hpp"
#include "annular/oracle.hpp"
#include "checks.hpp"
#include "output_record.hpp"

namespace {

using namespace annular;
using annular::cli::OutputRecord;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Common {
  std::string format = "table";
  bool timing = false;
  int threads = 0;
  int ceiling = 18;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_flag("--timing", common.timing, "Include wall-clock seconds in the output");
  cmd->add_option("--threads", common.threads, "Oracle threads (default: ANNULAR_THREADS or hardware)");
  cmd->add_option("--ceiling", common.ceiling, "Largest p+q the brute-force oracle accepts");
}

OracleJob make_job(int p, int q, std::optional<int> s, const Common& common) {
  OracleJob job;
  job.p = p;
  job.q = q;
  job.s = s;
  job.threads = common.threads;
  job.ceiling = common.ceiling;
  return job;
}

/// Prints the record and reports impossible k values as a failure.
int emit(OutputRecord record, const Common& common, const Stopwatch& clock) {
  record.derive_genus();
  if (common.timing) record.seconds = clock.seconds();
  if (common.format == "json") {
    std::cout << cli::to_json(record) << '\n';
  } else if (common.format == "csv") {
    std::cout << cli::to_csv(record);
  } else {
    std::cout << cli::to_table(record);
  }
  if (!record.invalid_k.empty()) {
    std::cerr << "error: nonzero counts at k values with no admissible genus\n";
    return kCheckFailed;
  }
  return kOk;
}

std::map<int, BigInt> counts_of(const CycleDistribution& d) { return d.counts(); }

int run_dist(int p, int q, int s, const std::string& method, const Common& common) {
  Stopwatch clock;
  const SeriesSpec spec{p, q, s};
  spec.validate();
  OutputRecord record;
  record.parameters = {{"p", p}, {"q", q}, {"s", s}};
  record.method = method;
  if (method == "formula") {
    record.distribution = counts_of(distribution_of(main_series(spec)));
  } else if (method == "reduction") {
    record.distribution = counts_of(distribution_of(reduction_series(spec)));
  } else {
    record.distribution = counts_of(brute_distribution(make_job(p, q, s, common)));
  }
  return emit(std::move(record), common, clock);
}

int run_hz(int p, const std::string& method, const Common& common) {
  Stopwatch clock;
  if (p < 2 || p % 2 != 0) throw std::invalid_argument("hz needs an even p >= 2");
  OutputRecord record;
  record.parameters = {{"p", p}};
  record.method = method;
  record.vertices = 1;
  record.distribution = method == "formula" ? counts_of(distribution_of(hz_series(p)))
                                            : counts_of(brute_distribution(make_job(p, 0, std::nullopt, common)));
  return emit(std::move(record), common, clock);
}

int run_sum(int p, int q, const std::string& method, const Common& common) {
  Stopwatch clock;
  SeriesSpec{p, q, std::nullopt}.validate();
  OutputRecord record;
  record.parameters = {{"p", p}, {"q", q}};
  record.method = method;
  CycleDistribution d;
  if (method == "jackson") {
    if (p != q) throw std::invalid_argument("the jackson method needs p == q");
    d = CycleDistribution::from_polynomial(jackson_series(p));
  } else if (method == "gs") {
    d = CycleDistribution::from_polynomial(gs_series(p, q));
  } else if (method == "sum-s") {
    d = CycleDistribution::from_polynomial(summed_main_series(p, q));
  } else {
    for (const auto& [s, part] : brute_distribution_by_s(make_job(p, q, std::nullopt, common))) {
      if (s >= 1) d.merge(part);
    }
  }
  record.distribution = counts_of(d);
  return emit(std::move(record), common, clock);
}

int run_maps(int p, int q, int s, int brute_ceiling, const Common& common) {
  Stopwatch clock;
  const SeriesSpec spec{p, q, s};
  spec.validate();
  OutputRecord record;
  record.parameters = {{"p", p}, {"q", q}, {"s", s}};
  record.method = "formula";
  try {
    for (int k = 1; k <= spec.n(); ++k) {
      const BigInt count = rooted_map_count(spec, k);
      if (count != 0) record.distribution[k] = count;
    }
  } catch (const IntegralityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  int status = emit(record, common, clock);
  if (p + q <= brute_ceiling) {
    record.derive_genus();
    const auto brute = brute_rooted_maps(p, q, s);
    if (brute != record.genus) {
      std::cerr << "error: rooted-map counts disagree with direct enumeration of rotation systems\n";
      status = kCheckFailed;
    } else if (common.format == "table") {
      std::cout << "brute-force rooted-map enumeration agrees\n";
    }
  }
  return status;
}

int run_verify(const std::string& suite, int max_n, const std::string& fault, const std::string& format) {
  using namespace annular::checks;
  DeltaFn delta_fn = delta;
  if (fault == "delta") {
    delta_fn = [](const SeriesSpec& spec, int k, int i, int j) { return delta(spec, k, i + 1, j); };
  } else if (!fault.empty()) {
    throw std::invalid_argument("unknown fault '" + fault + "'");
  }
  const int span = 2 * max_n;
  std::vector<CheckResult> results;
  if (suite == "formulas" || suite == "all") {
    results.push_back(harer_zagier(std::min(span, 16)));
    results.push_back(main_theorem(std::min(span, 16), delta_fn));
    results.push_back(cross_formulas(std::min(span, 24), std::min(max_n, 12), delta_fn));
    results.push_back(structural_zeros(std::min(span, 24), delta_fn));
    results.push_back(reduction_chain(std::min(span, 12)));
  }
  if (suite == "bijections" || suite == "all") {
    results.push_back(vertical_counts(4, 4, 2));
    results.push_back(label_recovery_roundtrip(std::min(span, 6), 3));
    results.push_back(reductions_exhaustive(std::min(span, 8), 3));
    results.push_back(reductions_random(std::min(span, 14), 400, 20240601));
    results.push_back(worked_example());
    results.push_back(rooted_maps(std::min(span, 12)));
  }
  if (suite == "forests" || suite == "all") results.push_back(forest_completion(std::min(max_n, 6)));

  bool ok = true;
  nlohmann::ordered_json report;
  report["suite"] = suite;
  report["max_n"] = max_n;
  if (!fault.empty()) report["injected_fault"] = fault;
  report["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    nlohmann::ordered_json entry{{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"seconds", r.seconds}};
    if (!r.passed) entry["detail"] = r.detail;
    report["checks"].push_back(entry);
  }
  report["passed"] = ok;
  if (format == "json") {
    std::cout << report.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases, " << r.seconds << " s)";
      if (!r.passed) std::cout << ": " << r.detail;
      std::cout << '\n';
    }
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle distributions of pairings times one- and two-cycle permutations"};
  app.require_subcommand(1);
  Common common;
  int p = 0;
  int q = 0;
  int s = 0;
  std::string dist_method;
  std::string hz_method;
  std::string sum_method;

  auto* dist = app.add_subcommand("dist", "Distribution of mu gamma^{-1} over pairings with s mixed pairs");
  dist->add_option("--p", p, "Length of the first cycle")->required();
  dist->add_option("--q", q, "Length of the second cycle")->required();
  dist->add_option("--s", s, "Number of mixed pairs")->required();
  dist->add_option("--method", dist_method, "formula, reduction or brute")
      ->default_val("formula")
      ->check(CLI::IsMember({"formula", "reduction", "brute"}));
  add_common(dist, common);

  auto* hz = app.add_subcommand("hz", "Single-cycle distribution");
  hz->add_option("--p", p, "Cycle length (even)")->required();
  hz->add_option("--method", hz_method, "formula or brute")->default_val("formula")->check(CLI::IsMember({"formula", "brute"}));
  add_common(hz, common);

  auto* sum = app.add_subcommand("sum", "Two-cycle distribution summed over s >= 1");
  sum->add_option("--p", p, "Length of the first cycle")->required();
  sum->add_option("--q", q, "Length of the second cycle")->required();
  sum->add_option("--method", sum_method, "jackson, gs, sum-s or brute")
      ->default_val("gs")
      ->check(CLI::IsMember({"jackson", "gs", "sum-s", "brute"}));
  add_common(sum, common);

  std::string suite = "all";
  int max_n = 7;
  std::string fault;
  std::string report_format = "json";
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", suite, "formulas, bijections, forests or all")
      ->check(CLI::IsMember({"formulas", "bijections", "forests", "all"}));
  verify->add_option("--max-n", max_n, "Size bound: p+q <= 2N for series, k <= N for forests")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", report_format, "json or table")->check(CLI::IsMember({"json", "table"}));
  verify->add_option("--inject-fault", fault)->group("");

  int maps_ceiling = 12;
  auto* maps = app.add_subcommand("maps", "Rooted two-vertex maps by genus");
  maps->add_option("--p", p, "Degree of the first vertex")->required();
  maps->add_option("--q", q, "Degree of the second vertex")->required();
  maps->add_option("--s", s, "Edges joining the two vertices")->required();
  maps->add_option("--brute-ceiling", maps_ceiling, "Cross-check by enumeration when p+q is at most this");
  add_common(maps, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*dist) return run_dist(p, q, s, dist_method, common);
    if (*hz) return run_hz(p, hz_method, common);
    if (*sum) return run_sum(p, q, sum_method, common);
    if (*maps) return run_maps(p, q, s, maps_ceiling, common);
    if (*verify) return run_verify(suite, max_n, fault, report_format);
  } catch (const IntegralityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}
