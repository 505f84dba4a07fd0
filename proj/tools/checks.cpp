#include "checks.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "annular/forest.hpp"
#include "annular/oracle.hpp"
#include "annular/reductions.hpp"

namespace annular::checks {

namespace {

std::size_t at(int v) { return static_cast<std::size_t>(v); }

/// Collects comparisons, keeping only the first failure message.
class Tally {
 public:
  explicit Tally(std::string name) : start_(std::chrono::steady_clock::now()) { result_.name = std::move(name); }

  template <class A, class B>
  bool equal(const A& got, const B& want, const std::string& what) {
    ++result_.cases;
    if (got == want) return true;
    std::ostringstream out;
    out << what << ": got " << got << ", expected " << want;
    fail(out.str());
    return false;
  }

  bool expect(bool ok, const std::string& what) {
    ++result_.cases;
    if (!ok) fail(what);
    return ok;
  }

  void fail(const std::string& what) {
    if (result_.passed) result_.detail = what;
    result_.passed = false;
  }

  CheckResult finish() {
    result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return result_;
  }

 private:
  CheckResult result_;
  std::chrono::steady_clock::time_point start_;
};

std::ostream& operator<<(std::ostream& out, const CycleDistribution& d) { return out << d.to_string(); }
std::ostream& operator<<(std::ostream& out, const Polynomial& poly) { return out << poly.to_string(); }

std::string spec_name(int p, int q, int s) {
  return "(p=" + std::to_string(p) + ", q=" + std::to_string(q) + ", s=" + std::to_string(s) + ")";
}

std::vector<int> feasible_s(int p, int q) {
  std::vector<int> out;
  for (int s = 1; s <= std::min(p, q); ++s) {
    if ((p - s) % 2 == 0 && (q - s) % 2 == 0) out.push_back(s);
  }
  return out;
}

/// Same-parity (p, q) with p, q >= 1 and p + q <= max_pq.
std::vector<std::pair<int, int>> two_row_sizes(int max_pq) {
  std::vector<std::pair<int, int>> out;
  for (int p = 1; p < max_pq; ++p) {
    for (int q = 1; p + q <= max_pq; ++q) {
      if ((p - q) % 2 == 0) out.emplace_back(p, q);
    }
  }
  return out;
}

BigInt pairings_of_support(int size, int half) {
  return binom(size, 2 * half) * double_factorial(2 * half - 1);
}

struct Subsets {
  std::vector<int> chosen;
  std::vector<int> rest;
};

Subsets split_by_mask(const std::vector<int>& items, unsigned mask) {
  Subsets out;
  for (std::size_t t = 0; t < items.size(); ++t) ((mask >> t) & 1U ? out.chosen : out.rest).push_back(items[t]);
  return out;
}

bool same_rightmost_maps(const PairedArray& a, const PairedArray& b) {
  return rightmost_map(a, kTopRow) == rightmost_map(b, kTopRow) &&
         rightmost_map(a, kBottomRow) == rightmost_map(b, kBottomRow);
}

}  // namespace

CheckResult harer_zagier(int max_p) {
  Tally tally("harer-zagier");
  for (int p = 2; p <= max_p; p += 2) {
    OracleJob job;
    job.p = p;
    const auto brute = brute_distribution(job);
    tally.equal(brute, distribution_of(hz_series(p)), "p=" + std::to_string(p));
  }
  return tally.finish();
}

CheckResult main_theorem(int max_pq, const DeltaFn& delta_fn) {
  Tally tally("main-theorem");
  for (auto [p, q] : two_row_sizes(max_pq)) {
    OracleJob job;
    job.p = p;
    job.q = q;
    const auto by_s = brute_distribution_by_s(job);
    for (int s : feasible_s(p, q)) {
      const auto it = by_s.find(s);
      const CycleDistribution brute = it == by_s.end() ? CycleDistribution{} : it->second;
      CycleDistribution formula;
      try {
        formula = distribution_of(main_series(SeriesSpec{p, q, s}, delta_fn));
      } catch (const std::exception& e) {
        tally.expect(false, spec_name(p, q, s) + ": " + e.what());
        continue;
      }
      tally.equal(formula, brute, spec_name(p, q, s));
    }
  }
  return tally.finish();
}

CheckResult cross_formulas(int max_pq, int max_n, const DeltaFn& delta_fn) {
  Tally tally("cross-formulas");
  for (auto [p, q] : two_row_sizes(max_pq)) {
    try {
      tally.equal(summed_main_series(p, q, delta_fn), gs_series(p, q),
                  "sum over s vs gs at p=" + std::to_string(p) + " q=" + std::to_string(q));
    } catch (const std::exception& e) {
      tally.expect(false, "p=" + std::to_string(p) + " q=" + std::to_string(q) + ": " + e.what());
    }
  }
  for (int n = 1; n <= max_n; ++n) {
    tally.equal(gs_series(n, n), jackson_series(n), "gs vs jackson at n=" + std::to_string(n));
  }
  return tally.finish();
}

CheckResult structural_zeros(int max_pq, const DeltaFn& delta_fn) {
  Tally tally("structural-zeros");
  for (auto [p, q] : two_row_sizes(max_pq)) {
    for (int s : feasible_s(p, q)) {
      const SeriesSpec spec{p, q, s};
      const int n = spec.n();
      const std::string name = spec_name(p, q, s);
      try {
        const auto series = main_series(spec, delta_fn);
        const auto poly = to_monomial(series);
        tally.equal(series.coeff(n + 1), BigInt(0), name + " binomial coefficient at k=n+1");
        tally.equal(poly.coeff(n + 1), BigInt(0), name + " x^(n+1)");
        tally.expect(poly.degree() <= n + 1, name + " degree exceeds n+1");
        for (int k = 0; k <= n + 1; ++k) {
          if ((n - k) % 2 != 0) tally.equal(poly.coeff(k), BigInt(0), name + " parity zero at k=" + std::to_string(k));
        }
        tally.equal(poly.coeff(n), planar_coefficient(spec), name + " planar coefficient");
      } catch (const std::exception& e) {
        tally.expect(false, name + ": " + e.what());
      }
    }
  }
  return tally.finish();
}

CheckResult forest_completion(int max_k) {
  Tally tally("forest-completion");
  for (int k = 1; k <= max_k; ++k) {
    for (const auto& base : all_rooted_forests(k)) {
      const auto roots = base.roots();
      const unsigned masks = 1U << roots.size();
      for (unsigned mask = 1; mask + 1 < masks; ++mask) {
        const auto [eliminated, surviving] = split_by_mask(roots, mask);
        const int m = static_cast<int>(eliminated.size());
        std::vector<int> safe;
        for (int v : base.vertices()) {
          if (std::binary_search(surviving.begin(), surviving.end(), base.root_of(v))) safe.push_back(v);
        }
        const std::string where = base.to_string() + " eliminating " + std::to_string(m) + " roots";

        std::vector<RootedForest> image;
        std::vector<int> tuple(at(m), 1);
        std::vector<std::size_t> digit(at(m), 0);
        std::vector<int> all(at(k));
        std::iota(all.begin(), all.end(), 1);
        const auto domain = [&](int t) -> const std::vector<int>& { return t == m - 1 ? safe : all; };
        bool done = false;
        while (!done) {
          for (int t = 0; t < m; ++t) tuple[at(t)] = domain(t)[digit[at(t)]];
          const auto result = fca_forward(CompletionInput{base, eliminated, tuple});
          std::vector<std::pair<int, int>> removals;
          for (int r : eliminated) removals.emplace_back(r, result.forest.parent(r));
          const auto back = fca_inverse(result.forest, removals);
          if (!tally.expect(back.tuple == tuple && back.base == base && invert_permutation(back.sigma) == result.fcp,
                            where + ": inverse does not undo forward")) {
            return tally.finish();
          }
          for (int t = 0; t < m; ++t) {
            if (result.forest.parent(eliminated[at(t)]) != tuple[at(result.fcp[at(t)] - 1)]) {
              tally.fail(where + ": added arcs disagree with the completion permutation");
            }
          }
          image.push_back(result.forest);
          int t = 0;
          while (t < m && ++digit[at(t)] == domain(t).size()) digit[at(t++)] = 0;
          done = t == m;
        }
        std::sort(image.begin(), image.end());
        const bool injective = std::adjacent_find(image.begin(), image.end()) == image.end();
        tally.expect(injective, where + ": forward map is not injective");
        tally.equal(BigInt(image.size()), count_completions(base, eliminated), where + ": completion count");
        auto supers = enumerate_superforests(base, surviving);
        std::sort(supers.begin(), supers.end());
        if (!tally.expect(supers == image, where + ": image differs from the superforests")) return tally.finish();
        for (const auto& forest : supers) {
          std::vector<std::pair<int, int>> removals;
          for (int r : eliminated) removals.emplace_back(r, forest.parent(r));
          const auto back = fca_inverse(forest, removals);
          const auto again = fca_forward(CompletionInput{back.base, eliminated, back.tuple});
          tally.expect(again.forest == forest && again.fcp == invert_permutation(back.sigma),
                       where + ": forward does not undo inverse");
        }
      }
    }
  }
  return tally.finish();
}

CheckResult reduction_chain(int max_pq) {
  Tally tally("reduction-chain");
  for (auto [p, q] : two_row_sizes(max_pq)) {
    OracleJob job;
    job.p = p;
    job.q = q;
    const auto by_s = brute_distribution_by_s(job);
    for (int s : feasible_s(p, q)) {
      const SeriesSpec spec{p, q, s};
      const int top = spec.n() + 1;
      const auto it = by_s.find(s);
      const Polynomial poly = it == by_s.end() ? Polynomial{} : it->second.as_polynomial();
      std::vector<BigInt> values;
      for (int x = 0; x <= top; ++x) values.push_back(poly.evaluate(x));
      const auto b = forward_differences(values);
      for (int k = 1; k <= top; ++k) {
        tally.equal(c_via_reduction(spec, k), b[at(k)], spec_name(p, q, s) + " at k=" + std::to_string(k));
      }
      tally.equal(b[0], BigInt(0), spec_name(p, q, s) + " constant term");
    }
  }
  return tally.finish();
}

CheckResult vertical_counts(int max_s, int max_k, int max_ij) {
  Tally tally("vertical-counts");
  for (int s = 1; s <= max_s; ++s) {
    for (int k = 1; k <= max_k; ++k) {
      for (int i = 0; i <= max_ij; ++i) {
        for (int j = 0; j <= max_ij; ++j) {
          const auto arrays = enumerate_vertical_arrays(s, k, i, j);
          const auto full = std::count_if(arrays.begin(), arrays.end(), [](const auto& a) { return a.is_full(); });
          const std::string name = "(s=" + std::to_string(s) + ", k=" + std::to_string(k) + ", i=" + std::to_string(i) +
                                   ", j=" + std::to_string(j) + ")";
          tally.equal(v_vertical(s, k, i, j), BigInt(arrays.size()), "v" + name);
          tally.equal(f_full_vertical(s, k, i, j), BigInt(full), "f" + name);
        }
      }
    }
  }
  return tally.finish();
}

namespace {

/// Roundtrips one canonical array through xi and, when minimal, zeta. Returns
/// false after recording a failure.
bool roundtrip_array(Tally& tally, const PairedArray& alpha, const std::string& name) {
  const XiImage image = xi(alpha);
  const PairedArray& beta = image.beta;
  const int i = image.mu1.size();
  const int j = image.mu2.size();
  if (!tally.expect(beta.is_minimal() && beta.is_canonical() && validate(beta).ok(),
                    name + ": xi image is not a minimal canonical array\n" + render(alpha))) {
    return false;
  }
  if (!tally.expect(same_rightmost_maps(alpha, beta) && beta.mixed_count() == alpha.mixed_count() &&
                        beta.row_size(kTopRow) + 2 * i == alpha.row_size(kTopRow) &&
                        beta.row_size(kBottomRow) + 2 * j == alpha.row_size(kBottomRow),
                    name + ": xi changed the rightmost maps or mixed pairs\n" + render(alpha))) {
    return false;
  }
  for (int x : image.mu1.support()) {
    if (!tally.expect(x >= 1 && x <= alpha.row_size(kTopRow), name + ": mu1 support outside [p]")) return false;
  }
  if (!tally.expect(xi_inverse(image.mu1, image.mu2, beta) == alpha,
                    name + ": xi_inverse(xi(alpha)) != alpha\n" + render(alpha))) {
    return false;
  }

  const ZetaImage z = zeta(beta);
  const int s = beta.mixed_count();
  const int ti = (beta.row_size(kTopRow) - s) / 2;
  const int tj = (beta.row_size(kBottomRow) - s) / 2;
  if (!tally.expect(z.beta.is_vertical() && validate(z.beta).ok() && z.beta.mark_count(kTopRow) == ti + 1 &&
                        z.beta.mark_count(kBottomRow) == tj + 1,
                    name + ": zeta image is not a vertical array with the right marks\n" + render(beta))) {
    return false;
  }
  return tally.expect(zeta_inverse(z.kappa1, z.kappa2, z.beta) == beta,
                      name + ": zeta_inverse(zeta(beta)) != beta\n" + render(beta));
}

}  // namespace

CheckResult reductions_exhaustive(int max_pq, int max_k) {
  Tally tally("reductions-exhaustive");
  // minimal[(p, q, s, k)] = number of minimal canonical arrays
  std::map<std::tuple<int, int, int, int>, long long> minimal;
  for (auto [p, q] : two_row_sizes(max_pq)) {
    for (int s : feasible_s(p, q)) {
      for (int k = 1; k <= max_k; ++k) {
        const std::string name = spec_name(p, q, s) + " k=" + std::to_string(k);
        const auto arrays = enumerate_canonical_arrays(p, q, s, k);
        std::set<PairedArray> distinct(arrays.begin(), arrays.end());
        tally.equal(BigInt(distinct.size()), BigInt(arrays.size()), name + ": distinct canonical arrays");
        tally.equal(BigInt(arrays.size()), c_via_reduction(SeriesSpec{p, q, s}, k), name + ": canonical array count");
        long long minimal_count = 0;
        std::set<PairedArray> verticals;
        for (const auto& alpha : arrays) {
          if (!tally.expect(validate(alpha).ok() && alpha.is_full(), name + ": canonical array fails its conditions")) {
            continue;
          }
          if (alpha.is_minimal()) {
            ++minimal_count;
            verticals.insert(zeta(alpha).beta);
          }
          if (!roundtrip_array(tally, alpha, name)) return tally.finish();
        }
        minimal[{p, q, s, k}] = minimal_count;

        BigInt via_minimal = 0;
        for (int i = 0; 2 * i <= p - s; ++i) {
          for (int j = 0; 2 * j <= q - s; ++j) {
            via_minimal += pairings_of_support(p, i) * pairings_of_support(q, j) * minimal[{p - 2 * i, q - 2 * j, s, k}];
          }
        }
        tally.equal(via_minimal, BigInt(arrays.size()), name + ": canonical count via minimal arrays");
        const int i = (p - s) / 2;
        const int j = (q - s) / 2;
        tally.equal(falling_factorial(p, i) * falling_factorial(q, j) * v_vertical(s, k, i, j), BigInt(minimal_count),
                    name + ": minimal count via vertical arrays");
        if (minimal_count > 0) {
          tally.equal(BigInt(verticals.size()), v_vertical(s, k, i, j), name + ": vertical arrays reached by zeta");
        }
      }
    }
  }
  return tally.finish();
}

namespace {

PairedSurjection random_surjection(std::mt19937_64& rng, int p, int q, int s) {
  const GroundSet g(p, q);
  std::vector<int> top(at(p));
  std::vector<int> bottom(at(q));
  std::iota(top.begin(), top.end(), 0);
  std::iota(bottom.begin(), bottom.end(), p);
  std::shuffle(top.begin(), top.end(), rng);
  std::shuffle(bottom.begin(), bottom.end(), rng);
  std::vector<int> partner(at(p + q));
  auto join = [&](int a, int b) {
    partner[at(a)] = b;
    partner[at(b)] = a;
  };
  for (int t = 0; t < s; ++t) join(top[at(t)], bottom[at(t)]);
  for (int t = s; t + 1 < p; t += 2) join(top[at(t)], top[at(t + 1)]);
  for (int t = s; t + 1 < q; t += 2) join(bottom[at(t)], bottom[at(t + 1)]);
  Pairing mu(g, partner);
  const auto orbits = compose(gamma(p, q), mu.to_permutation()).cycles();
  const int c = static_cast<int>(orbits.size());
  const int k = std::uniform_int_distribution<int>(1, c)(rng);
  std::vector<int> colour(at(c));
  std::vector<int> order(at(c));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int t = 0; t < c; ++t) {
    colour[at(order[at(t)])] = t < k ? t + 1 : std::uniform_int_distribution<int>(1, k)(rng);
  }
  std::vector<int> phi(at(p + q));
  for (int o = 0; o < c; ++o) {
    for (int x : orbits[at(o)]) phi[at(x)] = colour[at(o)];
  }
  return PairedSurjection{std::move(mu), k, std::move(phi)};
}

}  // namespace

CheckResult reductions_random(int max_pq, int samples, std::uint64_t seed) {
  Tally tally("reductions-random");
  std::mt19937_64 rng(seed);
  const auto sizes = two_row_sizes(max_pq);
  for (int t = 0; t < samples; ++t) {
    const auto [p, q] = sizes[std::uniform_int_distribution<std::size_t>(0, sizes.size() - 1)(rng)];
    const auto choices = feasible_s(p, q);
    const int s = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
    const auto ps = random_surjection(rng, p, q, s);
    const std::string name = spec_name(p, q, s) + " k=" + std::to_string(ps.k) + " sample " + std::to_string(t);
    const PairedArray alpha = from_paired_surjection(ps);
    if (!tally.expect(validate(alpha).ok(), name + ": canonical array fails its conditions\n" + render(alpha))) {
      return tally.finish();
    }
    if (!tally.expect(label_recovery(alpha) == ps, name + ": label recovery")) return tally.finish();
    if (!roundtrip_array(tally, alpha, name)) return tally.finish();
  }
  return tally.finish();
}

CheckResult label_recovery_roundtrip(int max_pq, int max_k) {
  Tally tally("label-recovery");
  for (auto [p, q] : two_row_sizes(max_pq)) {
    for (int s : feasible_s(p, q)) {
      for (int k = 1; k <= max_k; ++k) {
        for (const auto& ps : enumerate_paired_surjections(p, q, s, k)) {
          const PairedArray alpha = from_paired_surjection(ps);
          const std::string name = spec_name(p, q, s) + " k=" + std::to_string(k);
          tally.expect(alpha.is_canonical() && validate(alpha).ok(), name + ": array fails its conditions");
          tally.expect(label_recovery(alpha) == ps, name + ": recovery differs\n" + render(alpha));
        }
      }
    }
  }
  return tally.finish();
}

PairedSurjection worked_example_surjection() {
  const GroundSet g(11, 9);
  auto pt = [](const char* text) { return parse_point(text); };
  const std::vector<std::pair<Point, Point>> pairs = {
      {pt("1"), pt("9")},   {pt("5"), pt("8")},    {pt("6"), pt("7")},   {pt("2'"), pt("3'")},
      {pt("7'"), pt("8'")}, {pt("2"), pt("4'")},   {pt("3"), pt("1'")},  {pt("4"), pt("9'")},
      {pt("10"), pt("6'")}, {pt("11"), pt("5'")},
  };
  const std::vector<std::vector<const char*>> fibres = {
      {"3", "6", "8", "2'", "4'"},
      {"3'", "8'"},
      {"1", "2", "5", "9", "10", "5'", "7'", "9'"},
      {"4", "7", "11", "1'", "6'"},
  };
  std::vector<int> phi(at(g.size()), 0);
  for (std::size_t c = 0; c < fibres.size(); ++c) {
    for (const char* x : fibres[c]) phi[at(g.encode(pt(x)))] = static_cast<int>(c) + 1;
  }
  return PairedSurjection{Pairing::from_pairs(g, pairs), 4, std::move(phi)};
}

CheckResult worked_example() {
  Tally tally("worked-example");
  const auto ps = worked_example_surjection();
  tally.equal(ps.mu.mixed_count(), 5, "mixed pairs");
  if (!tally.expect(satisfies_condition_one(ps), "condition phi(mu(i)) = phi(gamma(i)) fails")) return tally.finish();
  const PairedArray alpha = from_paired_surjection(ps);
  const auto report = validate(alpha);
  tally.expect(report.ok(), "validate: " + report.summary());
  tally.expect(alpha.is_canonical(), "array is not canonical");
  tally.expect(label_recovery(alpha) == ps, "label recovery does not return the printed (mu, phi)");
  const XiImage image = xi(alpha);
  tally.expect(image.mu1 == PartialPairing::from_pairs({{2, 11}, {4, 7}}), "mu1 differs from {{2,11},{4,7}}");
  tally.expect(image.mu2 == PartialPairing::from_pairs({{1, 3}}), "mu2 differs from {{1',3'}}");
  tally.expect(xi_inverse(image.mu1, image.mu2, image.beta) == alpha, "xi_inverse does not rebuild the array");
  roundtrip_array(tally, alpha, "worked example");
  return tally.finish();
}

CheckResult rooted_maps(int max_pq) {
  Tally tally("rooted-maps");
  for (auto [p, q] : two_row_sizes(max_pq)) {
    for (int s : feasible_s(p, q)) {
      const SeriesSpec spec{p, q, s};
      const auto brute = brute_rooted_maps(p, q, s);
      std::map<int, BigInt> formula;
      try {
        for (int k = 1; k <= spec.n(); ++k) {
          const BigInt count = rooted_map_count(spec, k);
          if (count == 0) continue;
          const auto g = genus_of(k, spec.n(), 2);
          if (!tally.expect(g.has_value(), spec_name(p, q, s) + ": nonzero count at impossible k")) continue;
          formula[*g] = count;
        }
      } catch (const IntegralityError& e) {
        tally.fail(spec_name(p, q, s) + ": " + e.what());
        continue;
      }
      tally.expect(formula == brute, spec_name(p, q, s) + ": rooted maps by genus disagree");
    }
  }
  return tally.finish();
}

CheckResult combine(std::string name, const std::vector<CheckResult>& parts) {
  CheckResult out;
  out.name = std::move(name);
  for (const auto& part : parts) {
    out.cases += part.cases;
    out.seconds += part.seconds;
    if (!part.passed && out.passed) {
      out.passed = false;
      out.detail = part.name + ": " + part.detail;
    }
  }
  return out;
}

}  // namespace annular::checks
