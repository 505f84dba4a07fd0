#include "annular/closed_forms.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace annular {

namespace {

std::string describe(const SeriesSpec& spec) {
  std::string out = "(p=" + std::to_string(spec.p) + ", q=" + std::to_string(spec.q);
  if (spec.s) out += ", s=" + std::to_string(*spec.s);
  return out + ")";
}

/// Expands sum_c weight[c] * C(x + c, n) into monomial coefficients.
Polynomial expand_shifted(const std::map<std::int64_t, Rational>& weights, int n, const std::string& what) {
  std::vector<Rational> acc(static_cast<std::size_t>(n + 1), Rational(0));
  for (const auto& [shift, w] : weights) {
    if (w == 0) continue;
    const auto basis = shifted_binomial_coeffs(shift, n);
    for (std::size_t d = 0; d < basis.size(); ++d) acc[d] += w * basis[d];
  }
  std::vector<BigInt> out;
  for (std::size_t d = 0; d < acc.size(); ++d) {
    out.push_back(require_integral(acc[d], what + " coefficient of x^" + std::to_string(d)));
  }
  return Polynomial(std::move(out));
}

}  // namespace

void SeriesSpec::validate() const {
  if (p < 1 || q < 1) throw std::invalid_argument("p and q must be >= 1 " + describe(*this));
  if ((p - q) % 2 != 0) throw std::invalid_argument("p and q must have the same parity " + describe(*this));
  if (s) {
    if (*s < 1) throw std::invalid_argument("s must be >= 1 " + describe(*this));
    if ((p - *s) % 2 != 0) throw std::invalid_argument("s must have the parity of p and q " + describe(*this));
    if (*s > std::min(p, q)) throw std::invalid_argument("s exceeds min(p, q) " + describe(*this));
  }
}

int SeriesSpec::s_value() const {
  if (!s) throw std::invalid_argument("series needs a mixed-pair count s " + describe(*this));
  return *s;
}

BinomialBasisPolynomial hz_series(int p) {
  if (p < 2 || p % 2 != 0) throw std::invalid_argument("hz_series needs an even p >= 2");
  const int n = p / 2;
  const BigInt lead = double_factorial(2 * n - 1);
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n + 2), 0);
  for (int k = 1; k <= n + 1; ++k) {
    coeffs[static_cast<std::size_t>(k)] = lead * pow2(k - 1) * binom(n, k - 1);
  }
  return BinomialBasisPolynomial(std::move(coeffs));
}

BigInt delta(const SeriesSpec& spec, int k, int i, int j) {
  const int s = spec.s_value();
  const int p = spec.p;
  const int q = spec.q;
  return binom(k - 1, (p - s) / 2 - i) * binom(k - 1, (q - s) / 2 - j) -
         binom(k - 1, (p + s) / 2 - i) * binom(k - 1, (q + s) / 2 - j);
}

BinomialBasisPolynomial main_series(const SeriesSpec& spec, const DeltaFn& delta_fn) {
  spec.validate();
  spec.s_value();
  const int p = spec.p;
  const int q = spec.q;
  const int n = spec.n();

  // Every denominator 2^{i+j} i! j! (n-i-j)! divides 2^n n!, so the terms are
  // accumulated over that common denominator and divided once at the end.
  const BigInt common = pow2(n) * factorial(n);
  const BigInt pq = factorial(p) * factorial(q);
  std::vector<BigInt> numer(static_cast<std::size_t>(n + 2), 0);
  for (int i = 0; i <= p / 2; ++i) {
    for (int j = 0; j <= q / 2; ++j) {
      const int rest = n - i - j;
      if (rest < 0) continue;
      const BigInt weight =
          pq * pow2(n - i - j) * factorial(n) / (factorial(i) * factorial(j) * factorial(rest));
      for (int k = 1; k <= n + 1; ++k) {
        const BigInt c = binom(rest, k - 1);
        if (c == 0) continue;
        numer[static_cast<std::size_t>(k)] += weight * c * delta_fn(spec, k, i, j);
      }
    }
  }
  std::vector<BigInt> coeffs;
  coeffs.reserve(numer.size());
  for (std::size_t k = 0; k < numer.size(); ++k) {
    coeffs.push_back(require_integral(Rational(numer[k], common),
                                      "main_series " + describe(spec) + " at k=" + std::to_string(k)));
  }
  return BinomialBasisPolynomial(std::move(coeffs));
}

BigInt planar_coefficient(const SeriesSpec& spec) {
  spec.validate();
  const int s = spec.s_value();
  return BigInt(s) * binom(spec.p, (spec.p - s) / 2) * binom(spec.q, (spec.q - s) / 2);
}

Polynomial jackson_series(int n) {
  if (n < 1) throw std::invalid_argument("jackson_series needs n >= 1");
  std::map<std::int64_t, Rational> weights;
  const BigInt nfact = factorial(n);
  for (int j = 0; j <= (n - 1) / 2; ++j) {
    for (int i = 0; i <= n - 2 * j - 1; ++i) {
      for (int k = 0; k <= (n - 2 * j - 1) / 2; ++k) {
        const BigInt numer = nfact * binom(2 * k, k) * binom(n, 2 * k) * binom(2 * j, j) * binom(n - 2 * j - 1, i);
        weights[j + i] += Rational(numer, pow2(2 * k));
      }
    }
  }
  return expand_shifted(weights, n, "jackson_series n=" + std::to_string(n));
}

Polynomial gs_series(int p, int q) {
  SeriesSpec{p, q, std::nullopt}.validate();
  if (p > q) std::swap(p, q);
  const int n = (p + q) / 2;
  const BigInt pq = factorial(p) * factorial(q);
  std::map<std::int64_t, Rational> weights;
  for (int j = 0; j <= (p - 1) / 2; ++j) {
    for (int i = 0; i <= n - 2 * j - 1; ++i) {
      for (int k = 0; k <= (p - 2 * j - 1) / 2; ++k) {
        const BigInt denom = pow2(n - p + 2 * k) * factorial(k) * factorial(p - 2 * k) * factorial(n - p + k);
        const BigInt numer = pq * binom(2 * j, j) * binom(n - 2 * j - 1, i);
        weights[j + i] += Rational(numer, denom);
      }
    }
  }
  return expand_shifted(weights, n, "gs_series p=" + std::to_string(p) + " q=" + std::to_string(q));
}

Polynomial summed_main_series(int p, int q, const DeltaFn& delta_fn) {
  SeriesSpec{p, q, std::nullopt}.validate();
  Polynomial total;
  for (int s = (p % 2 == 0 ? 2 : 1); s <= std::min(p, q); s += 2) {
    total += to_monomial(main_series(SeriesSpec{p, q, s}, delta_fn));
  }
  return total;
}

BigInt f_full_vertical(int s, int k, int i, int j) {
  if (s < 1 || k < 1 || i < 0 || j < 0) throw std::invalid_argument("f_full_vertical needs s,k >= 1 and i,j >= 0");
  // Terms with l > s-1 would need C(s-1-l, .) at a negative upper index; a
  // full array has at most s columns, and those terms are absent.
  BigInt acc = 0;
  for (int l = 0; l <= std::min(k - 1, s - 1); ++l) {
    acc += binom(s - 1 - l, k - 1 - l) * binom(k - 1 - l, i) * binom(k - 1 - l, j);
  }
  return factorial(s) * acc;
}

BigInt v_vertical(int s, int k, int i, int j) {
  if (s < 1 || k < 1 || i < 0 || j < 0) throw std::invalid_argument("v_vertical needs s,k >= 1 and i,j >= 0");
  const Rational lead(factorial(s + i) * factorial(s + j), factorial(s + i + j));
  const BigInt rest = binom(s + i + j, k - 1) *
                      (binom(k - 1, i) * binom(k - 1, j) - binom(k - 1, s + i) * binom(k - 1, s + j));
  return require_integral(lead * Rational(rest), "v_vertical(s=" + std::to_string(s) + ", k=" + std::to_string(k) +
                                                     ", i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
}

BigInt c_via_reduction(const SeriesSpec& spec, int k) {
  spec.validate();
  const int s = spec.s_value();
  if (k < 1) return 0;
  const int p = spec.p;
  const int q = spec.q;
  const BigInt pq = factorial(p) * factorial(q);
  Rational acc = 0;
  for (int i = 0; i <= (p - s) / 2; ++i) {
    for (int j = 0; j <= (q - s) / 2; ++j) {
      const BigInt denom =
          pow2(i + j) * factorial(i) * factorial(j) * factorial((p + s) / 2 - i) * factorial((q + s) / 2 - j);
      acc += Rational(pq, denom) * Rational(v_vertical(s, k, (p - s) / 2 - i, (q - s) / 2 - j));
    }
  }
  return require_integral(acc, "c_via_reduction " + describe(spec) + " at k=" + std::to_string(k));
}

BinomialBasisPolynomial reduction_series(const SeriesSpec& spec) {
  spec.validate();
  std::vector<BigInt> coeffs(static_cast<std::size_t>(spec.n() + 2), 0);
  for (int k = 1; k <= spec.n() + 1; ++k) coeffs[static_cast<std::size_t>(k)] = c_via_reduction(spec, k);
  return BinomialBasisPolynomial(std::move(coeffs));
}

std::optional<int> genus_of(int k, int n, int vertices) {
  if (k < 1) throw std::invalid_argument("genus_of needs k >= 1");
  if (vertices != 1 && vertices != 2) throw std::invalid_argument("genus_of handles one or two vertices");
  const int twice = vertices == 2 ? n - k : n + 1 - k;
  if (twice < 0 || twice % 2 != 0) return std::nullopt;
  return twice / 2;
}

Rational rooted_map_factor(int p, int q) {
  const int n = (p + q) / 2;
  // |C_{p,q}| = (2n)! / (p q), halved when the two cycles have equal length.
  BigInt denom = BigInt(p) * q;
  if (p == q) denom *= 2;
  return Rational(factorial(2 * n), denom * factorial(2 * n - 1));
}

BigInt rooted_map_count(const SeriesSpec& spec, int k) {
  spec.validate();
  const BigInt a = to_monomial(main_series(spec)).coeff(k);
  return require_integral(Rational(a) * rooted_map_factor(spec.p, spec.q),
                          "rooted_map_count " + describe(spec) + " at k=" + std::to_string(k));
}

CycleDistribution distribution_of(const BinomialBasisPolynomial& series) {
  return CycleDistribution::from_polynomial(to_monomial(series));
}

}  // namespace annular
