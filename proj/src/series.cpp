#include "cotor/series.hpp"

#include <algorithm>

#include "cotor/spinarith.hpp"

namespace cotor {

namespace {

void require_same_degree(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.max_degree() != b.max_degree()) {
    throw std::invalid_argument("series truncated at different degrees: " +
                                std::to_string(a.max_degree()) + " vs " +
                                std::to_string(b.max_degree()));
  }
}

void require_exponent(std::int64_t e) {
  if (e < 1) throw std::invalid_argument("exponent must be positive, got " + std::to_string(e));
}

// 2^k + 1 (or 2^k) saturated to a value above any practical truncation.
std::uint64_t pow2_plus(int k, std::uint64_t add) {
  if (k >= 62) return std::uint64_t{1} << 62;
  return (std::uint64_t{1} << k) + add;
}

void apply_denominator(TruncatedSeries& s, int n) {
  for (int k = 2; k <= n; ++k) s.div_one_minus(static_cast<std::uint64_t>(k));
}

void apply_relations(TruncatedSeries& s, int relations) {
  for (int k = 0; k < relations; ++k) s.mul_one_minus(pow2_plus(k, 1));
  s.div_one_minus(pow2_plus(relations, 0));
}

}  // namespace

TruncatedSeries TruncatedSeries::one(std::size_t max_degree) {
  std::vector<mpz_class> c(max_degree + 1, 0);
  c[0] = 1;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::zero(std::size_t max_degree) {
  return TruncatedSeries(std::vector<mpz_class>(max_degree + 1, 0));
}

TruncatedSeries::TruncatedSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("a truncated series needs c_0");
}

void TruncatedSeries::mul_one_minus(std::uint64_t e) {
  require_exponent(static_cast<std::int64_t>(std::min<std::uint64_t>(e, INT64_MAX)));
  if (e > max_degree()) return;
  for (std::size_t d = max_degree(); d >= e; --d) coeffs_[d] -= coeffs_[d - e];
}

void TruncatedSeries::div_one_minus(std::uint64_t e) {
  require_exponent(static_cast<std::int64_t>(std::min<std::uint64_t>(e, INT64_MAX)));
  for (std::size_t d = e; d <= max_degree(); ++d) coeffs_[d] += coeffs_[d - e];
}

bool TruncatedSeries::all_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c >= 0; });
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_degree(a, b);
  const std::size_t top = a.max_degree();
  std::vector<mpz_class> out(top + 1, 0);
  for (std::size_t i = 0; i <= top; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= top; ++j) out[i + j] += a[i] * b[j];
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries geometric_factor(std::int64_t a, std::size_t max_degree) {
  require_exponent(a);
  auto s = TruncatedSeries::one(max_degree);
  s.div_one_minus(static_cast<std::uint64_t>(a));
  return s;
}

TruncatedSeries rational_series(const std::vector<std::int64_t>& numerator_exponents,
                                const std::vector<std::int64_t>& denominator_exponents,
                                std::size_t max_degree) {
  for (auto e : numerator_exponents) require_exponent(e);
  for (auto e : denominator_exponents) require_exponent(e);
  auto s = TruncatedSeries::one(max_degree);
  for (auto e : denominator_exponents) s.div_one_minus(static_cast<std::uint64_t>(e));
  for (auto e : numerator_exponents) s.mul_one_minus(static_cast<std::uint64_t>(e));
  return s;
}

TruncatedSeries poincare_with_relations(int n, int relations, std::size_t max_degree) {
  if (n < 2 || relations < 0) throw std::invalid_argument("invalid Poincare series parameters");
  auto s = TruncatedSeries::one(max_degree);
  apply_denominator(s, n);
  apply_relations(s, relations);
  return s;
}

TruncatedSeries poincare_quillen(int n, std::size_t max_degree) {
  return poincare_with_relations(n, hurwitz_radon(n), max_degree);
}

TruncatedSeries poincare_cotor(int n, std::size_t max_degree) {
  return poincare_with_relations(n, spin_params(n).h_prime, max_degree);
}

std::optional<std::size_t> first_divergence(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_degree(a, b);
  for (std::size_t d = 0; d <= a.max_degree(); ++d) {
    if (a[d] != b[d]) return d;
  }
  return std::nullopt;
}

std::string to_string(Verdict v) {
  return v == Verdict::collapses ? "collapses" : "does_not_collapse";
}

std::size_t minimum_verdict_degree(int n) {
  return static_cast<std::size_t>(pow2_plus(spin_params(n).h_prime, 2));
}

std::size_t default_truncation(int n) {
  return std::max<std::size_t>(64, static_cast<std::size_t>(pow2_plus(spin_params(n).h_prime, 8)));
}

CollapseAnalysis analyze_collapse(int n, std::size_t max_degree) {
  const SpinParams p = spin_params(n);
  if (max_degree < minimum_verdict_degree(n)) {
    throw InsufficientTruncation("truncation degree " + std::to_string(max_degree) +
                                 " is below 2^{h'}+2 = " +
                                 std::to_string(minimum_verdict_degree(n)) + " for n=" +
                                 std::to_string(n));
  }
  // Both series share the denominator prod (1 - t^k).
  auto base = TruncatedSeries::one(max_degree);
  apply_denominator(base, n);
  auto quillen = base;
  apply_relations(quillen, p.h);
  auto cotor = std::move(base);
  apply_relations(cotor, p.h_prime);

  CollapseAnalysis out;
  out.divergence = first_divergence(cotor, quillen);
  out.verdict = out.divergence ? Verdict::does_not_collapse : Verdict::collapses;
  out.integer_test_agrees = (p.h_prime == p.h) == (out.verdict == Verdict::collapses);
  if (!out.integer_test_agrees) {
    throw std::logic_error("series comparison disagrees with the h' = h test for n=" +
                           std::to_string(n));
  }
  return out;
}

Verdict collapse_verdict(int n, std::size_t max_degree) {
  return analyze_collapse(n, max_degree).verdict;
}

}  // namespace cotor
