#pragma once

// Truncated integer power series in t and the two Poincare series being
// compared: the Hurwitz-Radon one (h relations) and the cotorsion one
// (h' relations).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cotor {

/// Coefficients c_0 .. c_D of a power series truncated after t^D.
class TruncatedSeries {
 public:
  /// The series 1 (c_0 = 1, the rest zero).
  static TruncatedSeries one(std::size_t max_degree);
  static TruncatedSeries zero(std::size_t max_degree);
  /// Throws std::invalid_argument on an empty coefficient list.
  explicit TruncatedSeries(std::vector<mpz_class> coeffs);

  std::size_t max_degree() const { return coeffs_.size() - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& operator[](std::size_t d) const { return coeffs_.at(d); }

  /// In-place multiply by (1 - t^e), e >= 1.
  void mul_one_minus(std::uint64_t e);
  /// In-place multiply by 1 / (1 - t^e), e >= 1.
  void div_one_minus(std::uint64_t e);

  bool all_nonnegative() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<mpz_class> coeffs_;
};

class InsufficientTruncation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cauchy product truncated at the common D.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Expansion of 1 / (1 - t^a).
TruncatedSeries geometric_factor(std::int64_t a, std::size_t max_degree);

/// prod (1 - t^e) over the numerator / prod (1 - t^e) over the denominator.
TruncatedSeries rational_series(const std::vector<std::int64_t>& numerator_exponents,
                                const std::vector<std::int64_t>& denominator_exponents,
                                std::size_t max_degree);

/// prod_{k<relations} (1 - t^{2^k+1}) / ((1 - t^{2^relations}) prod_{k=2}^{n} (1 - t^k)).
TruncatedSeries poincare_with_relations(int n, int relations, std::size_t max_degree);
TruncatedSeries poincare_quillen(int n, std::size_t max_degree);
TruncatedSeries poincare_cotor(int n, std::size_t max_degree);

/// Least d with a_d != b_d, if any.
std::optional<std::size_t> first_divergence(const TruncatedSeries& a, const TruncatedSeries& b);

enum class Verdict { collapses, does_not_collapse };

std::string to_string(Verdict v);

/// Smallest truncation at which collapse_verdict answers for n: 2^{h'} + 2.
std::size_t minimum_verdict_degree(int n);

/// Default truncation for reports: max(64, 2^{h'} + 8).
std::size_t default_truncation(int n);

struct CollapseAnalysis {
  Verdict verdict;
  std::optional<std::size_t> divergence;
  bool integer_test_agrees;  // (h' == h) == (verdict == collapses)
};

/// Compares the two series through D. Throws InsufficientTruncation when
/// D < 2^{h'} + 2 and std::logic_error if the series and the h' = h test
/// disagree.
CollapseAnalysis analyze_collapse(int n, std::size_t max_degree);
Verdict collapse_verdict(int n, std::size_t max_degree);

}  // namespace cotor
