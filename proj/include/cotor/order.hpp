#pragma once

// Term orders on monomials in the w-generators.

#include <compare>
#include <string>
#include <vector>

#include "cotor/f2poly.hpp"
#include "cotor/spinarith.hpp"

namespace cotor {

enum class OrderKind { deg_rev_lex, weight_lex };

/// How the degree component of degrevlex is measured.
enum class DegreeMeasure {
  variable_count,  // each variable has weight 1
  graded,          // w_k has weight k
};

/// A term order over an explicit variable ranking (greatest first).
///
/// deg_rev_lex compares the degree first; on ties the monomial with the
/// larger exponent on the least-ranked differing variable is smaller.
/// weight_lex compares the exponent sum over the first `weight_block`
/// ranked variables, then the ranked exponent sequence lexicographically.
class TermOrder {
 public:
  static TermOrder degrevlex(std::vector<VarIndex> ranking,
                             DegreeMeasure measure = DegreeMeasure::variable_count);
  static TermOrder weightlex(std::vector<VarIndex> ranking, std::size_t weight_block);

  OrderKind kind() const { return kind_; }
  DegreeMeasure measure() const { return measure_; }
  const std::vector<VarIndex>& ranking() const { return ranking_; }
  std::size_t weight_block() const { return weight_block_; }
  bool ranks(VarIndex index) const;

  /// Throws std::invalid_argument if either monomial uses an unranked variable.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// e.g. "degrevlex[count](w4>w6>w7)" or "weightlex[2](w15>w23>w7)".
  std::string describe() const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  TermOrder(OrderKind kind, DegreeMeasure measure, std::vector<VarIndex> ranking,
            std::size_t weight_block);
  std::size_t rank_of(VarIndex index) const;

  OrderKind kind_;
  DegreeMeasure measure_;
  std::vector<VarIndex> ranking_;
  std::size_t weight_block_;
  std::vector<std::size_t> rank_;  // by variable index; npos when unranked
};

std::strong_ordering compare(const Monomial& a, const Monomial& b, const TermOrder& ord);

/// Throws std::invalid_argument for the zero polynomial.
Monomial leading_monomial(const Polynomial& p, const TermOrder& ord);

/// The order used to certify regularity of v_s, ..., v_{h'-1} in R:
/// degrevlex over E ascending for 10 <= n <= 16, the sigma-ranked weight
/// order with block s-t+epsilon for n >= 18. Throws for n = 9 and for
/// n = 2^{s-1}+1.
TermOrder build_order_for_n(const SpinParams& params);

}  // namespace cotor
