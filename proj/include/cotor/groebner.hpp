#pragma once

// Buchberger machinery over GF(2): S-polynomials, full reduction, the
// pairwise criterion, completion, and standard-monomial counting.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cotor/f2poly.hpp"
#include "cotor/order.hpp"
#include "cotor/series.hpp"

namespace cotor {

/// Nonzero, pairwise distinct generators together with the order that
/// defines their leading monomials.
class BasisSet {
 public:
  /// Throws std::invalid_argument on a zero or repeated generator, or on
  /// mismatched contexts.
  BasisSet(std::vector<Polynomial> gens, TermOrder ord);

  const std::vector<Polynomial>& gens() const { return gens_; }
  const std::vector<Monomial>& leading() const { return leading_; }
  const TermOrder& order() const { return ord_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }

 private:
  std::vector<Polynomial> gens_;
  std::vector<Monomial> leading_;
  TermOrder ord_;
};

class NotGroebnerError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Reduction {
  Polynomial normal_form;
  bool reduced_to_zero;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord);

/// Full reduction: the normal form has no term divisible by any leading
/// monomial of G. When several generators apply, the lowest index wins.
Reduction reduce(const Polynomial& f, const BasisSet& basis);

/// Buchberger criterion over all distinct pairs.
bool is_groebner(const BasisSet& basis);

/// True iff the leading monomials are pairwise coprime.
bool coprime_pairs_criterion(const BasisSet& basis);

/// Adjoins nonzero S-polynomial remainders until the criterion holds.
/// Input generators are kept as given; coprime pairs are skipped.
BasisSet buchberger_completion(const BasisSet& input);

/// Minimal, tail-reduced Groebner basis of the same ideal.
BasisSet reduced_basis(const BasisSet& input);

/// Sufficient condition for regularity; false is not a disproof.
bool is_regular_sequence_by_coprimality(const BasisSet& basis);

/// Throws NotGroebnerError unless is_groebner(basis).
bool ideal_membership(const Polynomial& f, const BasisSet& basis);

struct GradedVar {
  VarIndex index;
  std::uint64_t degree;
};

/// c_d = number of monomials of graded degree d in `vars` that no leading
/// monomial of the basis divides, by exhaustive enumeration.
/// Throws NotGroebnerError unless is_groebner(basis).
TruncatedSeries standard_monomial_series(const BasisSet& basis, std::vector<GradedVar> vars,
                                         std::size_t max_degree);

}  // namespace cotor
