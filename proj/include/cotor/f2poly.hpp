#pragma once

// Sparse multivariate polynomials over GF(2) in the Stiefel-Whitney style
// generators w_2, ..., w_n with graded degree deg w_k = k.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cotor {

using VarIndex = std::uint32_t;
using Exponent = std::uint32_t;

/// Smallest generator index; w_0 and w_1 are identically zero.
inline constexpr VarIndex kFirstVar = 2;

struct VarPower {
  VarIndex index;
  Exponent exponent;

  friend auto operator<=>(const VarPower&, const VarPower&) = default;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A monomial prod w_k^{e_k}, stored sparsely with indices ascending and
/// no zero exponents. The empty monomial is the unit 1.
class Monomial {
 public:
  Monomial() = default;
  /// Builds from arbitrary (index, exponent) pairs; repeated indices are
  /// merged and zero exponents dropped.
  Monomial(std::initializer_list<VarPower> factors);
  explicit Monomial(std::vector<VarPower> factors);

  static Monomial var(VarIndex index, Exponent exponent = 1);

  const std::vector<VarPower>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  Exponent exponent(VarIndex index) const;
  /// Largest variable index present, 0 for the unit.
  VarIndex max_index() const { return factors_.empty() ? 0 : factors_.back().index; }

  /// Sum of index * exponent.
  std::uint64_t graded_degree() const;
  /// Sum of exponents.
  std::uint64_t factor_count() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Caller guarantees divides(*this, other) == true for other / *this.
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  // Storage order only (lexicographic on the factor list); term orders live
  // in order.hpp.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<VarPower> factors_;
};

std::uint64_t graded_degree(const Monomial& m);

/// Element of F2[w_2, ..., w_n]. The context n is the largest permitted
/// variable index; arithmetic requires equal contexts.
class Polynomial {
 public:
  explicit Polynomial(VarIndex context);
  Polynomial(VarIndex context, const Monomial& m);
  /// Terms are toggled in, so repeated monomials cancel in pairs.
  Polynomial(VarIndex context, std::vector<Monomial> terms);

  static Polynomial zero(VarIndex context) { return Polynomial(context); }
  static Polynomial one(VarIndex context) { return Polynomial(context, Monomial{}); }
  static Polynomial var(VarIndex context, VarIndex index, Exponent exponent = 1);

  VarIndex context() const { return context_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool contains(const Monomial& m) const;

  /// True iff every term has the same graded degree (zero counts as homogeneous).
  bool is_homogeneous() const;

  Polynomial& operator+=(const Polynomial& other);
  /// Adds a single monomial (toggles its membership).
  Polynomial& toggle(const Monomial& m);

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Monomial& m);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void check_index_range() const;

  VarIndex context_;
  std::vector<Monomial> terms_;  // sorted by Monomial::operator<, unique
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

/// Removes every monomial that contains one of the killed indices.
Polynomial substitute_zero(const Polynomial& p, const std::set<VarIndex>& kill);
/// Applies w_j = 0 for j > bound and moves the result into context `bound`.
Polynomial truncate(const Polynomial& p, VarIndex bound);
/// Same polynomial viewed in a larger (or equal) context.
Polynomial widen(const Polynomial& p, VarIndex context);

/// Canonical text: terms descending under degrevlex with w_2 > w_3 > ...,
/// factors ascending by index, e.g. "w7*w10 + w6*w11 + w4*w13".
std::string format_monomial(const Monomial& m);
std::string format_poly(const Polynomial& p);

Monomial parse_monomial(std::string_view text, VarIndex context);
Polynomial parse_poly(std::string_view text, VarIndex context);

/// Ordering used by format_poly; true when a sorts before b in the output.
bool canonical_before(const Monomial& a, const Monomial& b);

}  // namespace cotor
