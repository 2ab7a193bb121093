#pragma once

// Regular-sequence certificate for v_s, ..., v_{h'-1} in R: leading
// monomials under the order from build_order_for_n must match the expected
// closed forms and be pairwise coprime.

#include <optional>
#include <string>
#include <vector>

#include "cotor/f2poly.hpp"
#include "cotor/order.hpp"
#include "cotor/spinarith.hpp"

namespace cotor {

struct RegularityCertificate {
  int n = 0;
  bool applicable = false;  // false for n = 9 and n = 2^{s-1}+1
  std::optional<TermOrder> order;
  std::vector<Polynomial> relations;  // images of v_s .. v_{h'-1} in R
  std::vector<Monomial> leading;
  std::vector<Monomial> expected;
  bool leading_match = false;
  bool coprime = false;

  bool ok() const { return !applicable || (leading_match && coprime); }
};

/// Expected leading monomials of v_s, ..., v_{h'-1}: w7*w10, w11^3, w13^5
/// (truncated to h'-s entries) for 10 <= n <= 16; w_{sigma(k)}^{2^k} w_{tau(k)}
/// for 0 <= k < s-t, plus w_m^{2^{s-t}} w_{m'} when epsilon = 1, for n >= 18.
std::vector<Monomial> expected_leading_monomials(const SpinParams& params);

/// `corrupt` drops the leading term of v_s before certifying; it exists so
/// the failure path can be exercised.
RegularityCertificate certify_regular_sequence(const SpinParams& params, bool corrupt = false);

}  // namespace cotor
