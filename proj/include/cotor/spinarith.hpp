#pragma once

// Integer invariants attached to Spin(n): the exponent s with 2^{s-1} < n <= 2^s,
// the auxiliary t, the index sets E and D, m, m', epsilon, the relation
// count h', the enumerations sigma/tau, and the Hurwitz-Radon number h.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cotor {

/// Number of ones in the binary expansion of k (k >= 1).
int alpha(std::int64_t k);

/// Hurwitz-Radon number for n >= 9.
int hurwitz_radon(int n);

struct SpinParams {
  int n = 0;
  int s = 0;
  int t = 0;
  std::vector<int> E;  // ascending
  std::vector<int> D;  // ascending
  std::optional<int> m;
  std::optional<std::int64_t> m_prime;
  std::optional<int> epsilon;
  int h_prime = 0;
  int ell = 0;  // n = 8*ell + r, 1 <= r <= 8
  int h = 0;
  std::vector<int> sigma;  // indexed 0 .. n-s-2, a bijection onto E
  std::vector<int> tau;    // indexed 0 .. s-t-1
  std::set<int> C0;
  std::set<int> C1;

  bool d_empty() const { return D.empty(); }
  /// Number of relations v_s, ..., v_{h'-1} living in R.
  int relation_count() const { return h_prime - s; }
  /// epsilon with absent treated as 0.
  int eps_or_zero() const { return epsilon.value_or(0); }
  bool in_E(int k) const;
};

/// Throws std::invalid_argument for n < 9.
SpinParams spin_params(int n);

enum class CheckStatus { pass, fail, not_applicable };

struct NamedCheck {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct CheckReport {
  int n = 0;
  std::vector<NamedCheck> checks;

  bool ok() const;
  std::size_t failures() const;
};

std::string to_string(CheckStatus status);

/// Structural invariants of SpinParams and the bounds on D, sigma, tau, m, m'
/// and h' checked by direct enumeration.
CheckReport verify_parameter_identities(int n);

}  // namespace cotor
