#pragma once

// Seeded random inputs for the property tests.

#include <algorithm>
#include <random>
#include <vector>

#include "cotor/f2poly.hpp"

namespace cotor::testing {

/// Monomials in `vars` of graded degree exactly d (w_k has degree k).
inline std::vector<Monomial> monomials_of_degree(const std::vector<VarIndex>& vars,
                                                 std::uint64_t d) {
  std::vector<Monomial> out;
  std::vector<VarPower> cur;
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
    if (i == vars.size()) {
      if (left == 0) out.push_back(Monomial(cur));
      return;
    }
    for (Exponent e = 0; e * vars[i] <= left; ++e) {
      if (e > 0) cur.push_back({vars[i], e});
      self(self, i + 1, left - e * vars[i]);
      if (e > 0) cur.pop_back();
    }
  };
  rec(rec, 0, d);
  return out;
}

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Monomial monomial(VarIndex context, int max_vars = 3, Exponent max_exp = 4) {
    std::vector<VarPower> f;
    const int count = integer(0, max_vars);
    for (int i = 0; i < count; ++i) {
      f.push_back({static_cast<VarIndex>(integer(kFirstVar, static_cast<int>(context))),
                   static_cast<Exponent>(integer(1, static_cast<int>(max_exp)))});
    }
    return Monomial(std::move(f));
  }

  /// Monomial using only the given variables.
  Monomial monomial_in(const std::vector<VarIndex>& vars, Exponent max_exp = 4) {
    std::vector<VarPower> f;
    for (VarIndex v : vars) {
      const int e = integer(0, static_cast<int>(max_exp));
      if (e > 0) f.push_back({v, static_cast<Exponent>(e)});
    }
    return Monomial(std::move(f));
  }

  Polynomial poly(VarIndex context, int max_terms = 5) {
    std::vector<Monomial> terms;
    const int count = integer(0, max_terms);
    for (int i = 0; i < count; ++i) terms.push_back(monomial(context));
    return Polynomial(context, std::move(terms));
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

struct HomogeneousSystem {
  std::vector<VarIndex> vars;  // ascending
  std::vector<Polynomial> gens;  // distinct, nonzero, each homogeneous
};

/// 1 to 3 variables drawn from w2..w7, 1 to 3 generators of graded degree
/// 2..12, all in context 7.
inline HomogeneousSystem random_system(Gen& g) {
  for (;;) {
    std::vector<VarIndex> pool = {2, 3, 4, 5, 6, 7};
    std::shuffle(pool.begin(), pool.end(), g.engine());
    HomogeneousSystem sys;
    sys.vars.assign(pool.begin(), pool.begin() + g.integer(1, 3));
    std::sort(sys.vars.begin(), sys.vars.end());
    const int want = g.integer(1, 3);
    for (int attempt = 0; attempt < 20 && static_cast<int>(sys.gens.size()) < want; ++attempt) {
      std::vector<Monomial> terms;
      for (const auto& m : monomials_of_degree(sys.vars, g.integer(2, 12))) {
        if (g.coin()) terms.push_back(m);
      }
      Polynomial f(7, std::move(terms));
      if (f.is_zero() || std::find(sys.gens.begin(), sys.gens.end(), f) != sys.gens.end()) continue;
      sys.gens.push_back(std::move(f));
    }
    if (!sys.gens.empty()) return sys;
  }
}

}  // namespace cotor::testing
