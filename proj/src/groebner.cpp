#include "cotor/groebner.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace cotor {

namespace {

// Descending under the term order, so begin() is the leading monomial.
struct Descending {
  const TermOrder* ord;
  bool operator()(const Monomial& a, const Monomial& b) const { return ord->compare(a, b) > 0; }
};

using WorkSet = std::set<Monomial, Descending>;

void toggle(WorkSet& set, const Monomial& m) {
  auto [it, inserted] = set.insert(m);
  if (!inserted) set.erase(it);
}

void require_groebner(const BasisSet& basis) {
  if (!is_groebner(basis)) throw NotGroebnerError("generator set is not a Groebner basis");
}

}  // namespace

BasisSet::BasisSet(std::vector<Polynomial> gens, TermOrder ord)
    : gens_(std::move(gens)), ord_(std::move(ord)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].is_zero()) throw std::invalid_argument("basis contains the zero polynomial");
    if (gens_[i].context() != gens_.front().context()) {
      throw std::invalid_argument("basis generators have different contexts");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (gens_[i] == gens_[j]) throw std::invalid_argument("basis contains a repeated generator");
    }
    leading_.push_back(leading_monomial(gens_[i], ord_));
  }
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of a zero input");
  const Monomial lf = leading_monomial(f, ord);
  const Monomial lg = leading_monomial(g, ord);
  const Monomial l = lf.lcm(lg);
  return f * l.quotient(lf) + g * l.quotient(lg);
}

Reduction reduce(const Polynomial& f, const BasisSet& basis) {
  const TermOrder& ord = basis.order();
  WorkSet work(f.terms().begin(), f.terms().end(), Descending{&ord});
  std::vector<Monomial> remainder;
  while (!work.empty()) {
    const Monomial lead = *work.begin();
    std::size_t pick = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis.leading()[i].divides(lead)) {
        pick = i;
        break;
      }
    }
    if (pick == basis.size()) {
      remainder.push_back(lead);
      work.erase(work.begin());
      continue;
    }
    const Monomial factor = lead.quotient(basis.leading()[pick]);
    for (const auto& t : basis.gens()[pick].terms()) toggle(work, t * factor);
  }
  Polynomial nf(f.context(), std::move(remainder));
  const bool zero = nf.is_zero();
  return {std::move(nf), zero};
}

bool is_groebner(const BasisSet& basis) {
  const auto& g = basis.gens();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!reduce(s_polynomial(g[i], g[j], basis.order()), basis).reduced_to_zero) return false;
    }
  }
  return true;
}

bool coprime_pairs_criterion(const BasisSet& basis) {
  const auto& lm = basis.leading();
  for (std::size_t i = 0; i < lm.size(); ++i) {
    for (std::size_t j = i + 1; j < lm.size(); ++j) {
      if (!lm[i].coprime(lm[j])) return false;
    }
  }
  return true;
}

BasisSet buchberger_completion(const BasisSet& input) {
  std::vector<Polynomial> gens = input.gens();
  const TermOrder& ord = input.order();
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < gens.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  BasisSet current(gens, ord);
  while (!pairs.empty()) {
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    if (current.leading()[i].coprime(current.leading()[j])) continue;
    auto r = reduce(s_polynomial(gens[i], gens[j], ord), current);
    if (r.reduced_to_zero) continue;
    gens.push_back(std::move(r.normal_form));
    const std::size_t k = gens.size() - 1;
    for (std::size_t i2 = 0; i2 < k; ++i2) pairs.emplace_back(i2, k);
    current = BasisSet(gens, ord);
  }
  return current;
}

BasisSet reduced_basis(const BasisSet& input) {
  const BasisSet gb = buchberger_completion(input);
  const TermOrder& ord = gb.order();
  // Drop generators whose leading monomial is divisible by another one's.
  std::vector<Polynomial> minimal;
  std::vector<Monomial> minimal_lm;
  for (std::size_t i = 0; i < gb.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gb.size() && !redundant; ++j) {
      if (i == j || !gb.leading()[j].divides(gb.leading()[i])) continue;
      // Equal leading monomials: keep the lower index.
      redundant = gb.leading()[j] != gb.leading()[i] || j < i;
    }
    if (!redundant) {
      minimal.push_back(gb.gens()[i]);
      minimal_lm.push_back(gb.leading()[i]);
    }
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const Polynomial tail = minimal[i] + Polynomial(minimal[i].context(), minimal_lm[i]);
    Polynomial nf = reduce(tail, BasisSet(others, ord)).normal_form;
    nf.toggle(minimal_lm[i]);
    out.push_back(std::move(nf));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.compare(leading_monomial(a, ord), leading_monomial(b, ord)) < 0;
  });
  return BasisSet(std::move(out), ord);
}

bool is_regular_sequence_by_coprimality(const BasisSet& basis) {
  return coprime_pairs_criterion(basis);
}

bool ideal_membership(const Polynomial& f, const BasisSet& basis) {
  require_groebner(basis);
  return reduce(f, basis).reduced_to_zero;
}

TruncatedSeries standard_monomial_series(const BasisSet& basis, std::vector<GradedVar> vars,
                                         std::size_t max_degree) {
  require_groebner(basis);
  std::sort(vars.begin(), vars.end(), [](const GradedVar& a, const GradedVar& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.index < b.index;
  });
  for (const auto& v : vars) {
    if (v.degree == 0) throw std::invalid_argument("variables must have positive degree");
  }
  std::vector<mpz_class> counts(max_degree + 1, 0);
  const auto& lms = basis.leading();
  auto is_standard = [&](const Monomial& m) {
    return std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
  };

  // Each monomial is generated once, multiplying variables in nondecreasing
  // position. Non-standard monomials are pruned with their multiples.
  std::function<void(std::size_t, const Monomial&, std::uint64_t)> visit =
      [&](std::size_t start, const Monomial& m, std::uint64_t degree) {
        counts[degree] += 1;
        for (std::size_t i = start; i < vars.size(); ++i) {
          const std::uint64_t next = degree + vars[i].degree;
          if (next > max_degree) break;
          Monomial child = m * Monomial::var(vars[i].index);
          if (is_standard(child)) visit(i, child, next);
        }
      };
  if (is_standard(Monomial{})) visit(0, Monomial{}, 0);
  return TruncatedSeries(std::move(counts));
}

}  // namespace cotor
