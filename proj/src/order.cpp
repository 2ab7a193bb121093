#include "cotor/order.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cotor {

namespace {

constexpr std::size_t kUnranked = std::numeric_limits<std::size_t>::max();

struct RankedPower {
  std::size_t rank;
  Exponent exponent;
};

}  // namespace

TermOrder::TermOrder(OrderKind kind, DegreeMeasure measure, std::vector<VarIndex> ranking,
                     std::size_t weight_block)
    : kind_(kind), measure_(measure), ranking_(std::move(ranking)), weight_block_(weight_block) {
  if (weight_block_ > ranking_.size()) {
    throw std::invalid_argument("weight block exceeds the number of ranked variables");
  }
  VarIndex top = 0;
  for (VarIndex v : ranking_) top = std::max(top, v);
  rank_.assign(static_cast<std::size_t>(top) + 1, kUnranked);
  for (std::size_t r = 0; r < ranking_.size(); ++r) {
    if (ranking_[r] < kFirstVar) throw std::invalid_argument("ranking contains an index below 2");
    if (rank_[ranking_[r]] != kUnranked) {
      throw std::invalid_argument("ranking repeats w" + std::to_string(ranking_[r]));
    }
    rank_[ranking_[r]] = r;
  }
}

TermOrder TermOrder::degrevlex(std::vector<VarIndex> ranking, DegreeMeasure measure) {
  return TermOrder(OrderKind::deg_rev_lex, measure, std::move(ranking), 0);
}

TermOrder TermOrder::weightlex(std::vector<VarIndex> ranking, std::size_t weight_block) {
  return TermOrder(OrderKind::weight_lex, DegreeMeasure::variable_count, std::move(ranking),
                   weight_block);
}

bool TermOrder::ranks(VarIndex index) const {
  return index < rank_.size() && rank_[index] != kUnranked;
}

std::size_t TermOrder::rank_of(VarIndex index) const {
  if (!ranks(index)) {
    throw std::invalid_argument("w" + std::to_string(index) + " is not ranked by " + describe());
  }
  return rank_[index];
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  auto ranked = [this](const Monomial& m) {
    std::vector<RankedPower> out;
    out.reserve(m.factors().size());
    for (const auto& f : m.factors()) out.push_back({rank_of(f.index), f.exponent});
    std::sort(out.begin(), out.end(),
              [](const RankedPower& x, const RankedPower& y) { return x.rank < y.rank; });
    return out;
  };
  const auto ra = ranked(a);
  const auto rb = ranked(b);

  if (kind_ == OrderKind::deg_rev_lex) {
    auto degree = [this](const Monomial& m) {
      return measure_ == DegreeMeasure::graded ? m.graded_degree() : m.factor_count();
    };
    if (auto c = degree(a) <=> degree(b); c != 0) return c;
    // Walk from the least-ranked end.
    auto ia = ra.rbegin();
    auto ib = rb.rbegin();
    while (ia != ra.rend() || ib != rb.rend()) {
      const bool has_a = ia != ra.rend();
      const bool has_b = ib != rb.rend();
      const std::size_t low = !has_a ? ib->rank : !has_b ? ia->rank : std::max(ia->rank, ib->rank);
      const Exponent ea = has_a && ia->rank == low ? ia->exponent : 0;
      const Exponent eb = has_b && ib->rank == low ? ib->exponent : 0;
      if (ea != eb) return eb <=> ea;
      if (has_a && ia->rank == low) ++ia;
      if (has_b && ib->rank == low) ++ib;
    }
    return std::strong_ordering::equal;
  }

  auto weight = [this](const std::vector<RankedPower>& r) {
    std::uint64_t w = 0;
    for (const auto& x : r) {
      if (x.rank < weight_block_) w += x.exponent;
    }
    return w;
  };
  if (auto c = weight(ra) <=> weight(rb); c != 0) return c;
  auto ia = ra.begin();
  auto ib = rb.begin();
  while (ia != ra.end() || ib != rb.end()) {
    const bool has_a = ia != ra.end();
    const bool has_b = ib != rb.end();
    const std::size_t high = !has_a ? ib->rank : !has_b ? ia->rank : std::min(ia->rank, ib->rank);
    const Exponent ea = has_a && ia->rank == high ? ia->exponent : 0;
    const Exponent eb = has_b && ib->rank == high ? ib->exponent : 0;
    if (ea != eb) return ea <=> eb;
    if (has_a && ia->rank == high) ++ia;
    if (has_b && ib->rank == high) ++ib;
  }
  return std::strong_ordering::equal;
}

std::string TermOrder::describe() const {
  std::string out;
  if (kind_ == OrderKind::deg_rev_lex) {
    out = measure_ == DegreeMeasure::graded ? "degrevlex[graded](" : "degrevlex[count](";
  } else {
    out = "weightlex[" + std::to_string(weight_block_) + "](";
  }
  for (std::size_t r = 0; r < ranking_.size(); ++r) {
    if (r > 0) out += '>';
    out += 'w' + std::to_string(ranking_[r]);
  }
  out += ')';
  return out;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, const TermOrder& ord) {
  return ord.compare(a, b);
}

Monomial leading_monomial(const Polynomial& p, const TermOrder& ord) {
  if (p.is_zero()) throw std::invalid_argument("leading monomial of the zero polynomial");
  const Monomial* best = &p.terms().front();
  for (const auto& t : p.terms()) {
    if (ord.compare(t, *best) > 0) best = &t;
  }
  return *best;
}

TermOrder build_order_for_n(const SpinParams& params) {
  const int n = params.n;
  if (params.d_empty()) {
    throw std::invalid_argument("no term order is needed for n = 2^{s-1}+1 (n=" +
                                std::to_string(n) + ")");
  }
  if (n <= 16) {
    std::vector<VarIndex> ranking(params.E.begin(), params.E.end());
    return TermOrder::degrevlex(std::move(ranking));
  }
  std::vector<VarIndex> ranking(params.sigma.begin(), params.sigma.end());
  return TermOrder::weightlex(std::move(ranking),
                              static_cast<std::size_t>(params.s - params.t + params.eps_or_zero()));
}

}  // namespace cotor
