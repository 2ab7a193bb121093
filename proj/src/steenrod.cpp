#include "cotor/steenrod.hpp"

#include <stdexcept>

namespace cotor {

namespace {

// C(e, j) mod 2 by Lucas' theorem.
bool binomial_odd(Exponent e, Exponent j) { return (j & ~e) == 0; }

// Sq^k of one monomial as a multiset of monomials (cancellation is left to
// the caller). Cartan recursion, one variable power at a time: the total
// square of w_m is w_{2m-1} + w_m^2 (degrees 0 and 1), so its e-th power
// contributes C(e, j) w_{2m-1}^{e-j} w_m^{2j} in degree j.
std::vector<Monomial> sq_monomial(unsigned k, const Monomial& m) {
  std::vector<std::vector<Monomial>> partial(k + 1);
  partial[0].push_back(Monomial{});
  for (const auto& f : m.factors()) {
    std::vector<std::vector<Monomial>> next(k + 1);
    const VarIndex doubled = 2 * f.index - 1;
    for (unsigned have = 0; have <= k; ++have) {
      if (partial[have].empty()) continue;
      for (Exponent j = 0; j <= f.exponent && have + j <= k; ++j) {
        if (!binomial_odd(f.exponent, j)) continue;
        const Monomial piece({VarPower{doubled, f.exponent - j}, VarPower{f.index, 2 * j}});
        for (const auto& base : partial[have]) next[have + j].push_back(base * piece);
      }
    }
    partial = std::move(next);
  }
  return std::move(partial[k]);
}

}  // namespace

Polynomial sq_untruncated(unsigned k, const Polynomial& p) {
  std::vector<Monomial> out;
  for (const auto& t : p.terms()) {
    auto part = sq_monomial(k, t);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return Polynomial(2 * p.context(), std::move(out));
}

Polynomial sq(unsigned k, const Polynomial& p) {
  return truncate(sq_untruncated(k, p), p.context());
}

Polynomial sq_chain(const Polynomial& p, unsigned k) {
  Polynomial out = p;
  for (unsigned step = 0; step < k; ++step) out = sq(1u << step, out);
  return out;
}

// ------------------------------------------------------------ CotorElement

CotorElement::CotorElement(Polynomial poly, std::shared_ptr<const SpinParams> params)
    : poly_(std::move(poly)), params_(std::move(params)) {
  if (!params_) throw std::invalid_argument("CotorElement needs SpinParams");
  if (poly_.context() != static_cast<VarIndex>(params_->n)) {
    throw std::invalid_argument("polynomial context does not match n=" +
                                std::to_string(params_->n));
  }
}

CotorElement sq(unsigned k, const CotorElement& e) {
  return CotorElement(sq(k, e.poly()), e.shared_params());
}

CotorElement sq_chain(const CotorElement& e, unsigned k) {
  return CotorElement(sq_chain(e.poly(), k), e.shared_params());
}

CotorElement v_s_element(std::shared_ptr<const SpinParams> params) {
  const auto n = static_cast<VarIndex>(params->n);
  const std::int64_t half = std::int64_t{1} << (params->s - 1);
  std::vector<Monomial> terms;
  // i, j >= 1 since w_1 = w_0 = 0.
  for (std::int64_t i = 1; i < half; ++i) {
    const std::int64_t odd = 2 * i + 1;
    const std::int64_t even = 2 * (half - i);
    if (odd > n || even > n) continue;
    terms.push_back(Monomial({VarPower{static_cast<VarIndex>(odd), 1},
                              VarPower{static_cast<VarIndex>(even), 1}}));
  }
  return CotorElement(Polynomial(n, std::move(terms)), std::move(params));
}

std::vector<CotorElement> v_sequence(std::shared_ptr<const SpinParams> params, int count) {
  const auto n = static_cast<VarIndex>(params->n);
  std::vector<CotorElement> out;
  if (count <= 0) return out;
  out.emplace_back(Polynomial::var(n, 2), params);
  for (int k = 1; k < count && k < params->s; ++k) out.push_back(sq(0, out.back()));
  if (count > params->s) out.push_back(v_s_element(params));
  for (int k = params->s + 1; k < count; ++k) {
    const unsigned step = static_cast<unsigned>(k - params->s - 1);
    out.push_back(sq(1u << step, out.back()));
  }
  return out;
}

std::vector<CotorElement> v_generators(std::shared_ptr<const SpinParams> params) {
  const int count = params->h_prime;
  return v_sequence(std::move(params), count);
}

CotorElement project_to_R(const CotorElement& e) {
  const SpinParams& p = e.params();
  std::set<VarIndex> kill;
  for (int k = kFirstVar; k <= p.n; ++k) {
    if (!p.in_E(k)) kill.insert(static_cast<VarIndex>(k));
  }
  return CotorElement(substitute_zero(e.poly(), kill), e.shared_params());
}

VanishingReport verify_vanishing(std::shared_ptr<const SpinParams> params) {
  const SpinParams& p = *params;
  if (p.d_empty()) {
    throw std::invalid_argument("vanishing check needs D nonempty (n=" + std::to_string(p.n) + ")");
  }
  VanishingReport report;
  report.n = p.n;
  report.applicable = true;
  const int top = 2 * p.s - p.t + 1;
  const auto seq = v_sequence(params, top + 1);

  report.top_vanishes = project_to_R(seq[top]).is_zero();
  if (!report.top_vanishes) {
    report.failures.push_back("v_" + std::to_string(top) + " is nonzero in R");
  }
  if (p.eps_or_zero() == 0) {
    report.second_checked = true;
    report.second_vanishes = project_to_R(seq[top - 1]).is_zero();
    if (!report.second_vanishes) {
      report.failures.push_back("v_" + std::to_string(top - 1) + " is nonzero in R");
    }
  }
  report.relations_nonzero = true;
  for (int k = p.s; k < p.h_prime; ++k) {
    if (project_to_R(seq[k]).is_zero()) {
      report.relations_nonzero = false;
      report.failures.push_back("v_" + std::to_string(k) + " vanishes in R");
    }
  }
  return report;
}

}  // namespace cotor
