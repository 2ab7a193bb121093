#include "cotor/certify.hpp"

#include <memory>

#include "cotor/groebner.hpp"
#include "cotor/steenrod.hpp"

namespace cotor {

namespace {

Monomial two_factor(std::int64_t a, std::int64_t ea, std::int64_t b) {
  return Monomial({VarPower{static_cast<VarIndex>(a), static_cast<Exponent>(ea)},
                   VarPower{static_cast<VarIndex>(b), 1}});
}

}  // namespace

std::vector<Monomial> expected_leading_monomials(const SpinParams& p) {
  std::vector<Monomial> out;
  if (p.d_empty()) return out;
  const auto count = static_cast<std::size_t>(p.relation_count());
  if (p.n <= 16) {
    const std::vector<Monomial> listed = {two_factor(7, 1, 10), Monomial::var(11, 3),
                                          Monomial::var(13, 5)};
    out.assign(listed.begin(), listed.begin() + std::min(count, listed.size()));
    return out;
  }
  for (int k = 0; k < p.s - p.t; ++k) {
    out.push_back(two_factor(p.sigma[k], std::int64_t{1} << k, p.tau[k]));
  }
  if (p.eps_or_zero() == 1) {
    out.push_back(two_factor(*p.m, std::int64_t{1} << (p.s - p.t), *p.m_prime));
  }
  return out;
}

RegularityCertificate certify_regular_sequence(const SpinParams& params, bool corrupt) {
  RegularityCertificate cert;
  cert.n = params.n;
  cert.applicable = !params.d_empty();
  if (!cert.applicable) return cert;

  auto shared = std::make_shared<const SpinParams>(params);
  const auto v = v_generators(shared);
  for (int k = params.s; k < params.h_prime; ++k) {
    Polynomial rel = project_to_R(v[k]).poly();
    cert.relations.push_back(std::move(rel));
  }
  cert.order = build_order_for_n(params);
  if (corrupt && !cert.relations.empty() && cert.relations.front().size() > 1) {
    auto& first = cert.relations.front();
    first.toggle(leading_monomial(first, *cert.order));
  }
  for (const auto& rel : cert.relations) {
    if (rel.is_zero()) {
      cert.leading.clear();
      cert.expected = expected_leading_monomials(params);
      return cert;
    }
    cert.leading.push_back(leading_monomial(rel, *cert.order));
  }
  cert.expected = expected_leading_monomials(params);
  cert.leading_match = cert.leading == cert.expected;
  cert.coprime = coprime_pairs_criterion(BasisSet(cert.relations, *cert.order));
  return cert;
}

}  // namespace cotor
