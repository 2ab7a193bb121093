#pragma once

// Steenrod squares acting on the cotorsion product F2[w_2, ..., w_n] and the
// relation generators v_0, v_1, ... built from them.
//
// On a generator: Sq^0 w_m = w_{2m-1}, Sq^1 w_m = w_m^2, Sq^j w_m = 0 for
// j >= 2; Sq^0 1 = 1. Products follow the Cartan formula, and w_j = 0 for
// j > n is applied after each square.

#include <memory>
#include <string>
#include <vector>

#include "cotor/f2poly.hpp"
#include "cotor/spinarith.hpp"

namespace cotor {

/// Sq^k before truncation. The result lives in a
/// context wide enough for every Sq^0 image (2 * context).
Polynomial sq_untruncated(unsigned k, const Polynomial& p);

/// Sq^k with w_j = 0 for j > p.context().
Polynomial sq(unsigned k, const Polynomial& p);

/// Sq^{2^{k-1}} ... Sq^2 Sq^1 p, truncating after each square.
Polynomial sq_chain(const Polynomial& p, unsigned k);

/// Element of Cotor_B(F2, F2) = F2[w_2, ..., w_n] for a fixed n.
class CotorElement {
 public:
  CotorElement(Polynomial poly, std::shared_ptr<const SpinParams> params);

  const Polynomial& poly() const { return poly_; }
  const SpinParams& params() const { return *params_; }
  const std::shared_ptr<const SpinParams>& shared_params() const { return params_; }
  bool is_zero() const { return poly_.is_zero(); }

  friend bool operator==(const CotorElement& a, const CotorElement& b) {
    return a.poly_ == b.poly_ && a.params_->n == b.params_->n;
  }

 private:
  Polynomial poly_;
  std::shared_ptr<const SpinParams> params_;
};

CotorElement sq(unsigned k, const CotorElement& e);
CotorElement sq_chain(const CotorElement& e, unsigned k);

/// sum_{i+j=2^{s-1}} w_{2i+1} w_{2j} with w_0 = w_1 = 0 and w_i = 0 for i > n.
CotorElement v_s_element(std::shared_ptr<const SpinParams> params);

/// v_0, ..., v_{count-1}; count may exceed h'.
std::vector<CotorElement> v_sequence(std::shared_ptr<const SpinParams> params, int count);

/// v_0, ..., v_{h'-1}.
std::vector<CotorElement> v_generators(std::shared_ptr<const SpinParams> params);

/// Image in R = F2[w_k : k in E]: kills w_2 and every w_{2^j+1}.
CotorElement project_to_R(const CotorElement& e);

struct VanishingReport {
  int n = 0;
  bool applicable = false;  // D nonempty
  bool top_vanishes = false;          // v_{2s-t+1} = 0 in R
  bool second_checked = false;        // epsilon = 0
  bool second_vanishes = false;       // v_{2s-t} = 0 in R
  bool relations_nonzero = false;     // v_s .. v_{h'-1} nonzero in R
  std::vector<std::string> failures;

  bool ok() const { return applicable && failures.empty(); }
};

/// Throws std::invalid_argument when D is empty.
VanishingReport verify_vanishing(std::shared_ptr<const SpinParams> params);

}  // namespace cotor
