#include "cotor/f2poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace cotor {

namespace {

std::vector<VarPower> normalize(std::vector<VarPower> factors) {
  for (const auto& f : factors) {
    if (f.index < kFirstVar) {
      throw std::invalid_argument("variable index " + std::to_string(f.index) +
                                  " is below 2");
    }
  }
  std::sort(factors.begin(), factors.end());
  std::vector<VarPower> out;
  out.reserve(factors.size());
  for (const auto& f : factors) {
    if (f.exponent == 0) continue;
    if (!out.empty() && out.back().index == f.index) {
      out.back().exponent += f.exponent;
    } else {
      out.push_back(f);
    }
  }
  return out;
}

// Sorts and cancels duplicates in pairs.
std::vector<Monomial> cancel_pairs(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<Monomial> out;
  out.reserve(terms.size());
  std::size_t i = 0;
  while (i < terms.size()) {
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(std::move(terms[i]));
    i = j;
  }
  return out;
}

void require_same_context(const Polynomial& p, const Polynomial& q) {
  if (p.context() != q.context()) {
    throw std::invalid_argument("polynomial contexts differ: n=" +
                                std::to_string(p.context()) + " vs n=" +
                                std::to_string(q.context()));
  }
}

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::initializer_list<VarPower> factors)
    : factors_(normalize(std::vector<VarPower>(factors))) {}

Monomial::Monomial(std::vector<VarPower> factors) : factors_(normalize(std::move(factors))) {}

Monomial Monomial::var(VarIndex index, Exponent exponent) {
  return Monomial({VarPower{index, exponent}});
}

Exponent Monomial::exponent(VarIndex index) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), index,
                             [](const VarPower& f, VarIndex i) { return f.index < i; });
  return (it != factors_.end() && it->index == index) ? it->exponent : 0;
}

std::uint64_t Monomial::graded_degree() const {
  std::uint64_t d = 0;
  for (const auto& f : factors_) d += std::uint64_t{f.index} * f.exponent;
  return d;
}

std::uint64_t Monomial::factor_count() const {
  std::uint64_t c = 0;
  for (const auto& f : factors_) c += f.exponent;
  return c;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& f : factors_) {
    while (it != other.factors_.end() && it->index < f.index) ++it;
    if (it == other.factors_.end() || it->index != f.index || it->exponent < f.exponent) {
      return false;
    }
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->index == b->index) return false;
    if (a->index < b->index) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  out.factors_.reserve(factors_.size());
  auto d = divisor.factors_.begin();
  for (const auto& f : factors_) {
    Exponent e = f.exponent;
    if (d != divisor.factors_.end() && d->index == f.index) {
      e -= d->exponent;
      ++d;
    }
    if (e > 0) out.factors_.push_back({f.index, e});
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->index < b->index)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->index < a->index) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.push_back({a->index, std::max(a->exponent, b->exponent)});
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  Monomial out;
  out.factors_.reserve(x.factors_.size() + y.factors_.size());
  auto a = x.factors_.begin();
  auto b = y.factors_.begin();
  while (a != x.factors_.end() || b != y.factors_.end()) {
    if (b == y.factors_.end() || (a != x.factors_.end() && a->index < b->index)) {
      out.factors_.push_back(*a++);
    } else if (a == x.factors_.end() || b->index < a->index) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.push_back({a->index, a->exponent + b->exponent});
      ++a;
      ++b;
    }
  }
  return out;
}

std::uint64_t graded_degree(const Monomial& m) { return m.graded_degree(); }

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(VarIndex context) : context_(context) {}

Polynomial::Polynomial(VarIndex context, const Monomial& m) : context_(context), terms_{m} {
  check_index_range();
}

Polynomial::Polynomial(VarIndex context, std::vector<Monomial> terms)
    : context_(context), terms_(cancel_pairs(std::move(terms))) {
  check_index_range();
}

Polynomial Polynomial::var(VarIndex context, VarIndex index, Exponent exponent) {
  return Polynomial(context, Monomial::var(index, exponent));
}

void Polynomial::check_index_range() const {
  for (const auto& t : terms_) {
    if (t.max_index() > context_) {
      throw std::invalid_argument("variable w" + std::to_string(t.max_index()) +
                                  " outside [2, " + std::to_string(context_) + "]");
    }
  }
}

bool Polynomial::contains(const Monomial& m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.front().graded_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Monomial& m) { return m.graded_degree() == d; });
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_context(*this, other);
  std::vector<Monomial> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                other.terms_.end(), std::back_inserter(out));
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::toggle(const Monomial& m) {
  if (m.max_index() > context_) {
    throw std::invalid_argument("variable w" + std::to_string(m.max_index()) +
                                " outside [2, " + std::to_string(context_) + "]");
  }
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m);
  if (it != terms_.end() && *it == m) {
    terms_.erase(it);
  } else {
    terms_.insert(it, m);
  }
  return *this;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  Polynomial r = p;
  r += q;
  return r;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  require_same_context(p, q);
  std::vector<Monomial> prods;
  prods.reserve(p.terms_.size() * q.terms_.size());
  for (const auto& a : p.terms_) {
    for (const auto& b : q.terms_) prods.push_back(a * b);
  }
  Polynomial r(p.context_);
  r.terms_ = cancel_pairs(std::move(prods));
  return r;
}

Polynomial operator*(const Polynomial& p, const Monomial& m) {
  if (m.max_index() > p.context_) {
    throw std::invalid_argument("variable w" + std::to_string(m.max_index()) +
                                " outside [2, " + std::to_string(p.context_) + "]");
  }
  // Multiplying by a monomial is injective, so the sorted order may change
  // but no cancellation can occur.
  Polynomial r(p.context_);
  r.terms_.reserve(p.terms_.size());
  for (const auto& a : p.terms_) r.terms_.push_back(a * m);
  std::sort(r.terms_.begin(), r.terms_.end());
  return r;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial substitute_zero(const Polynomial& p, const std::set<VarIndex>& kill) {
  std::vector<Monomial> kept;
  for (const auto& t : p.terms()) {
    const bool dead = std::any_of(t.factors().begin(), t.factors().end(),
                                  [&](const VarPower& f) { return kill.count(f.index) > 0; });
    if (!dead) kept.push_back(t);
  }
  return Polynomial(p.context(), std::move(kept));
}

Polynomial truncate(const Polynomial& p, VarIndex bound) {
  std::vector<Monomial> kept;
  for (const auto& t : p.terms()) {
    if (t.max_index() <= bound) kept.push_back(t);
  }
  return Polynomial(bound, std::move(kept));
}

Polynomial widen(const Polynomial& p, VarIndex context) {
  if (context < p.context()) {
    throw std::invalid_argument("widen: target context is smaller than source");
  }
  return Polynomial(context, p.terms());
}

// ------------------------------------------------------------- formatting

bool canonical_before(const Monomial& a, const Monomial& b) {
  const auto ca = a.factor_count();
  const auto cb = b.factor_count();
  if (ca != cb) return ca > cb;
  // Least-ranked variable is the largest index; scan from the back.
  auto ia = a.factors().rbegin();
  auto ib = b.factors().rbegin();
  while (ia != a.factors().rend() || ib != b.factors().rend()) {
    const VarIndex xa = ia != a.factors().rend() ? ia->index : 0;
    const VarIndex xb = ib != b.factors().rend() ? ib->index : 0;
    const VarIndex top = std::max(xa, xb);
    const Exponent ea = xa == top ? ia->exponent : 0;
    const Exponent eb = xb == top ? ib->exponent : 0;
    if (ea != eb) return ea < eb;
    if (xa == top) ++ia;
    if (xb == top) ++ib;
  }
  return false;
}

std::string format_monomial(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += '*';
    out += 'w';
    out += std::to_string(f.index);
    if (f.exponent != 1) {
      out += '^';
      out += std::to_string(f.exponent);
    }
  }
  return out;
}

std::string format_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<Monomial> terms = p.terms();
  std::sort(terms.begin(), terms.end(), canonical_before);
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += format_monomial(t);
  }
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::uint64_t number() {
    skip_ws();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{} || ptr == text_.data() + pos_) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// factor := 'w' INT ('^' INT)? | '1'
Monomial parse_term(Lexer& lx, VarIndex context) {
  std::vector<VarPower> factors;
  do {
    if (lx.accept('w')) {
      const auto index = lx.number();
      if (index < kFirstVar || index > context) {
        lx.fail("index w" + std::to_string(index) + " outside [2, " + std::to_string(context) +
                "]");
      }
      std::uint64_t e = 1;
      if (lx.accept('^')) e = lx.number();
      if (e > 0xffffffffu) lx.fail("exponent too large");
      factors.push_back({static_cast<VarIndex>(index), static_cast<Exponent>(e)});
    } else {
      const auto literal = lx.number();
      if (literal != 1) lx.fail("only the literal 1 may appear as a factor");
    }
  } while (lx.accept('*'));
  return Monomial(std::move(factors));
}

}  // namespace

Monomial parse_monomial(std::string_view text, VarIndex context) {
  Lexer lx(text);
  if (lx.at_end()) lx.fail("empty monomial");
  Monomial m = parse_term(lx, context);
  if (!lx.at_end()) lx.fail("trailing input");
  return m;
}

Polynomial parse_poly(std::string_view text, VarIndex context) {
  Lexer lx(text);
  if (lx.at_end()) lx.fail("empty polynomial");
  std::vector<Monomial> terms;
  // A lone "0" is the zero polynomial; 0 is not allowed inside sums.
  {
    Lexer probe(text);
    if (probe.accept('0') && probe.at_end()) return Polynomial(context);
  }
  do {
    terms.push_back(parse_term(lx, context));
  } while (lx.accept('+'));
  if (!lx.at_end()) lx.fail("trailing input");
  return Polynomial(context, std::move(terms));
}

}  // namespace cotor
