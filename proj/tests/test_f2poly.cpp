#include <doctest.h>

#include "cotor/f2poly.hpp"
#include "generators.hpp"

using namespace cotor;
using cotor::testing::Gen;

namespace {

Polynomial P(std::string_view text, VarIndex n = 13) { return parse_poly(text, n); }

}  // namespace

TEST_CASE("addition cancels in pairs") {
  CHECK(P("w4*w13 + w6*w11") + P("w6*w11") == P("w4*w13"));
  const auto v4 = P("w7*w10 + w6*w11 + w4*w13");
  CHECK(v4 + P("w7*w10") == P("w6*w11 + w4*w13"));
  CHECK((v4 + v4).is_zero());
  CHECK(Polynomial(13, {Monomial::var(4), Monomial::var(4), Monomial::var(4)}) == P("w4"));
}

TEST_CASE("multiplication") {
  CHECK(P("w7") * P("w10") == P("w7*w10"));
  CHECK(P("w4 + w6") * P("w4 + w6") == P("w4^2 + w6^2"));
  CHECK(P("w7*w10 + w6*w11") * Polynomial::one(13) == P("w7*w10 + w6*w11"));
  CHECK((P("w7") * Polynomial::zero(13)).is_zero());
  CHECK(poly_mul(P("w2 + w3"), P("w2 + w3 + w4")) == P("w2^2 + w3^2 + w2*w4 + w3*w4"));
}

TEST_CASE("context mismatch is rejected") {
  CHECK_THROWS_AS(P("w4", 13) + P("w4", 14), std::invalid_argument);
  CHECK_THROWS_AS(P("w4", 13) * P("w4", 14), std::invalid_argument);
  CHECK_THROWS_AS(Polynomial::var(13, 14), std::invalid_argument);
  CHECK_THROWS_AS(Monomial::var(1), std::invalid_argument);
  CHECK_THROWS_AS(widen(P("w4", 13), 12), std::invalid_argument);
}

TEST_CASE("substitute_zero") {
  const std::set<VarIndex> kill = {2, 3, 5, 9};
  const auto raw = P("w3*w14 + w5*w12 + w7*w10 + w9*w8 + w11*w6 + w13*w4", 14);
  CHECK(truncate(substitute_zero(raw, kill), 13) == P("w7*w10 + w6*w11 + w4*w13"));
  CHECK(substitute_zero(Polynomial::zero(13), kill).is_zero());
  CHECK(substitute_zero(P("w13^5"), {7}) == P("w13^5"));
}

TEST_CASE("truncate and widen") {
  const auto p = P("w4^2*w25 + w7*w13^2", 26);
  CHECK(truncate(p, 13) == P("w7*w13^2"));
  CHECK(truncate(p, 13).context() == 13);
  CHECK(widen(P("w7"), 20).context() == 20);
  CHECK(truncate(widen(P("w7 + w13"), 20), 13) == P("w7 + w13"));
}

TEST_CASE("graded degree") {
  CHECK(graded_degree(Monomial({{7, 1}, {10, 1}})) == 17);
  CHECK(graded_degree(Monomial::var(13, 5)) == 65);
  CHECK(graded_degree(Monomial{}) == 0);
  CHECK(Monomial::var(13, 5).factor_count() == 5);
  CHECK(P("w7*w10 + w6*w11 + w4*w13").is_homogeneous());
  CHECK_FALSE(P("w7 + w8").is_homogeneous());
  CHECK(Polynomial::zero(13).is_homogeneous());
}

TEST_CASE("monomial normalization and divisibility") {
  const Monomial m({{10, 1}, {7, 2}, {10, 2}, {4, 0}});
  CHECK(m == Monomial({{7, 2}, {10, 3}}));
  CHECK(m.exponent(10) == 3);
  CHECK(m.exponent(4) == 0);
  CHECK(m.max_index() == 10);
  CHECK(Monomial::var(7).divides(m));
  CHECK_FALSE(Monomial::var(7, 3).divides(m));
  CHECK(m.quotient(Monomial::var(10, 2)) == Monomial({{7, 2}, {10, 1}}));
  CHECK(Monomial::var(7).lcm(Monomial::var(10)) == Monomial({{7, 1}, {10, 1}}));
  CHECK(Monomial::var(7).coprime(Monomial::var(10)));
  CHECK_FALSE(m.coprime(Monomial::var(10)));
}

TEST_CASE("canonical format") {
  CHECK(format_poly(P("w4*w13 + w6*w11 + w7*w10")) == "w7*w10 + w6*w11 + w4*w13");
  CHECK(format_poly(P("w7*w13^2 + w10^2*w13 + w11^3")) == "w11^3 + w10^2*w13 + w7*w13^2");
  CHECK(format_poly(Polynomial::zero(13)) == "0");
  CHECK(format_poly(Polynomial::one(13)) == "1");
  CHECK(format_poly(P("w13^5")) == "w13^5");
  CHECK(format_monomial(Monomial{}) == "1");
}

TEST_CASE("parse") {
  const auto v4 = P("w7*w10 + w6*w11 + w4*w13");
  CHECK(v4.size() == 3);
  CHECK(format_poly(v4) == "w7*w10 + w6*w11 + w4*w13");
  CHECK(P("0").is_zero());
  CHECK(P("w13^5") == Polynomial::var(13, 13, 5));
  CHECK(P("  w2 *w3+1 ") == Polynomial(13, {Monomial({{2, 1}, {3, 1}}), Monomial{}}));
  CHECK(P("w4 + w4").is_zero());
  CHECK(parse_monomial("w4^2*w4", 13) == Monomial::var(4, 3));
}

TEST_CASE("parse errors") {
  for (const char* bad : {"", "w", "w1", "w14", "w0", "x4", "w4 +", "w4 w5", "w4^", "2",
                          "w4 + 0", "w4^99999999999"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(P(bad), ParseError);
  }
  CHECK_THROWS_AS(parse_monomial("w4 + w5", 13), ParseError);
}

TEST_CASE("property: ring laws over GF(2)") {
  Gen g(1);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = g.poly(16);
    const auto b = g.poly(16);
    const auto c = g.poly(16);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a + a).is_zero());
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * Polynomial::one(16) == a);
    // Frobenius: squaring is additive.
    CHECK((a + b) * (a + b) == a * a + b * b);
  }
}

TEST_CASE("property: parse(format(p)) = p") {
  Gen g(2);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = g.poly(32, 8);
    CHECK(parse_poly(format_poly(p), 32) == p);
  }
}

TEST_CASE("property: canonical order is a strict total order on distinct monomials") {
  Gen g(3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = g.monomial(20);
    const auto b = g.monomial(20);
    if (a == b) {
      CHECK_FALSE(canonical_before(a, b));
    } else {
      CHECK(canonical_before(a, b) != canonical_before(b, a));
    }
  }
}

TEST_CASE("property: substitute_zero is a ring map") {
  Gen g(4);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<VarIndex> kill;
    for (int i = 0; i < 3; ++i) kill.insert(static_cast<VarIndex>(g.integer(2, 12)));
    const auto a = g.poly(12);
    const auto b = g.poly(12);
    CHECK(substitute_zero(a + b, kill) == substitute_zero(a, kill) + substitute_zero(b, kill));
    CHECK(substitute_zero(a * b, kill) == substitute_zero(a, kill) * substitute_zero(b, kill));
  }
}
