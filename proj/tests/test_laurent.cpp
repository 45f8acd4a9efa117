#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quivmod/laurent.hpp"

using namespace quivmod;

namespace {

LaurentPolynomial lp(std::initializer_list<std::pair<std::int64_t, int>> terms) {
  LaurentPolynomial p;
  for (const auto& [e, c] : terms) p.add_term(e, Rat(c));
  return p;
}

LaurentPolynomial random_poly(std::mt19937& rng, bool rational_coeffs = false) {
  std::uniform_int_distribution<int> nterms(0, 5);
  std::uniform_int_distribution<int> expd(-6, 6);
  std::uniform_int_distribution<int> coeffd(-9, 9);
  std::uniform_int_distribution<int> dend(1, 7);
  LaurentPolynomial p;
  for (int i = nterms(rng); i > 0; --i) {
    Rat c(coeffd(rng));
    if (rational_coeffs) c /= dend(rng);
    p.add_term(expd(rng), c);
  }
  return p;
}

}  // namespace

TEST_CASE("combine examples") {
  LaurentPolynomial y_plus = lp({{1, 1}, {-1, 1}});
  LaurentPolynomial y_minus = lp({{1, 1}, {-1, -1}});
  CHECK(y_plus * y_minus == lp({{2, 1}, {-2, -1}}));

  LaurentPolynomial p = lp({{0, 3}, {2, 5}});
  CHECK(p + LaurentPolynomial{} == p);

  CHECK(lp({{1, 1}, {0, -1}}) * lp({{1, 1}, {0, 1}}) == lp({{2, 1}, {0, -1}}));
}

TEST_CASE("zero is the empty map and no zero coefficients are stored") {
  LaurentPolynomial p = lp({{0, 1}, {3, 2}});
  p.add_term(3, Rat(-2));
  CHECK(p.term_count() == 1);
  p.add_term(0, Rat(-1));
  CHECK(p.is_zero());
  CHECK(p == LaurentPolynomial{});
  CHECK(p.to_string() == "0");
}

TEST_CASE("evaluate_at_one") {
  CHECK(lp({{0, 1}, {1, 1}, {2, 1}}).evaluate_at_one() == 3);
  CHECK(lp({{2, 1}, {-2, -1}}).evaluate_at_one() == 0);
  CHECK(lp({{0, 1}, {1, 1}}).evaluate_at_one() == 2);  // P(K^2(1,1)) at 1
}

TEST_CASE("substitute_power") {
  CHECK(lp({{1, 1}, {0, 1}}).substitute_power(3) == lp({{3, 1}, {0, 1}}));
  LaurentPolynomial p = lp({{-2, 3}, {5, 1}});
  CHECK(p.substitute_power(1) == p);
  CHECK(lp({{1, 1}, {0, -1}}).substitute_power(2) == lp({{2, 1}, {0, -1}}));
  CHECK_THROWS_AS(p.substitute_power(0), DomainError);
}

TEST_CASE("evaluate at a point") {
  LaurentPolynomial p = lp({{2, 1}, {0, -3}});
  CHECK(p.evaluate(Rat(5)) == 22);
  CHECK(lp({{-1, 1}}).evaluate(Rat(4)) == make_rat(1, 4));
  CHECK_THROWS_AS(lp({{-1, 1}}).evaluate(Rat(0)), DomainError);
}

TEST_CASE("divide_exact") {
  LaurentPolynomial q2m1 = lp({{2, 1}, {0, -1}});
  LaurentPolynomial qm1 = lp({{1, 1}, {0, -1}});
  auto quot = q2m1.divide_exact(qm1);
  REQUIRE(quot.has_value());
  CHECK(*quot == lp({{1, 1}, {0, 1}}));

  CHECK_FALSE(lp({{2, 1}, {0, 1}}).divide_exact(qm1).has_value());
  CHECK_FALSE(qm1.divide_exact(LaurentPolynomial{}).has_value());
  CHECK(LaurentPolynomial{}.divide_exact(qm1)->is_zero());

  // Laurent shifts divide out exactly
  auto s = lp({{1, 2}, {-3, 5}}).divide_exact(lp({{-2, 1}}));
  REQUIRE(s.has_value());
  CHECK(*s == lp({{3, 2}, {-1, 5}}));
}

TEST_CASE("property: ring axioms on random inputs") {
  std::mt19937 rng(20260808);
  for (int i = 0; i < 300; ++i) {
    LaurentPolynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("property: multiplication then exact division round-trips") {
  std::mt19937 rng(7);
  int done = 0;
  for (int i = 0; i < 300; ++i) {
    LaurentPolynomial a = random_poly(rng, true), b = random_poly(rng, true);
    if (b.is_zero()) continue;
    auto q = (a * b).divide_exact(b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
    ++done;
  }
  CHECK(done > 100);
}

TEST_CASE("property: substitute_power composes multiplicatively") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    LaurentPolynomial p = random_poly(rng);
    CHECK(p.substitute_power(2).substitute_power(3) == p.substitute_power(6));
  }
}

TEST_CASE("property: evaluate_at_one is multiplicative") {
  std::mt19937 rng(13);
  for (int i = 0; i < 200; ++i) {
    LaurentPolynomial a = random_poly(rng, true), b = random_poly(rng, true);
    CHECK((a * b).evaluate_at_one() == a.evaluate_at_one() * b.evaluate_at_one());
  }
}

TEST_CASE("canonical text form") {
  CHECK(lp({{0, 1}, {1, 2}, {2, 1}}).to_string() == "1 + 2*q + q^2");
  CHECK(lp({{-2, 1}}).to_string("y") == "y^-2");
  CHECK(lp({{2, 1}, {-2, -1}}).to_string("y") == "-y^-2 + y^2");
  CHECK(lp({{0, -1}, {1, 1}}).to_string() == "-1 + q");
  LaurentPolynomial half;
  half.add_term(2, make_rat(1, 2));
  half.add_term(1, make_rat(-1, 2));
  CHECK(half.to_string("m") == "-1/2*m + 1/2*m^2");
}

TEST_CASE("parse") {
  CHECK(LaurentPolynomial::parse("1 + 2*q + q^2") == lp({{0, 1}, {1, 2}, {2, 1}}));
  CHECK(LaurentPolynomial::parse("y^-2", "y") == lp({{-2, 1}}));
  CHECK(LaurentPolynomial::parse("0").is_zero());
  CHECK(LaurentPolynomial::parse("-q") == lp({{1, -1}}));
  CHECK(LaurentPolynomial::parse("3/2*q^-4 - 1") == [] {
    LaurentPolynomial p;
    p.add_term(-4, make_rat(3, 2));
    p.add_term(0, Rat(-1));
    return p;
  }());
  CHECK_THROWS_AS(LaurentPolynomial::parse(""), DomainError);
  CHECK_THROWS_AS(LaurentPolynomial::parse("q^"), DomainError);
  CHECK_THROWS_AS(LaurentPolynomial::parse("garbage"), DomainError);
}

TEST_CASE("property: to_string / parse round-trip") {
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) {
    LaurentPolynomial p = random_poly(rng, true);
    CHECK(LaurentPolynomial::parse(p.to_string("q"), "q") == p);
    CHECK(LaurentPolynomial::parse(p.to_string("y"), "y") == p);
  }
}

TEST_CASE("content") {
  CHECK(lp({{0, 4}, {1, -6}}).content() == 2);
  LaurentPolynomial p;
  p.add_term(0, make_rat(3, 2));
  p.add_term(5, make_rat(9, 4));
  CHECK(p.content() == make_rat(3, 4));
  CHECK(LaurentPolynomial{}.content() == 0);
}
