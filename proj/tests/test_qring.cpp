#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace ladderlab;
using oracle::qi;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 5), low(-4, 4), coef(-3, 3);
  std::vector<Integer> c;
  int l = len(rng);
  for (int i = 0; i < l; ++i) c.emplace_back(coef(rng));
  return LaurentPoly::from_coefficients(low(rng), c);
}

}  // namespace

TEST_CASE("quantum integers") {
  CHECK(qint(2).to_string() == "q + q^-1");
  CHECK(qint(1).is_one());
  CHECK(qint(0).is_zero());
  CHECK(qint(3).to_string() == "q^2 + 1 + q^-2");
  for (long k = -6; k <= 6; ++k) {
    CHECK(qint(-k) == -qint(k));
    CHECK(qint(k).evaluate(1) == k);
    CHECK(RatFun(qint(k)) == qi(k));
    CHECK(qint(k).bar() == qint(k));
  }
}

TEST_CASE("quantum binomials") {
  for (long m = 0; m <= 9; ++m)
    for (long k = -1; k <= m + 1; ++k) CHECK(RatFun(qbinom(m, k)) == oracle::qbinom_product(m, k));
  // [-m choose k] = (-1)^k [m+k-1 choose k]
  for (long m = 1; m <= 4; ++m)
    for (long k = 0; k <= 4; ++k) CHECK(qbinom(-m, k) == (k % 2 ? -qbinom(m + k - 1, k) : qbinom(m + k - 1, k)));
  CHECK(qbinom(4, 2).to_string() == "q^4 + q^2 + 2 + q^-2 + q^-4");
}

TEST_CASE("laurent arithmetic") {
  LaurentPoly q = LaurentPoly::q();
  CHECK((q * q.pow(-1)).is_one());
  CHECK((q + 1) * (q - 1) == q * q - 1);
  CHECK(LaurentPoly::from_coefficients(-2, {0, 1, 0}).is_monomial());
  CHECK(LaurentPoly::from_coefficients(-2, {0, 1, 0}).low() == -1);
  CHECK((q + 1).shifted(-1) == 1 + q.pow(-1));
  CHECK((q + 2).evaluate(Rational(1, 2)) == Rational(5, 2));
  CHECK(LaurentPoly().to_string() == "0");
  CHECK((q.pow(2) - 2 * q.pow(-3)).to_string() == "q^2 - 2q^-3");
  CHECK(qint(2).to_term_list() == "-1:1 1:1");
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == LaurentPoly());
    CHECK((a * b).bar() == a.bar() * b.bar());
    if (!b.is_zero()) {
      auto d = exact_divide(a * b, b);
      REQUIRE(d);
      CHECK(*d == a);
      CHECK(RatFun::make(a * b, b) == RatFun(a));
    }
  }
}

TEST_CASE("rational functions are canonical") {
  LaurentPoly q = LaurentPoly::q();
  RatFun x = RatFun::make(qint(4), qint(2));
  CHECK(x == RatFun(q * q + q.pow(-2)));
  RatFun y = RatFun::make(qint(3) * q, qint(2) * q.pow(2));
  CHECK(y.den().low() == 0);
  CHECK(y.den().leading_coefficient() > 0);
  CHECK(y.to_string() == "(q^2 + 1 + q^-2) / (q^2 + 1)");
  CHECK(RatFun::make(-q, -q - 1) == RatFun::make(q, q + 1));
  CHECK((x * x.inverse()).is_one());
  CHECK((x - x).is_zero());
  CHECK((qi(3) / qi(2)).bar() == qi(3) / qi(2));
  CHECK(RatFun::make(q, q + 1).specialize(2) == Rational(2, 3));
  CHECK_THROWS_AS(RatFun::make(q, LaurentPoly()), Error);
  CHECK_THROWS_AS(RatFun::make(1, q - 1).specialize(1), Error);
  try {
    RatFun::make(q, LaurentPoly());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDenominator);
  }
}

TEST_CASE("gcd and factorization helpers") {
  LaurentPoly q = LaurentPoly::q();
  CHECK(poly_gcd((q + 1) * (q - 1), (q + 1) * (q + 2)) == q + 1);
  CHECK(!exact_divide(q + 2, q + 1));
  auto delta = in_delta_basis(qint(3));
  REQUIRE(delta);
  CHECK(*delta == std::vector<Integer>{-1, 0, 1});
  CHECK(!in_delta_basis(q));
  auto f = quantum_factorization(qi(4) * qi(4) / (qi(2) * qi(3)));
  REQUIRE(f);
  CHECK(f->exponents == std::map<long, int>{{2, -1}, {3, -1}, {4, 2}});
  CHECK(!quantum_factorization(RatFun(q + 3)));
}

TEST_CASE("parsing") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-4") == -4);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK(integer_to_string(Integer("123456789012345678901234567890")) == "123456789012345678901234567890");
}
