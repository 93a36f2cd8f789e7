#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vermajet/polynomial.hpp"

using namespace vermajet;

TEST_CASE("arithmetic drops cancelled terms") {
  const auto x = Polynomial::variable(2, 0);
  const auto y = Polynomial::variable(2, 1);
  const auto p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK((p - p).is_zero());
  CHECK(p.total_degree() == 2);
  CHECK(Polynomial(2).total_degree() == -1);
  CHECK(p.coefficient({1, 1}) == 0);
}

TEST_CASE("pow, evaluate, derivative") {
  const auto x = Polynomial::variable(2, 0);
  const auto y = Polynomial::variable(2, 1);
  const auto p = (x + y * Rational(2)).pow(3);
  CHECK(p.evaluate({Rational(1), Rational(1, 2)}) == 8);
  CHECK(p.derivative(1) == (x + y * Rational(2)).pow(2) * Rational(6));
  CHECK(Polynomial::constant(2, 5).derivative(0).is_zero());
}

TEST_CASE("shift is a Taylor re-expansion") {
  const auto t = Polynomial::variable(1, 0);
  const auto p = t.pow(3);
  const auto q = p.shift({Rational(2)});
  // (t + 2)^3 = t^3 + 6 t^2 + 12 t + 8
  CHECK(q.coefficient({0}) == 8);
  CHECK(q.coefficient({1}) == 12);
  CHECK(q.coefficient({2}) == 6);
  CHECK(q.coefficient({3}) == 1);
  CHECK(q.truncate(1) == t * Rational(12) + Polynomial::constant(1, 8));
}

TEST_CASE("compose substitutes every variable") {
  const auto a = Polynomial::variable(2, 0);
  const auto b = Polynomial::variable(2, 1);
  const auto s = Polynomial::variable(1, 0);
  const auto r = (a * b).compose({s + Polynomial::constant(1, 1), s - Polynomial::constant(1, 1)});
  CHECK(r == s * s - Polynomial::constant(1, 1));
}

TEST_CASE("graded exponents: count and order") {
  const auto e = graded_exponents(3, 2);
  CHECK(e.size() == 10);
  CHECK(e[0] == Exponent{0, 0, 0});
  CHECK(e[1] == Exponent{1, 0, 0});
  CHECK(e[2] == Exponent{0, 1, 0});
  CHECK(e[3] == Exponent{0, 0, 1});
  CHECK(e[4] == Exponent{2, 0, 0});
  CHECK(e.back() == Exponent{0, 0, 2});
  CHECK(graded_exponents(4, 3).size() == 35);
}

TEST_CASE("str") {
  const auto x = Polynomial::variable(2, 0);
  const auto y = Polynomial::variable(2, 1);
  CHECK((x * x - y * Rational(4)).str({"a", "b"}) == "a^2 - 4*b");
}
