#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vermajet/lie.hpp"
#include "vermajet/linalg.hpp"

using namespace vermajet;

TEST_CASE("dimensions and invalid shapes") {
  CHECK(build_context(1, 1).dim() == 3);
  CHECK(build_context(2, 2).dim() == 15);
  CHECK(build_context(1, 3).dim() == 15);
  CHECK_THROWS_AS(build_context(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_context(2, 0), std::invalid_argument);
}

TEST_CASE("brackets of matrix units") {
  const auto g = build_context(1, 2);
  CHECK(bracket(g.E(1, 2), g.E(2, 1)) == g.H(1));
  // [E31, E12] = E31 E12 - E12 E31 = E32.
  CHECK(bracket(g.E(3, 1), g.E(1, 2)) == g.E(3, 2));
  CHECK(bracket(g.E(1, 2), g.E(3, 1)) == -g.E(3, 2));
  CHECK(all_zero(bracket(g.E(2, 1), g.E(3, 1))));
  CHECK(bracket(g.H(1), g.E(1, 2)) == Rational(2) * g.E(1, 2));
}

TEST_CASE("block subalgebras") {
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}}) {
    const auto g = build_context(m, n);
    const auto N = static_cast<std::size_t>(g.dim());
    CHECK(g.indices(SubalgebraTag::n).size() == static_cast<std::size_t>(m * n));
    CHECK(g.indices(SubalgebraTag::p).size() == N - static_cast<std::size_t>(m * n));
    CHECK(g.indices(SubalgebraTag::h).size() == static_cast<std::size_t>(m + n - 1));
    CHECK(g.indices(SubalgebraTag::g_plus).size() == g.indices(SubalgebraTag::g_minus).size());
    CHECK(g.indices(SubalgebraTag::all).size() == N);
    // n is abelian and p is closed under brackets.
    for (auto a : g.indices(SubalgebraTag::n)) {
      for (auto b : g.indices(SubalgebraTag::n)) CHECK(all_zero(bracket(g.basis()[a], g.basis()[b])));
    }
    for (auto a : g.indices(SubalgebraTag::p)) {
      for (auto b : g.indices(SubalgebraTag::p)) CHECK(g.contains(SubalgebraTag::p, bracket(g.basis()[a], g.basis()[b])));
    }
  }
  const auto g = build_context(2, 2);
  CHECK(g.contains(SubalgebraTag::n, g.E(3, 1)));
  CHECK(g.contains(SubalgebraTag::n, g.E(4, 2)));
  CHECK_FALSE(g.contains(SubalgebraTag::n, g.E(2, 1)));
  CHECK(g.contains(SubalgebraTag::p, g.E(2, 1)));
  CHECK(g.contains(SubalgebraTag::p, g.E(1, 4)));
  CHECK_FALSE(g.contains(SubalgebraTag::p, g.E(4, 1)));
  CHECK(subalgebra_from_string(to_string(SubalgebraTag::g_minus)) == SubalgebraTag::g_minus);
  CHECK_THROWS_AS(subalgebra_from_string("b"), std::invalid_argument);
}

TEST_CASE("simple roots") {
  const auto g = build_context(2, 2);
  const auto roots = simple_roots(g);
  REQUIRE(roots.size() == 3);
  CHECK(roots[1].index == 2);
  CHECK(roots[1].lowering == g.E(3, 2));
  CHECK(roots[1].coroot == g.H(2));
}

TEST_CASE("character of p on the highest weight line") {
  const auto g = build_context(1, 1);
  CHECK(rho_character(g, 3, g.H(1)) == 3);
  CHECK(rho_character(g, 3, g.E(1, 2)) == 0);
  CHECK_THROWS_AS(rho_character(g, 3, g.E(2, 1)), std::invalid_argument);
  const auto g2 = build_context(2, 2);
  CHECK(rho_character(g2, 2, g2.H(1)) == 0);
  CHECK(rho_character(g2, 2, g2.H(2)) == 2);
  CHECK(rho_character(g2, 2, g2.E(2, 1)) == 0);
}

TEST_CASE("highest weight") {
  const auto g = build_context(2, 2);
  const auto lambda = highest_weight(g, 3);
  CHECK(evaluate_weight(lambda, g.H(1)) == 0);
  CHECK(evaluate_weight(lambda, g.H(2)) == 3);
  CHECK(evaluate_weight(lambda, g.H(3)) == 0);
  Weight shifted{lambda.coords + Eigen::VectorXi::Ones(4)};
  CHECK(shifted == lambda);
  CHECK(g.root_of(0) != Weight{Eigen::VectorXi::Zero(4)});
}

TEST_CASE("Jacobi identity") {
  const auto sl2 = jacobi_check(build_context(1, 1));
  CHECK(sl2.holds);
  CHECK(sl2.triples_checked == 27);
  const auto sl3 = jacobi_check(build_context(1, 2));
  CHECK(sl3.holds);
  CHECK(sl3.triples_checked == 512);
  const auto sl4 = jacobi_check(build_context(2, 2), 200, 3);
  CHECK(sl4.holds);
  CHECK(sl4.triples_checked == 200);
}
