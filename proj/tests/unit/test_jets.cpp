#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vermajet/filtration.hpp"
#include "vermajet/jets.hpp"

using namespace vermajet;

namespace {

Polynomial t(int m, int n, int i, int j) { return Polynomial::variable(m * n, chart_variable(m, n, i, j)); }

std::uint64_t choose_up(std::uint64_t a, std::uint64_t l) {
  std::uint64_t r = 1;
  for (std::uint64_t k = 1; k <= l; ++k) r = r * (a + k) / k;
  return r;
}

}  // namespace

TEST_CASE("chart variables") {
  CHECK(chart_variable(2, 2, 3, 1) == 0);
  CHECK(chart_variable(2, 2, 3, 2) == 1);
  CHECK(chart_variable(2, 2, 4, 1) == 2);
  CHECK_THROWS_AS(chart_variable(2, 2, 2, 1), std::out_of_range);
}

TEST_CASE("Plücker coordinates on Gr(2,4)") {
  CHECK(plucker_polynomial({1, 2}, 2, 2).chart == Polynomial::constant(4, 1));
  CHECK(plucker_polynomial({1, 3}, 2, 2).chart == t(2, 2, 3, 2));
  CHECK(plucker_polynomial({2, 3}, 2, 2).chart == -t(2, 2, 3, 1));
  CHECK(plucker_polynomial({1, 4}, 2, 2).chart == t(2, 2, 4, 2));
  CHECK(plucker_polynomial({3, 4}, 2, 2).chart == t(2, 2, 3, 1) * t(2, 2, 4, 2) - t(2, 2, 3, 2) * t(2, 2, 4, 1));
  CHECK_THROWS_AS(plucker_polynomial({1}, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(plucker_polynomial({2, 1}, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(plucker_polynomial({1, 5}, 2, 2), std::invalid_argument);
}

TEST_CASE("Plücker relation holds in the chart") {
  auto p = [](WedgeIndex s) { return plucker_polynomial(s, 2, 2).chart; };
  CHECK((p({1, 2}) * p({3, 4}) - p({1, 3}) * p({2, 4}) + p({1, 4}) * p({2, 3})).is_zero());
}

TEST_CASE("section space dimension matches the hook-content formula") {
  for (auto [m, n, d] : {std::tuple{1, 1, 3}, {1, 2, 3}, {1, 3, 2}, {2, 2, 1}, {2, 2, 2}, {2, 2, 3}}) {
    CHECK(section_space(m, n, d).dim() == weyl_dim_oracle(m, n, d));
  }
  const auto s = section_space(2, 2, 2);
  CHECK(s.candidates == 21);
}

TEST_CASE("Taylor ranks") {
  CHECK(taylor_matrix(1, 1, 3, 1).rank == 2);
  CHECK(taylor_matrix(1, 2, 2, 2).rank == 6);
  CHECK(taylor_matrix(2, 2, 2, 1).rank == 5);
  for (auto [m, n, d] : {std::tuple{1, 1, 5}, {1, 2, 3}, {2, 2, 2}, {2, 2, 3}}) {
    for (int l = 1; l <= d; ++l) {
      CHECK(taylor_matrix(m, n, d, l).rank == choose_up(static_cast<std::uint64_t>(m * n), static_cast<std::uint64_t>(l)));
    }
  }
  // Past d the jets outrun the sections.
  CHECK(taylor_matrix(1, 1, 2, 3).rank == 3);
  CHECK_THROWS_AS(taylor_matrix(2, 2, 2, 4, {20000, 10}), SizeCapError);
}

TEST_CASE("Taylor rows are literal truncations") {
  const auto tm = taylor_matrix(1, 1, 3, 1);
  // Sections 1, t, t^2, t^3 against jets 1, t.
  REQUIRE(tm.matrix.rows() == 4);
  REQUIRE(tm.matrix.cols() == 2);
  CHECK(tm.matrix(0, 0) == 1);
  CHECK(tm.matrix(1, 1) == 1);
  CHECK(tm.matrix.bottomRows(2).isZero(0));
}

TEST_CASE("kernel sections") {
  const auto k = kernel_sections(1, 1, 3, 1);
  REQUIRE(k.dim() == 2);
  for (const auto& s : k.basis) {
    for (const auto& [e, c] : s.chart.terms()) CHECK(e[0] >= 2);
  }
  CHECK(kernel_sections(1, 2, 3, 1).dim() == 7);
  for (int d = 1; d <= 5; ++d) CHECK(kernel_sections(1, 1, d, d).dim() == 0);
  CHECK(kernel_sections(2, 2, 2, 1).dim() == 15);
  CHECK_THROWS_AS(kernel_sections(1, 1, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(kernel_sections(1, 1, 3, 0), std::invalid_argument);
}

TEST_CASE("kernel sections keep their Plücker expansion") {
  const auto k = kernel_sections(2, 2, 2, 1);
  for (const auto& s : k.basis) {
    Polynomial rebuilt(4);
    for (const auto& [idx, c] : s.plucker) rebuilt += plucker_monomial(idx, 2, 2).chart * c;
    CHECK(rebuilt == s.chart);
  }
}

TEST_CASE("duality") {
  for (auto [m, n, d] : {std::tuple{1, 1, 3}, {1, 2, 3}, {2, 2, 2}}) {
    for (int l = 1; l < d; ++l) {
      const auto r = duality_check(m, n, d, l);
      CHECK(r.dim_match);
      CHECK(r.pairing_vanishes);
      CHECK(r.pairings_checked > 0);
    }
  }
  CHECK_THROWS_AS(duality_check(1, 1, 3, 3), std::invalid_argument);
}

TEST_CASE("monomial jets on projective space") {
  auto e = monomial_jet_projective({2, 1}, 1);
  REQUIRE(e.size() == 2);
  CHECK(e(0) == 0);
  CHECK(e(1) == 1);
  CHECK(monomial_jet_projective({1, 2}, 1).isZero(0));
  e = monomial_jet_projective({0, 1, 1}, 2);
  CHECK(e.size() == 6);
  CHECK(e(4) == 1);
  CHECK_THROWS_AS(monomial_jet_projective({3}, 1), std::invalid_argument);
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 5; ++d) {
      for (int l = 1; l <= d; ++l) CHECK(projective_rule_check(n, d, l));
    }
  }
}

TEST_CASE("rank does not depend on the chart point") {
  ChartPoint c(2, 2);
  c << Rational(1, 2), Rational(-3), Rational(2, 7), Rational(5);
  CHECK(chart_homogeneity_check(2, 2, 2, 1, c));
  CHECK(chart_homogeneity_check(2, 2, 3, 2, c));
  ChartPoint b(1, 1);
  b << Rational(-4, 3);
  CHECK(chart_homogeneity_check(1, 1, 4, 2, b));
  CHECK_THROWS_AS(taylor_matrix_at(1, 1, 4, 2, c), std::invalid_argument);
}
