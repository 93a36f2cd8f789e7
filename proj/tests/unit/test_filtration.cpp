#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "vermajet/filtration.hpp"

using namespace vermajet;

namespace {

// binom(a + l, a) by the multiplicative formula.
std::uint64_t choose_up(std::uint64_t a, std::uint64_t l) {
  std::uint64_t r = 1;
  for (std::uint64_t k = 1; k <= l; ++k) r = r * (a + k) / k;
  return r;
}

// Semistandard tableaux of the m x d rectangle with entries 1..m+n.
std::uint64_t count_rectangular_ssyt(int m, int n, int d) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(d), 0));
  const int top = m + n;
  std::uint64_t count = 0;
  std::function<void(int)> fill = [&](int pos) {
    if (pos == m * d) {
      ++count;
      return;
    }
    const int r = pos / d;
    const int c = pos % d;
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int x = lo; x <= top; ++x) {
      t[r][c] = x;
      fill(pos + 1);
    }
  };
  fill(0);
  return count;
}

}  // namespace

TEST_CASE("hook-content oracle against tableau enumeration") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      for (int d = 0; d <= 3; ++d) CHECK(weyl_dim_oracle(m, n, d) == count_rectangular_ssyt(m, n, d));
    }
  }
  CHECK(weyl_dim_oracle(2, 2, 1) == 6);
  CHECK(weyl_dim_oracle(2, 2, 2) == 20);
  CHECK(weyl_dim_oracle(2, 2, 3) == 50);
}

TEST_CASE("canonical filtration dimensions") {
  CHECK(canonical_filtration(1, 1, 3, 2).dims() == std::vector<std::size_t>{1, 2, 3});
  CHECK(canonical_filtration(2, 2, 2, 1).dims() == std::vector<std::size_t>{1, 5});
  CHECK(canonical_filtration(2, 2, 3, 2).dims() == std::vector<std::size_t>{1, 5, 15});
  for (auto [m, n, d] : {std::tuple{1, 1, 5}, {1, 2, 3}, {1, 3, 2}}) {
    const auto f = canonical_filtration(m, n, d, d - 1);
    for (int l = 0; l < d; ++l) {
      CHECK(f.levels[static_cast<std::size_t>(l)].dim == choose_up(static_cast<std::uint64_t>(m * n), static_cast<std::uint64_t>(l)));
    }
  }
  CHECK_THROWS_AS(canonical_filtration(1, 1, 3, -1), std::invalid_argument);
}

TEST_CASE("filtration saturates past d") {
  const auto f = canonical_filtration(1, 1, 2, 4);
  CHECK(f.dims() == std::vector<std::size_t>{1, 2, 3, 3, 3});
  CHECK_FALSE(f.levels[1].saturated);
  CHECK(f.levels[2].saturated);
  CHECK(f.levels[4].saturated);
}

TEST_CASE("PBW monomials in n are independent below d") {
  for (auto [m, n, d] : {std::tuple{1, 1, 3}, {1, 2, 3}, {2, 2, 2}, {2, 2, 3}}) {
    for (int l = 1; l < d; ++l) {
      const auto p = pbw_filtration(m, n, d, l);
      CHECK(p.independent);
      CHECK(p.vectors.size() == choose_up(static_cast<std::uint64_t>(m * n), static_cast<std::uint64_t>(l)));
    }
  }
  CHECK_FALSE(pbw_filtration(1, 1, 2, 3).independent);
}

TEST_CASE("evaluation matrix shape") {
  const auto e = evaluation_matrix(2, 2, 2, 1, SubalgebraTag::all);
  CHECK(e.rows() == 16);
  CHECK(e.cols() == 21);
  CHECK(evaluation_matrix(2, 2, 2, 1, SubalgebraTag::n).rows() == 5);
  CHECK_THROWS_AS(evaluation_matrix(2, 2, 3, 3, SubalgebraTag::all, {20000, 100}), SizeCapError);
}

TEST_CASE("annihilator dimensions") {
  CHECK(annihilator_dim(1, 1, 3, 1) == 2);
  CHECK(annihilator_dim(1, 1, 2, 1) == 2);
  CHECK(annihilator_dim(2, 2, 2, 0) == 0);
  CHECK(annihilator_dim(2, 2, 2, 1) == 11);
}

TEST_CASE("Verma split") {
  auto s = verma_split_check(1, 1, 3, 1);
  CHECK(s.dim_Ul_g == 4);
  CHECK(s.dim_Ul_n == 2);
  CHECK(s.dim_ann == 2);
  CHECK(s.split_holds);
  s = verma_split_check(1, 1, 3, 2);
  CHECK(s.dim_Ul_g == 10);
  CHECK(s.dim_Ul_n == 3);
  CHECK(s.dim_ann == 7);
  CHECK(s.split_holds);
  s = verma_split_check(2, 2, 2, 1);
  CHECK(s.dim_Ul_g == 16);
  CHECK(s.dim_Ul_n == 5);
  CHECK(s.dim_ann == 11);
  CHECK(s.split_holds);
  s = verma_split_check(2, 2, 3, 2);
  CHECK(s.dim_Ul_g == choose_up(15, 2));
  CHECK(s.split_holds);
  CHECK_THROWS_AS(verma_split_check(1, 1, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(verma_split_check(1, 1, 3, 0), std::invalid_argument);
}

TEST_CASE("lowering operators on v") {
  const auto g = build_context(2, 2);
  const PlethysmModule mod(g, 2);
  const auto v = mod.highest_weight_vector();
  CHECK(mod.act(g.E(2, 1), v).empty());
  CHECK(mod.act(g.E(4, 3), v).empty());
  const auto e13 = mod.wedge_rank({1, 3});
  const auto twice = mod.act(g.E(3, 2), mod.act(g.E(3, 2), v));
  CHECK(twice == PlethysmVector{{SymIndex{e13, e13}, Rational(2)}});
  CHECK(mod.act(g.E(3, 2), twice).empty());

  const auto h = build_context(1, 2);
  const PlethysmModule line(h, 1);
  const auto u = line.highest_weight_vector();
  CHECK_FALSE(line.act(h.E(2, 1), u).empty());
  CHECK(line.act(h.E(2, 1), line.act(h.E(2, 1), u)).empty());
  CHECK_FALSE(line.act(h.E(3, 1), u).empty());
}

TEST_CASE("Serre powers") {
  for (auto [m, n, d] : {std::tuple{2, 2, 2}, {1, 2, 1}, {1, 1, 5}, {2, 2, 3}}) {
    for (const auto& r : serre_power_check(m, n, d)) {
      CHECK(r.ok);
      CHECK(r.nilpotency == (r.root == m ? d + 1 : 1));
    }
  }
}

TEST_CASE("character ideal generators annihilate v") {
  for (auto [m, n, d] : {std::tuple{1, 1, 3}, {1, 2, 3}, {2, 2, 2}, {2, 2, 3}}) {
    for (int l = 1; l <= std::min(2, d - 1); ++l) {
      const auto r = char_ideal_generator_check(m, n, d, l);
      CHECK(r.holds);
      CHECK(r.generators_checked > 0);
    }
  }
}

TEST_CASE("direct sums") {
  CHECK(multi_filtration(1, 1, {2, 3}, 1) == 4);
  CHECK(multi_filtration(2, 2, {2, 2}, 1) == 10);
  CHECK(multi_filtration(1, 1, {3, 3}, 2) == 6);
  CHECK_THROWS_AS(multi_filtration(1, 1, {2, 3}, 3), std::invalid_argument);
  CHECK_THROWS_AS(multi_filtration(1, 1, {}, 1), std::invalid_argument);
}
