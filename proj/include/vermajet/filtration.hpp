#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "vermajet/lie.hpp"
#include "vermajet/linalg.hpp"
#include "vermajet/plethysm.hpp"
#include "vermajet/polynomial.hpp"

namespace vermajet {

/// Exponent vector over an ordered list of Lie algebra basis elements.
using PbwMonomial = Exponent;

struct FiltrationLevel {
  int level = 0;
  std::size_t dim = 0;
  /// Reduced basis, grouped by weight (ascending raw weight), each group in RREF.
  std::vector<PlethysmVector> basis;
  /// Raw weight -> multiplicity within this level.
  std::map<std::vector<int>, std::size_t> weights;
  /// True once the level is all of V_lambda.
  bool saturated = false;
};

struct FiltrationResult {
  int m = 0;
  int n = 0;
  int d = 0;
  std::uint64_t full_dim = 0;
  std::vector<FiltrationLevel> levels;

  std::vector<std::size_t> dims() const;
};

/// Levels 0..l_max of U_l(g)v, built as F_l = F_{l-1} + g F_{l-1}.
FiltrationResult canonical_filtration(int m, int n, int d, int l_max, const Caps& caps = {});

/// Every ordered monomial z^a (|a| <= l) over `generators` applied to `start`.
/// Factors act right to left. Rows follow graded_exponents order.
struct MonomialImages {
  std::vector<PbwMonomial> monomials;
  std::vector<PlethysmVector> images;
};

MonomialImages apply_pbw_monomials(const PlethysmModule& module, const std::vector<LieElement>& generators,
                                   const PlethysmVector& start, int l, std::size_t monomial_cap);

struct PbwFiltration {
  std::vector<PbwMonomial> monomials;
  std::vector<PlethysmVector> vectors;
  std::size_t rank = 0;
  bool independent = false;
};

/// z^a v over the fixed basis of n, |a| <= l.
PbwFiltration pbw_filtration(int m, int n, int d, int l, const Caps& caps = {});

/// Rows: PBW monomials of degree <= l over the chosen subalgebra basis.
/// Columns: coordinates in Sym^d(wedge^m V). Row r = (monomial r) v.
SparseMatrix evaluation_matrix(int m, int n, int d, int l, SubalgebraTag subalgebra, const Caps& caps = {});

/// dim ann_l(v): the kernel of U_l(g) -> V, u |-> u v.
std::size_t annihilator_dim(int m, int n, int d, int l, const Caps& caps = {});

struct SplitReport {
  std::uint64_t dim_Ul_g = 0;
  std::uint64_t dim_Ul_n = 0;
  std::size_t dim_ann = 0;
  std::size_t rank_g = 0;
  std::size_t rank_n = 0;
  bool split_holds = false;
};

/// U_l(g) = U_l(n) + ann_l(v) at the level of dimensions. Requires 1 <= l < d.
SplitReport verma_split_check(int m, int n, int d, int l, const Caps& caps = {});

struct SerreRecord {
  int root = 0;             // i in beta_i
  int expected_power = 0;   // m_beta = lambda(H_beta) + 1
  int nilpotency = 0;       // least k with X_{-beta}^k v = 0
  bool ok = false;
};

std::vector<SerreRecord> serre_power_check(int m, int n, int d, const Caps& caps = {});

struct CharIdealReport {
  std::size_t generators_checked = 0;
  bool holds = false;
};

/// Checks x (y - rho(y)) v = 0 for y in the basis of p and PBW monomials x of degree <= l - 1.
CharIdealReport char_ideal_generator_check(int m, int n, int d, int l, const Caps& caps = {});

/// dim V_lambda by the hook-content product over the m x n rectangle.
std::uint64_t weyl_dim_oracle(int m, int n, int d);

/// dim U_l(g) W inside V_{d_1} + ... + V_{d_k}, W spanned by the highest weight vectors.
std::size_t multi_filtration(int m, int n, const std::vector<int>& degrees, int l, const Caps& caps = {});

}  // namespace vermajet
