#pragma once

#include <cstddef>
#include <vector>

#include "vermajet/linalg.hpp"
#include "vermajet/plethysm.hpp"
#include "vermajet/polynomial.hpp"

namespace vermajet {

// Chart convention: the m-plane at chart matrix T (n x m) is the column space
// of [[I_m], [T]]. Row i of the (m+n) x m matrix, i > m, carries the variables
// t_{i,1}, ..., t_{i,m}. Variables are numbered in lexicographic (i, j) order,
// matching the basis order of n. The distinguished point is T = 0.

/// n x m matrix of chart coordinates; entry (i - m - 1, j - 1) holds t_{ij}.
using ChartPoint = RationalMatrix;

/// Position of t_{ij} among the mn chart variables (1-based i in m+1..m+n, j in 1..m).
int chart_variable(int m, int n, int i, int j);

/// The m x m minor with rows S of [[I_m], [T]], as a degree-1 section.
SectionPolynomial plucker_polynomial(const WedgeIndex& rows, int m, int n);

/// Product of the Plücker polynomials named by a degree-d monomial.
SectionPolynomial plucker_monomial(const SymIndex& idx, int m, int n);

struct SectionSpace {
  int m = 0;
  int n = 0;
  int d = 0;
  /// Plücker monomials whose chart polynomials are independent, chosen
  /// greedily in basis order; they span H^0(X, O(d)).
  std::vector<SectionPolynomial> basis;
  std::size_t candidates = 0;

  std::size_t dim() const { return basis.size(); }
};

SectionSpace section_space(int m, int n, int d, const Caps& caps = {});

/// Monomials of total degree <= l in the mn chart variables, graded lexicographic.
std::vector<Exponent> jet_monomials(int m, int n, int l);

/// Rows: sections; columns: jets. Entry = coefficient of the jet monomial in
/// the section expanded around `center` (a literal Taylor truncation).
RationalMatrix taylor_rows(const std::vector<SectionPolynomial>& sections, const std::vector<Exponent>& jets,
                           const ChartPoint* center = nullptr);

struct TaylorMatrix {
  RationalMatrix matrix;
  std::size_t rank = 0;
  std::vector<Exponent> jets;
  SectionSpace sections;
};

TaylorMatrix taylor_matrix(int m, int n, int d, int l, const Caps& caps = {});
TaylorMatrix taylor_matrix_at(int m, int n, int d, int l, const ChartPoint& center, const Caps& caps = {});

/// Order-l jet at the origin of x_0^{d_0} ... x_n^{d_n} on P^n in the chart
/// x_0 != 0: the unit vector at (d_1..d_n) when d_1 + ... + d_n <= l, else zero.
/// Indexing follows jet_monomials(1, n, l).
RationalVector monomial_jet_projective(const std::vector<int>& exponents, int l);

/// For m = 1: every row of the Taylor matrix on monomial sections of O(d) over
/// P^n equals the monomial_jet_projective vector of its exponents.
bool projective_rule_check(int n, int d, int l, const Caps& caps = {});

struct KernelSections {
  std::vector<SectionPolynomial> basis;
  std::size_t h0 = 0;
  std::size_t taylor_rank = 0;

  std::size_t dim() const { return basis.size(); }
};

/// Sections vanishing to order >= l + 1 at the distinguished point. Requires 1 <= l <= d.
KernelSections kernel_sections(int m, int n, int d, int l, const Caps& caps = {});

struct DualityReport {
  std::size_t filtration_dim = 0;
  std::size_t taylor_rank = 0;
  std::size_t pairings_checked = 0;
  bool dim_match = false;
  bool pairing_vanishes = false;
};

/// U_l(g)v against the jet fiber: equal dimensions, and U_l(g)v pairs to zero
/// with every section in the kernel of the Taylor map. Requires 1 <= l < d.
DualityReport duality_check(int m, int n, int d, int l, const Caps& caps = {});

/// Rank of the Taylor matrix re-expanded around T0 equals the rank at the origin.
bool chart_homogeneity_check(int m, int n, int d, int l, const ChartPoint& center, const Caps& caps = {});

}  // namespace vermajet
