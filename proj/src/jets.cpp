#include "vermajet/jets.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "vermajet/filtration.hpp"

namespace vermajet {

namespace {

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (std::size_t k = start; !seen[k]; k = static_cast<std::size_t>(perm[k])) {
      seen[k] = true;
      ++length;
    }
    if (length % 2 == 0) sign = -sign;
  }
  return sign;
}

void check_shape(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("grassmannian needs m >= 1 and n >= 1");
}

}  // namespace

int chart_variable(int m, int n, int i, int j) {
  if (i <= m || i > m + n || j < 1 || j > m) throw std::out_of_range("chart_variable: index out of range");
  return (i - m - 1) * m + (j - 1);
}

SectionPolynomial plucker_polynomial(const WedgeIndex& rows, int m, int n) {
  check_shape(m, n);
  if (static_cast<int>(rows.size()) != m) throw std::invalid_argument("plucker_polynomial: need an m-subset");
  const auto wedges = wedge_subsets(m, m + n);
  const auto it = std::find(wedges.begin(), wedges.end(), rows);
  if (it == wedges.end()) throw std::invalid_argument("plucker_polynomial: rows must be a sorted m-subset of 1..m+n");
  const int nvars = m * n;
  auto entry = [&](int row, int col) {  // 1-based entry of [[I_m], [T]]
    if (row <= m) return Polynomial::constant(nvars, row == col ? 1 : 0);
    return Polynomial::variable(nvars, chart_variable(m, n, row, col));
  };
  Polynomial det(nvars);
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Polynomial term = Polynomial::constant(nvars, permutation_sign(perm));
    for (int r = 0; r < m && !term.is_zero(); ++r) term = term * entry(rows[static_cast<std::size_t>(r)], perm[static_cast<std::size_t>(r)] + 1);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));

  SectionPolynomial s;
  s.m = m;
  s.n = n;
  s.d = 1;
  s.plucker.emplace(SymIndex{static_cast<int>(it - wedges.begin())}, Rational(1));
  s.chart = std::move(det);
  return s;
}

SectionPolynomial plucker_monomial(const SymIndex& idx, int m, int n) {
  const auto wedges = wedge_subsets(m, m + n);
  SectionPolynomial s;
  s.m = m;
  s.n = n;
  s.d = static_cast<int>(idx.size());
  s.plucker.emplace(idx, Rational(1));
  s.chart = Polynomial::constant(m * n, 1);
  for (int r : idx) s.chart = s.chart * plucker_polynomial(wedges.at(static_cast<std::size_t>(r)), m, n).chart;
  return s;
}

SectionSpace section_space(int m, int n, int d, const Caps& caps) {
  check_shape(m, n);
  const auto ctx = build_context(m, n);
  const PlethysmModule module(ctx, d, caps.ambient);

  std::vector<Polynomial> degree1;
  for (const auto& rows : module.wedges()) degree1.push_back(plucker_polynomial(rows, m, n).chart);

  std::vector<SectionPolynomial> candidates;
  candidates.reserve(module.dim());
  for (const auto& idx : module.basis()) {
    SectionPolynomial s;
    s.m = m;
    s.n = n;
    s.d = d;
    s.plucker.emplace(idx, Rational(1));
    s.chart = Polynomial::constant(m * n, 1);
    for (int r : idx) s.chart = s.chart * degree1[static_cast<std::size_t>(r)];
    candidates.push_back(std::move(s));
  }

  // Columns are candidates; pivot columns of the RREF are the first
  // independent candidates. Plücker relations drop out here.
  std::set<Exponent> support;
  for (const auto& s : candidates) {
    for (const auto& [e, c] : s.chart.terms()) support.insert(e);
  }
  std::map<Exponent, Eigen::Index> row_of;
  for (const auto& e : support) row_of.emplace(e, static_cast<Eigen::Index>(row_of.size()));
  RationalMatrix a = RationalMatrix::Zero(static_cast<Eigen::Index>(support.size()), static_cast<Eigen::Index>(candidates.size()));
  for (std::size_t col = 0; col < candidates.size(); ++col) {
    for (const auto& [e, c] : candidates[col].chart.terms()) a(row_of.at(e), static_cast<Eigen::Index>(col)) = c;
  }
  const auto reduced = rref(a);

  SectionSpace out;
  out.m = m;
  out.n = n;
  out.d = d;
  out.candidates = candidates.size();
  for (auto p : reduced.pivots) out.basis.push_back(candidates[static_cast<std::size_t>(p)]);
  return out;
}

std::vector<Exponent> jet_monomials(int m, int n, int l) {
  check_shape(m, n);
  return graded_exponents(m * n, l);
}

RationalMatrix taylor_rows(const std::vector<SectionPolynomial>& sections, const std::vector<Exponent>& jets,
                           const ChartPoint* center) {
  RationalMatrix out = RationalMatrix::Zero(static_cast<Eigen::Index>(sections.size()), static_cast<Eigen::Index>(jets.size()));
  std::map<Exponent, Eigen::Index> column_of;
  for (std::size_t k = 0; k < jets.size(); ++k) column_of.emplace(jets[k], static_cast<Eigen::Index>(k));
  for (std::size_t r = 0; r < sections.size(); ++r) {
    const SectionPolynomial& s = sections[r];
    Polynomial expanded = s.chart;
    if (center != nullptr) {
      if (center->rows() != s.n || center->cols() != s.m) throw std::invalid_argument("taylor_rows: chart point shape");
      std::vector<Rational> offset(static_cast<std::size_t>(s.m * s.n));
      for (int i = 0; i < s.n; ++i) {
        for (int j = 0; j < s.m; ++j) offset[static_cast<std::size_t>(i * s.m + j)] = (*center)(i, j);
      }
      expanded = expanded.shift(offset);
    }
    for (const auto& [e, c] : expanded.terms()) {
      auto it = column_of.find(e);
      if (it != column_of.end()) out(static_cast<Eigen::Index>(r), it->second) = c;
    }
  }
  return out;
}

namespace {

TaylorMatrix build_taylor(int m, int n, int d, int l, const ChartPoint* center, const Caps& caps) {
  if (l < 0) throw std::invalid_argument("taylor_matrix: l must be >= 0");
  const auto jet_count = binomial(static_cast<std::uint64_t>(m * n + l), static_cast<std::uint64_t>(m * n));
  if (jet_count > caps.monomials) throw SizeCapError("jet monomial count exceeds the cap");
  TaylorMatrix out;
  out.sections = section_space(m, n, d, caps);
  out.jets = jet_monomials(m, n, l);
  out.matrix = taylor_rows(out.sections.basis, out.jets, center);
  out.rank = static_cast<std::size_t>(rank(out.matrix));
  return out;
}

}  // namespace

TaylorMatrix taylor_matrix(int m, int n, int d, int l, const Caps& caps) {
  return build_taylor(m, n, d, l, nullptr, caps);
}

TaylorMatrix taylor_matrix_at(int m, int n, int d, int l, const ChartPoint& center, const Caps& caps) {
  return build_taylor(m, n, d, l, &center, caps);
}

RationalVector monomial_jet_projective(const std::vector<int>& exponents, int l) {
  if (exponents.size() < 2) throw std::invalid_argument("monomial_jet_projective: need exponents d_0..d_n with n >= 1");
  const int n = static_cast<int>(exponents.size()) - 1;
  const auto jets = graded_exponents(n, l);
  RationalVector out = RationalVector::Zero(static_cast<Eigen::Index>(jets.size()));
  const Exponent tail(exponents.begin() + 1, exponents.end());
  const auto it = std::find(jets.begin(), jets.end(), tail);
  if (it != jets.end()) out(static_cast<Eigen::Index>(it - jets.begin())) = 1;
  return out;
}

bool projective_rule_check(int n, int d, int l, const Caps& caps) {
  const TaylorMatrix t = taylor_matrix(1, n, d, l, caps);
  if (t.sections.dim() != t.sections.candidates) return false;
  for (std::size_t r = 0; r < t.sections.basis.size(); ++r) {
    const auto& plucker = t.sections.basis[r].plucker;
    if (plucker.size() != 1) return false;
    std::vector<int> exponents(static_cast<std::size_t>(n + 1), 0);
    for (int rank : plucker.begin()->first) ++exponents[static_cast<std::size_t>(rank)];
    const RationalVector expected = monomial_jet_projective(exponents, l);
    if (expected.size() != t.matrix.cols() || expected.transpose() != t.matrix.row(static_cast<Eigen::Index>(r))) return false;
  }
  return true;
}

KernelSections kernel_sections(int m, int n, int d, int l, const Caps& caps) {
  if (l < 1 || l > d) throw std::invalid_argument("kernel_sections requires 1 <= l <= d");
  const TaylorMatrix t = taylor_matrix(m, n, d, l, caps);
  KernelSections out;
  out.h0 = t.sections.dim();
  out.taylor_rank = t.rank;
  const RationalMatrix transposed = t.matrix.transpose();
  for (const auto& c : kernel_basis(transposed)) {
    SectionPolynomial s;
    s.m = m;
    s.n = n;
    s.d = d;
    s.chart = Polynomial(m * n);
    for (Eigen::Index r = 0; r < c.size(); ++r) {
      if (c(r).is_zero()) continue;
      const auto& basis_section = t.sections.basis[static_cast<std::size_t>(r)];
      for (const auto& [idx, coeff] : basis_section.plucker) s.plucker[idx] += c(r) * coeff;
      s.chart += basis_section.chart * c(r);
    }
    std::erase_if(s.plucker, [](const auto& kv) { return kv.second.is_zero(); });
    out.basis.push_back(std::move(s));
  }
  return out;
}

DualityReport duality_check(int m, int n, int d, int l, const Caps& caps) {
  if (l < 1 || l >= d) throw std::invalid_argument("duality_check requires 1 <= l < d");
  const auto ctx = build_context(m, n);
  const PlethysmModule module(ctx, d, caps.ambient);
  const auto filtration = canonical_filtration(m, n, d, l, caps);
  const auto& level = filtration.levels.back();
  const auto kernel = kernel_sections(m, n, d, l, caps);

  DualityReport out;
  out.filtration_dim = level.dim;
  out.taylor_rank = kernel.taylor_rank;
  out.dim_match = out.filtration_dim == out.taylor_rank;
  out.pairing_vanishes = true;
  for (const auto& u : level.basis) {
    for (const auto& s : kernel.basis) {
      ++out.pairings_checked;
      if (!pair(module, u, s).is_zero()) out.pairing_vanishes = false;
    }
  }
  return out;
}

bool chart_homogeneity_check(int m, int n, int d, int l, const ChartPoint& center, const Caps& caps) {
  const auto origin = taylor_matrix(m, n, d, l, caps);
  const auto shifted = taylor_matrix_at(m, n, d, l, center, caps);
  return origin.rank == shifted.rank;
}

}  // namespace vermajet
