#pragma once

#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "vermajet/rational.hpp"

namespace vermajet {

/// Row-major sparse storage; builders prune explicit zeros.
using SparseMatrix = Eigen::SparseMatrix<Rational, Eigen::RowMajor>;

template <typename Scalar>
struct RrefResult {
  Eigen::Index rank = 0;
  std::vector<Eigen::Index> pivots;
  /// Unique reduced row echelon form, same shape as the input, zero rows last.
  Matrix<Scalar> reduced;
};

namespace detail {

template <typename Scalar>
inline bool is_zero(const Scalar& x) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return x.is_zero();
  } else {
    return x == Scalar(0);
  }
}

// Rescale a rational row to a primitive integer row (same line through the
// origin). Keeps entry growth bounded during fraction-free elimination.
template <typename Scalar, typename Row>
void normalize_content(Row&& row) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    Integer den_lcm = 1;
    bool any = false;
    for (Eigen::Index j = 0; j < row.size(); ++j) {
      const Rational& x = row(j);
      if (x.is_zero()) continue;
      any = true;
      den_lcm = boost::multiprecision::lcm(den_lcm, Integer(denominator(x)));
    }
    if (!any) return;
    Integer num_gcd = 0;
    for (Eigen::Index j = 0; j < row.size(); ++j) {
      if (row(j).is_zero()) continue;
      row(j) *= Rational(den_lcm);
      num_gcd = boost::multiprecision::gcd(num_gcd, Integer(numerator(row(j))));
    }
    if (num_gcd != 1) {
      const Rational g(num_gcd);
      for (Eigen::Index j = 0; j < row.size(); ++j) {
        if (!row(j).is_zero()) row(j) /= g;
      }
    }
  }
}

}  // namespace detail

/// Exact test that every coefficient is zero (Eigen's isZero is tolerance based).
template <typename Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!detail::is_zero(m(i, j))) return false;
    }
  }
  return true;
}

/// Gauss-Jordan elimination, fraction-free with per-row content normalization.
/// Pivots are the leftmost nonzero column of the remaining rows, so the result
/// is deterministic.
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  RrefResult<Scalar> out;
  Matrix<Scalar> a = input;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  for (Eigen::Index i = 0; i < rows; ++i) detail::normalize_content<Scalar>(a.row(i));

  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index i = rank; i < rows; ++i) {
      if (!detail::is_zero(a(i, c))) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != rank) a.row(pivot_row).swap(a.row(rank));
    const Scalar pivot = a(rank, c);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == rank || detail::is_zero(a(i, c))) continue;
      const Scalar factor = a(i, c);
      for (Eigen::Index j = 0; j < cols; ++j) {
        if (detail::is_zero(a(i, j)) && detail::is_zero(a(rank, j))) continue;
        a(i, j) = pivot * a(i, j) - factor * a(rank, j);
      }
      detail::normalize_content<Scalar>(a.row(i));
    }
    out.pivots.push_back(c);
    ++rank;
  }
  for (Eigen::Index r = 0; r < rank; ++r) {
    const Scalar p = a(r, out.pivots[static_cast<std::size_t>(r)]);
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (!detail::is_zero(a(r, j))) a(r, j) /= p;
    }
  }
  out.rank = rank;
  out.reduced = std::move(a);
  return out;
}

inline RrefResult<Rational> rref(const SparseMatrix& m) { return rref(RationalMatrix(m.toDense())); }

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank;
}

inline Eigen::Index rank(const SparseMatrix& m) { return rref(m).rank; }

/// Basis of {x : M x = 0}, one vector per free column, in column order.
template <typename Derived>
std::vector<Vector<typename Derived::Scalar>> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto r = rref(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Vector<Scalar>> basis;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vector<Scalar> x = Vector<Scalar>::Zero(cols);
    x(f) = Scalar(1);
    for (Eigen::Index k = 0; k < r.rank; ++k) {
      const Scalar& entry = r.reduced(k, f);
      if (!detail::is_zero(entry)) x(r.pivots[static_cast<std::size_t>(k)]) = -entry;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

inline std::vector<RationalVector> kernel_basis(const SparseMatrix& m) {
  return kernel_basis(RationalMatrix(m.toDense()));
}

/// Stack vectors as rows; all must share one length.
template <typename Scalar>
Matrix<Scalar> stack_rows(const std::vector<Vector<Scalar>>& vectors, Eigen::Index cols) {
  Matrix<Scalar> m(static_cast<Eigen::Index>(vectors.size()), cols);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != cols) throw std::invalid_argument("stack_rows: length mismatch");
    m.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  }
  return m;
}

template <typename Scalar>
Eigen::Index span_dim(const std::vector<Vector<Scalar>>& vectors) {
  if (vectors.empty()) return 0;
  return rank(stack_rows(vectors, vectors.front().size()));
}

SparseMatrix to_sparse(const RationalMatrix& dense);

/// Checks rank + nullity = cols and M x = 0 for every returned kernel vector.
struct RankNullity {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  Eigen::Index rank = 0;
  Eigen::Index nullity = 0;
  bool holds = false;
};

RankNullity check_rank_nullity(const RationalMatrix& m);

}  // namespace vermajet
