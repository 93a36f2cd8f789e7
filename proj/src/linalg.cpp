#include "vermajet/linalg.hpp"

#include <limits>
#include <numeric>

namespace vermajet {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is exact at every step; divide by the gcd first.
    const std::uint64_t num = n - k + i;
    const std::uint64_t g = std::gcd(result, i);
    const std::uint64_t r = result / g;
    const std::uint64_t q = num / (i / g);
    if (r != 0 && q > std::numeric_limits<std::uint64_t>::max() / r) {
      throw SizeCapError("binomial coefficient overflows 64 bits");
    }
    result = r * q;
  }
  return result;
}

SparseMatrix to_sparse(const RationalMatrix& dense) {
  std::vector<Eigen::Triplet<Rational>> triplets;
  for (Eigen::Index i = 0; i < dense.rows(); ++i) {
    for (Eigen::Index j = 0; j < dense.cols(); ++j) {
      if (!dense(i, j).is_zero()) triplets.emplace_back(i, j, dense(i, j));
    }
  }
  SparseMatrix out(dense.rows(), dense.cols());
  out.setFromTriplets(triplets.begin(), triplets.end());
  out.makeCompressed();
  return out;
}

RankNullity check_rank_nullity(const RationalMatrix& m) {
  RankNullity out;
  out.rows = m.rows();
  out.cols = m.cols();
  out.rank = rank(m);
  const auto kernel = kernel_basis(m);
  out.nullity = static_cast<Eigen::Index>(kernel.size());
  bool annihilated = true;
  for (const auto& x : kernel) {
    if (!all_zero(m * x)) {
      annihilated = false;
      break;
    }
  }
  out.holds = annihilated && out.rank + out.nullity == out.cols;
  return out;
}

}  // namespace vermajet
