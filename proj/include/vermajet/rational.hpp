#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace vermajet {

// Exact rationals backed by GMP. Expression templates are disabled so the type
// behaves as a plain value scalar inside Eigen expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

/// Raised when a requested computation exceeds a configured size cap.
class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact binomial coefficient; throws SizeCapError on 64-bit overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

inline std::string to_string(const Rational& q) { return q.str(); }

/// A small random rational p/q with |p| <= bound, 1 <= q <= bound.
/// Used by sampling checks; the distribution is irrelevant, only reproducibility.
inline Rational random_rational(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return Rational(num(rng), den(rng));
}

}  // namespace vermajet
