#pragma once

#include <map>
#include <string>
#include <vector>

#include "vermajet/rational.hpp"

namespace vermajet {

using Exponent = std::vector<int>;

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in a lexicographically ordered map and never store zeros.
class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int var);
  static Polynomial monomial(const Exponent& e, const Rational& c = 1);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  Rational coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const { return *this * Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned k) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  /// p(x + offset).
  Polynomial shift(const std::vector<Rational>& offset) const;
  /// Drops every term of total degree > max_degree.
  Polynomial truncate(int max_degree) const;
  Polynomial derivative(int var) const;
  /// p(q_1, ..., q_k); all substitutes share one variable count.
  Polynomial compose(const std::vector<Polynomial>& substitutes) const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_;
  Terms terms_;
};

/// All exponent vectors in `nvars` variables with total degree <= max_degree,
/// ordered by degree, then lexicographically descending (x_1 highest first).
std::vector<Exponent> graded_exponents(int nvars, int max_degree);

}  // namespace vermajet
