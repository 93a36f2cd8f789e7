#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "vermajet/rational.hpp"

namespace vermajet {

/// A traceless (m+n)x(m+n) matrix. Matrix entries are 0-based; the E(i, j)
/// helpers below take the 1-based indices used in the mathematics.
using LieElement = RationalMatrix;

enum class SubalgebraTag { g_minus, h, g_plus, p, n, all };

std::string to_string(SubalgebraTag tag);
SubalgebraTag subalgebra_from_string(const std::string& name);

/// Integer weight vector modulo the all-ones vector.
struct Weight {
  Eigen::VectorXi coords;

  friend bool operator==(const Weight& a, const Weight& b);
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  Weight operator+(const Weight& other) const { return {coords + other.coords}; }
  Weight operator-(const Weight& other) const { return {coords - other.coords}; }
  std::vector<int> raw() const { return {coords.data(), coords.data() + coords.size()}; }
};

/// The basis element E(i, j) of gl(m+n), 1-based.
struct BasisLabel {
  enum class Kind { root, cartan } kind;
  int i = 0;  // root: row; cartan: k
  int j = 0;  // root: column; cartan: unused
  std::string str() const;
};

/// sl(m+n) with its parabolic block structure.
///
/// Basis order is fixed: every E_ij with i != j in lexicographic (i, j) order,
/// then H_k = E_kk - E_{k+1,k+1} for k = 1..m+n-1. PBW monomials over any
/// subalgebra use the induced order.
class LieAlgebraContext {
 public:
  LieAlgebraContext(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int size() const { return m_ + n_; }
  /// dim g = (m+n)^2 - 1.
  int dim() const { return static_cast<int>(basis_.size()); }

  const std::vector<LieElement>& basis() const { return basis_; }
  const std::vector<BasisLabel>& labels() const { return labels_; }

  /// Positions (into basis()) of the elements spanning a subalgebra.
  std::vector<std::size_t> indices(SubalgebraTag tag) const;
  bool contains(SubalgebraTag tag, const LieElement& x) const;

  LieElement zero() const { return LieElement::Zero(size(), size()); }
  /// Matrix unit E_ij, 1-based.
  LieElement E(int i, int j) const;
  /// H_k = E_kk - E_{k+1,k+1}, 1-based.
  LieElement H(int k) const;

  /// Root of a basis element: L_i - L_j for E_ij, zero for H_k.
  Weight root_of(std::size_t basis_index) const;

 private:
  int m_;
  int n_;
  std::vector<LieElement> basis_;
  std::vector<BasisLabel> labels_;
};

/// Throws std::invalid_argument unless m, n >= 1.
LieAlgebraContext build_context(int m, int n);

LieElement bracket(const LieElement& x, const LieElement& y);

struct SimpleRoot {
  int index;               // i in beta_i = L_i - L_{i+1}
  Weight beta;
  LieElement lowering;     // E_{i+1,i}
  LieElement coroot;       // H_beta = E_ii - E_{i+1,i+1}
};

std::vector<SimpleRoot> simple_roots(const LieAlgebraContext& ctx);

/// The character of p on the highest weight line: d * trace of the upper-left
/// m x m block. Throws std::invalid_argument if y is not in p.
Rational rho_character(const LieAlgebraContext& ctx, int d, const LieElement& y);

/// lambda = d (L_1 + ... + L_m).
Weight highest_weight(const LieAlgebraContext& ctx, int d);

/// lambda(H) for a diagonal H.
Rational evaluate_weight(const Weight& w, const LieElement& diagonal);

struct JacobiReport {
  std::size_t triples_checked = 0;
  bool holds = false;
};

/// [X,[Y,Z]] + [Y,[Z,X]] + [Z,[X,Y]] = 0 over basis triples: all of them when
/// `samples` is 0, otherwise `samples` random triples.
JacobiReport jacobi_check(const LieAlgebraContext& ctx, std::size_t samples = 0, std::uint64_t seed = 1);

}  // namespace vermajet
