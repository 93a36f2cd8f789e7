#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "vermajet/lie.hpp"
#include "vermajet/polynomial.hpp"
#include "vermajet/rational.hpp"

namespace vermajet {

inline constexpr std::size_t kDefaultAmbientCap = 20000;
inline constexpr std::size_t kDefaultMonomialCap = 20000;

struct Caps {
  std::size_t ambient = kDefaultAmbientCap;
  std::size_t monomials = kDefaultMonomialCap;
};

/// An m-subset of {1..m+n}, sorted ascending; names the wedge e_{s1} ^ ... ^ e_{sm}.
using WedgeIndex = std::vector<int>;

/// A degree-d monomial of Sym^d(wedge^m V): the sorted multiset of wedge ranks
/// (positions in wedge_subsets(m, m+n)).
using SymIndex = std::vector<int>;

/// Sparse element of Sym^d(wedge^m V); never stores zeros.
using PlethysmVector = std::map<SymIndex, Rational>;

/// All m-subsets of {1..size} in lexicographic order.
std::vector<WedgeIndex> wedge_subsets(int m, int size);

/// binom(binom(m+n, m) + d - 1, d); throws SizeCapError above `cap`.
std::size_t module_dim(int m, int n, int d, std::size_t cap = kDefaultAmbientCap);

/// A global section of O(d) on the grassmannian: a combination of degree-d
/// Plücker monomials together with its expansion in the standard chart.
struct SectionPolynomial {
  int m = 0;
  int n = 0;
  int d = 0;
  std::map<SymIndex, Rational> plucker;
  Polynomial chart;
};

/// Sym^d(wedge^m V) as a module over sl(m+n).
class PlethysmModule {
 public:
  PlethysmModule(const LieAlgebraContext& ctx, int d, std::size_t ambient_cap = kDefaultAmbientCap);

  int m() const { return m_; }
  int n() const { return n_; }
  int d() const { return d_; }
  std::size_t dim() const { return basis_.size(); }

  const std::vector<WedgeIndex>& wedges() const { return wedges_; }
  const std::vector<SymIndex>& basis() const { return basis_; }
  std::size_t index_of(const SymIndex& idx) const;
  int wedge_rank(const WedgeIndex& s) const;

  /// Derivation action over the d symmetric factors and the m wedge slots.
  PlethysmVector act(const LieElement& x, const PlethysmVector& w) const;

  /// v = (e_1 ^ ... ^ e_m)^d.
  PlethysmVector highest_weight_vector() const;

  /// k-th coordinate = multiplicity of index k across all wedge factors.
  Weight weight_of(const SymIndex& idx) const;

  /// Raw weight shared by every term of w; throws if w is zero or not homogeneous.
  Weight homogeneous_weight(const PlethysmVector& w) const;

  RationalVector coordinates(const PlethysmVector& w) const;
  PlethysmVector from_coordinates(const RationalVector& x) const;

  std::string str(const SymIndex& idx) const;
  std::string str(const PlethysmVector& w) const;

 private:
  int m_;
  int n_;
  int d_;
  std::vector<WedgeIndex> wedges_;
  std::map<WedgeIndex, int> wedge_rank_;
  std::vector<SymIndex> basis_;
  std::map<SymIndex, std::size_t> index_;
};

/// Invariant pairing of Sym^d(wedge^m V) with sections: the determinant pairing
/// on wedge^m and the permanent on Sym^d, so <e^M, p^M'> = delta(M, M') prod mult(M)!.
/// Throws std::invalid_argument on a shape or degree mismatch.
Rational pair(const PlethysmModule& module, const PlethysmVector& functional, const SectionPolynomial& section);

void axpy(PlethysmVector& y, const Rational& a, const PlethysmVector& x);
PlethysmVector scaled(const PlethysmVector& x, const Rational& a);
inline bool is_zero(const PlethysmVector& w) { return w.empty(); }

/// A random sparse vector: up to `terms` basis monomials with small rational coefficients.
PlethysmVector random_vector(const PlethysmModule& module, std::mt19937_64& rng, std::size_t terms = 6);

struct ActionLawReport {
  std::size_t vectors = 0;
  std::size_t pairs_checked = 0;
  bool holds = false;
};

/// act([X,Y], w) = act(X, act(Y, w)) - act(Y, act(X, w)) on `vectors` random w.
/// All basis pairs per vector when `pairs_per_vector` is 0, else that many random pairs.
ActionLawReport action_law_check(const LieAlgebraContext& ctx, const PlethysmModule& module, std::size_t vectors,
                                 std::size_t pairs_per_vector, std::uint64_t seed = 1);

}  // namespace vermajet
