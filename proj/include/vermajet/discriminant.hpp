#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vermajet/polynomial.hpp"
#include "vermajet/rational.hpp"

namespace vermajet {

inline constexpr int kDefaultDiscriminantCap = 6;

/// f = sum_k a_k x_0^{d-k} x_1^k.
struct BinaryForm {
  std::vector<Rational> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Generators of the eliminant ideal in the coefficients a_0..a_d. Each is a
/// primitive integer polynomial whose lexicographically smallest term
/// (a_0 exponent compared first) has a positive coefficient.
struct Eliminant {
  int d = 0;
  int l = 0;
  std::vector<Polynomial> generators;

  std::vector<int> degrees() const;
};

/// Names a_0..a_d for printing.
std::vector<std::string> coefficient_names(int d);

Polynomial normalize_primitive(const Polynomial& p);

/// Removes the largest monomial dividing every term.
Polynomial strip_monomial_factor(const Polynomial& p);

/// Exact quotient by a variable; throws if some term is not divisible.
Polynomial divide_by_variable(const Polynomial& p, int var);

/// Determinant by Laplace expansion memoized over column subsets.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

/// Sylvester resultant of two forms given by coefficient lists, x_0-power descending.
Polynomial resultant(const std::vector<Polynomial>& f, const std::vector<Polynomial>& g);

/// Res(f, f') / a_0 in the chart x_1 = 1, evaluated by pruned Leibniz expansion.
/// Independent of multiple_root_eliminant.
Eliminant classical_discriminant_oracle(int d, int cap = kDefaultDiscriminantCap);

/// Forms with a root of multiplicity >= l + 1. l = 1: the resultant of the two
/// first partials. l > 1: pairwise resultants of the order-l partials, kept
/// when they vanish on every parametrization sample.
Eliminant multiple_root_eliminant(int d, int l, std::uint64_t seed = 1, int cap = kDefaultDiscriminantCap);

/// Point (b, g) of the incidence parametrization (x_0 - b x_1)^{l+1} g.
struct ParamSample {
  Rational root;
  std::vector<Rational> cofactor;  // g_0..g_{d-l-1}, x_0-power descending
};

ParamSample random_sample(int d, int l, std::mt19937_64& rng);

/// Coefficients a_0..a_d as polynomials in (b, g_0, ..., g_{d-l-1}).
std::vector<Polynomial> parametrization(int d, int l);

BinaryForm parametrized_form(int d, int l, const ParamSample& sample);

Rational evaluate(const Polynomial& p, const BinaryForm& f);

/// (d + 1) x (d - l + 1) Jacobian of the parametrization at `sample`.
RationalMatrix parametrization_jacobian(int d, int l, const ParamSample& sample);

/// Exact rank of the Jacobian of the parametrization at `sample`; d - l + 1
/// at a generic point. Throws std::invalid_argument if g_0 = 0.
std::size_t parametrization_jacobian_rank(int d, int l, const ParamSample& sample);

/// Irreducibility mod p of a univariate integer polynomial (Rabin's test).
/// Coefficients are constant term first.
bool irreducible_mod_p(const std::vector<Integer>& coeffs, std::int64_t p);

enum class Verdict { certified, heuristic, unknown };
std::string to_string(Verdict v);

struct IrreducibilityReport {
  Verdict verdict = Verdict::unknown;
  bool matches_oracle = false;
  bool jacobian_ok = false;
  bool samples_on_locus = false;
  std::size_t irreducible_lines = 0;
  std::string evidence;
};

/// Certified only for l = 1, d <= 4: the eliminant equals the classical
/// discriminant and has irreducible full-degree restrictions to three random
/// lines. Otherwise heuristic evidence. Never reports reducibility.
IrreducibilityReport irreducibility_witness(int d, int l, std::uint64_t seed = 1, int cap = kDefaultDiscriminantCap);

}  // namespace vermajet
