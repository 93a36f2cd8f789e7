#include "vermajet/discriminant.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "vermajet/linalg.hpp"

namespace vermajet {

namespace {

void check_degrees(int d, int l, int cap) {
  if (l < 1) throw std::invalid_argument("eliminant needs l >= 1");
  if (d <= l) throw std::invalid_argument("degenerate: need d > l");
  if (d > cap) throw SizeCapError("binary form degree exceeds the discriminant cap");
}

Rational falling(int a, int k) {
  if (k > a) return 0;
  Rational out = 1;
  for (int i = 0; i < k; ++i) out *= a - i;
  return out;
}

// Order-l partial derivative d^{l-i}/dx_0^{l-i} d^i/dx_1^i of the generic form,
// as a coefficient list of degree d - l.
std::vector<Polynomial> generic_partial(int d, int l, int i) {
  const int nvars = d + 1;
  const int p = l - i;
  const int q = i;
  std::vector<Polynomial> out;
  for (int j = 0; j <= d - l; ++j) {
    const int k = j + q;
    out.push_back(Polynomial::variable(nvars, k) * (falling(d - k, p) * falling(k, q)));
  }
  return out;
}

Integer lcm_int(const Integer& a, const Integer& b) { return a / boost::multiprecision::gcd(a, b) * b; }

}  // namespace

std::vector<int> Eliminant::degrees() const {
  std::vector<int> out;
  for (const auto& g : generators) out.push_back(g.total_degree());
  return out;
}

std::vector<std::string> coefficient_names(int d) {
  std::vector<std::string> out;
  for (int k = 0; k <= d; ++k) out.push_back("a" + std::to_string(k));
  return out;
}

Polynomial normalize_primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer den = 1;
  for (const auto& [e, c] : p.terms()) den = lcm_int(den, boost::multiprecision::denominator(c));
  Integer content = 0;
  for (const auto& [e, c] : p.terms()) {
    const Integer num = boost::multiprecision::numerator(c * Rational(den));
    content = boost::multiprecision::gcd(content, num);
  }
  Rational scale = Rational(den) / Rational(content);
  if (p.terms().begin()->second < 0) scale = -scale;
  return p * scale;
}

Polynomial strip_monomial_factor(const Polynomial& p) {
  if (p.is_zero()) return p;
  Exponent low = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t v = 0; v < e.size(); ++v) low[v] = std::min(low[v], e[v]);
  }
  Polynomial out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponent q = e;
    for (std::size_t v = 0; v < q.size(); ++v) q[v] -= low[v];
    out.add_term(q, c);
  }
  return out;
}

Polynomial divide_by_variable(const Polynomial& p, int var) {
  Polynomial out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e.at(static_cast<std::size_t>(var)) == 0) throw std::invalid_argument("divide_by_variable: not divisible");
    Exponent q = e;
    --q[static_cast<std::size_t>(var)];
    out.add_term(q, c);
  }
  return out;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t size = m.size();
  if (size == 0) throw std::invalid_argument("determinant of an empty matrix");
  if (size > 20) throw SizeCapError("determinant: matrix too large for subset expansion");
  for (const auto& row : m) {
    if (row.size() != size) throw std::invalid_argument("determinant: matrix must be square");
  }
  const int nvars = m[0][0].nvars();
  // memo[mask] = det of rows popcount(mask).. against the columns outside mask.
  std::unordered_map<std::uint32_t, Polynomial> memo;
  std::function<Polynomial(std::uint32_t)> minor = [&](std::uint32_t used) -> Polynomial {
    const auto row = static_cast<std::size_t>(std::popcount(used));
    if (row == size) return Polynomial::constant(nvars, 1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    Polynomial acc(nvars);
    int position = 0;
    for (std::size_t c = 0; c < size; ++c) {
      if (used & (1u << c)) continue;
      if (!m[row][c].is_zero()) {
        const Polynomial sub = minor(used | (1u << c));
        if (!sub.is_zero()) {
          Polynomial term = m[row][c] * sub;
          if (position % 2 == 1) term = -term;
          acc += term;
        }
      }
      ++position;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return minor(0);
}

Polynomial resultant(const std::vector<Polynomial>& f, const std::vector<Polynomial>& g) {
  if (f.size() < 2 || g.size() < 2) throw std::invalid_argument("resultant: forms must have degree >= 1");
  const std::size_t p = f.size() - 1;
  const std::size_t q = g.size() - 1;
  const int nvars = f[0].nvars();
  std::vector<std::vector<Polynomial>> sylvester(p + q, std::vector<Polynomial>(p + q, Polynomial(nvars)));
  for (std::size_t r = 0; r < q; ++r) {
    for (std::size_t k = 0; k <= p; ++k) sylvester[r][r + k] = f[k];
  }
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t k = 0; k <= q; ++k) sylvester[q + r][r + k] = g[k];
  }
  return determinant(sylvester);
}

Eliminant classical_discriminant_oracle(int d, int cap) {
  check_degrees(d, 1, cap);
  const int nvars = d + 1;
  // f = sum a_k x^{d-k}, f' = sum (d-k) a_k x^{d-k-1}; Sylvester rows as (column, coefficient, variable).
  const int size = 2 * d - 1;
  struct Entry {
    int col;
    Rational c;
    int var;
  };
  std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(size));
  for (int r = 0; r < d - 1; ++r) {
    for (int k = 0; k <= d; ++k) rows[static_cast<std::size_t>(r)].push_back({r + k, Rational(1), k});
  }
  for (int r = 0; r < d; ++r) {
    for (int k = 0; k < d; ++k) rows[static_cast<std::size_t>(d - 1 + r)].push_back({r + k, Rational(d - k), k});
  }

  // Leibniz expansion, pruned at zero entries. Every entry is a single term,
  // so each permutation contributes one monomial.
  Polynomial res(nvars);
  std::vector<int> chosen;
  std::vector<bool> taken(static_cast<std::size_t>(size), false);
  Exponent e(static_cast<std::size_t>(nvars), 0);
  std::function<void(int, const Rational&)> expand = [&](int r, const Rational& coeff) {
    if (r == size) {
      int inversions = 0;
      for (int a = 0; a < size; ++a) {
        for (int b = a + 1; b < size; ++b) inversions += chosen[static_cast<std::size_t>(a)] > chosen[static_cast<std::size_t>(b)];
      }
      res.add_term(e, inversions % 2 == 0 ? coeff : -coeff);
      return;
    }
    for (const auto& entry : rows[static_cast<std::size_t>(r)]) {
      if (taken[static_cast<std::size_t>(entry.col)]) continue;
      taken[static_cast<std::size_t>(entry.col)] = true;
      chosen.push_back(entry.col);
      ++e[static_cast<std::size_t>(entry.var)];
      expand(r + 1, coeff * entry.c);
      --e[static_cast<std::size_t>(entry.var)];
      chosen.pop_back();
      taken[static_cast<std::size_t>(entry.col)] = false;
    }
  };
  expand(0, Rational(1));

  Eliminant out;
  out.d = d;
  out.l = 1;
  out.generators.push_back(normalize_primitive(divide_by_variable(res, 0)));
  return out;
}

Eliminant multiple_root_eliminant(int d, int l, std::uint64_t seed, int cap) {
  check_degrees(d, l, cap);
  std::vector<std::vector<Polynomial>> partials;
  for (int i = 0; i <= l; ++i) partials.push_back(generic_partial(d, l, i));

  Eliminant out;
  out.d = d;
  out.l = l;
  if (l == 1) {
    out.generators.push_back(normalize_primitive(strip_monomial_factor(resultant(partials[0], partials[1]))));
    return out;
  }

  std::mt19937_64 rng(seed);
  std::vector<BinaryForm> samples;
  for (int k = 0; k < 10; ++k) samples.push_back(parametrized_form(d, l, random_sample(d, l, rng)));

  for (std::size_t i = 0; i < partials.size(); ++i) {
    for (std::size_t j = i + 1; j < partials.size(); ++j) {
      Polynomial r = resultant(partials[i], partials[j]);
      if (r.is_zero()) continue;
      r = normalize_primitive(strip_monomial_factor(r));
      if (r.total_degree() <= 0) continue;
      const bool on_locus = std::all_of(samples.begin(), samples.end(), [&](const BinaryForm& f) { return evaluate(r, f).is_zero(); });
      if (!on_locus) continue;
      if (std::find(out.generators.begin(), out.generators.end(), r) == out.generators.end()) out.generators.push_back(std::move(r));
    }
  }
  return out;
}

ParamSample random_sample(int d, int l, std::mt19937_64& rng) {
  check_degrees(d, l, d);
  ParamSample s;
  s.root = random_rational(rng);
  for (int j = 0; j < d - l; ++j) s.cofactor.push_back(random_rational(rng));
  while (s.cofactor[0].is_zero()) s.cofactor[0] = random_rational(rng);
  return s;
}

std::vector<Polynomial> parametrization(int d, int l) {
  check_degrees(d, l, d);
  const int k = d - l;
  const int nvars = 1 + k;
  const Polynomial minus_b = -Polynomial::variable(nvars, 0);
  std::vector<Polynomial> out(static_cast<std::size_t>(d + 1), Polynomial(nvars));
  for (int i = 0; i <= l + 1; ++i) {
    const Polynomial h = minus_b.pow(static_cast<unsigned>(i)) * Rational(binomial(static_cast<std::uint64_t>(l + 1), static_cast<std::uint64_t>(i)));
    for (int j = 0; j < k; ++j) out[static_cast<std::size_t>(i + j)] += h * Polynomial::variable(nvars, 1 + j);
  }
  return out;
}

namespace {

std::vector<Rational> sample_point(int d, int l, const ParamSample& sample) {
  if (static_cast<int>(sample.cofactor.size()) != d - l) throw std::invalid_argument("sample cofactor must have d - l coefficients");
  std::vector<Rational> point{sample.root};
  point.insert(point.end(), sample.cofactor.begin(), sample.cofactor.end());
  return point;
}

}  // namespace

BinaryForm parametrized_form(int d, int l, const ParamSample& sample) {
  const auto point = sample_point(d, l, sample);
  BinaryForm f;
  for (const auto& a : parametrization(d, l)) f.coeffs.push_back(a.evaluate(point));
  return f;
}

Rational evaluate(const Polynomial& p, const BinaryForm& f) {
  if (p.nvars() != static_cast<int>(f.coeffs.size())) throw std::invalid_argument("evaluate: form degree does not match");
  return p.evaluate(f.coeffs);
}

RationalMatrix parametrization_jacobian(int d, int l, const ParamSample& sample) {
  check_degrees(d, l, d);
  if (sample.cofactor.empty() || sample.cofactor[0].is_zero()) throw std::invalid_argument("sample needs a nonzero leading cofactor coefficient");
  const auto point = sample_point(d, l, sample);
  const auto coords = parametrization(d, l);
  RationalMatrix jac(d + 1, static_cast<Eigen::Index>(point.size()));
  for (int r = 0; r <= d; ++r) {
    for (std::size_t v = 0; v < point.size(); ++v) {
      jac(r, static_cast<Eigen::Index>(v)) = coords[static_cast<std::size_t>(r)].derivative(static_cast<int>(v)).evaluate(point);
    }
  }
  return jac;
}

std::size_t parametrization_jacobian_rank(int d, int l, const ParamSample& sample) {
  return static_cast<std::size_t>(rank(parametrization_jacobian(d, l, sample)));
}

namespace {

using ModPoly = std::vector<std::int64_t>;  // constant term first, no trailing zeros

std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b = mod(b, p);
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return r;
}

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly poly_rem(ModPoly a, const ModPoly& b, std::int64_t p) {
  trim(a);
  const std::int64_t inv = pow_mod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    const std::int64_t factor = a.back() * inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = mod(a[shift + k] - factor * b[k], p);
    trim(a);
  }
  return a;
}

ModPoly mul_rem(const ModPoly& a, const ModPoly& b, const ModPoly& f, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return poly_rem(out, f, p);
}

ModPoly pow_rem(ModPoly base, std::int64_t e, const ModPoly& f, std::int64_t p) {
  ModPoly r{1};
  base = poly_rem(base, f, p);
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mul_rem(r, base, f, p);
    base = mul_rem(base, base, f, p);
  }
  return r;
}

ModPoly poly_gcd(ModPoly a, ModPoly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^{p^k} mod f.
ModPoly frobenius_power(int k, const ModPoly& f, std::int64_t p) {
  ModPoly h{0, 1};
  for (int i = 0; i < k; ++i) h = pow_rem(h, p, f, p);
  return h;
}

ModPoly minus_x(ModPoly h, std::int64_t p) {
  if (h.size() < 2) h.resize(2, 0);
  h[1] = mod(h[1] - 1, p);
  trim(h);
  return h;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int q = 2; q <= n; ++q) {
    if (n % q != 0) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  return out;
}

}  // namespace

bool irreducible_mod_p(const std::vector<Integer>& coeffs, std::int64_t p) {
  ModPoly f;
  for (const auto& c : coeffs) {
    Integer r = c % p;
    if (r < 0) r += p;
    f.push_back(r.convert_to<std::int64_t>());
  }
  trim(f);
  if (f.size() != coeffs.size() || f.empty()) throw std::invalid_argument("irreducible_mod_p: leading coefficient vanishes mod p");
  const int n = static_cast<int>(f.size()) - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  if (!minus_x(frobenius_power(n, f, p), p).empty()) return false;
  for (int q : prime_divisors(n)) {
    const ModPoly g = poly_gcd(f, minus_x(frobenius_power(n / q, f, p), p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::heuristic: return "heuristic";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// Primitive integer coefficients of F restricted to the line p + t q, constant term first.
std::vector<Integer> line_restriction(const Polynomial& f, const std::vector<Rational>& base, const std::vector<Rational>& dir) {
  std::vector<Polynomial> subs;
  for (std::size_t k = 0; k < base.size(); ++k) {
    subs.push_back(Polynomial::constant(1, base[k]) + Polynomial::variable(1, 0) * dir[k]);
  }
  const Polynomial r = normalize_primitive(f.compose(subs));
  std::vector<Integer> out(static_cast<std::size_t>(std::max(r.total_degree(), 0) + 1), Integer(0));
  for (const auto& [e, c] : r.terms()) out[static_cast<std::size_t>(e[0])] = boost::multiprecision::numerator(c);
  return out;
}

bool sampled_locus(const std::vector<Polynomial>& generators, int d, int l, std::mt19937_64& rng) {
  for (int k = 0; k < 10; ++k) {
    const auto f = parametrized_form(d, l, random_sample(d, l, rng));
    for (const auto& g : generators) {
      if (!evaluate(g, f).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

IrreducibilityReport irreducibility_witness(int d, int l, std::uint64_t seed, int cap) {
  check_degrees(d, l, cap);
  IrreducibilityReport out;
  const Eliminant e = multiple_root_eliminant(d, l, seed, cap);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::ostringstream evidence;

  out.jacobian_ok = true;
  for (int k = 0; k < 5; ++k) {
    if (parametrization_jacobian_rank(d, l, random_sample(d, l, rng)) != static_cast<std::size_t>(d - l + 1)) out.jacobian_ok = false;
  }
  out.samples_on_locus = !e.generators.empty() && sampled_locus(e.generators, d, l, rng);
  evidence << "jacobian rank " << (out.jacobian_ok ? "generic" : "deficient") << "; samples "
           << (out.samples_on_locus ? "on locus" : "off locus");

  if (l == 1 && d <= 4 && e.generators.size() == 1) {
    const auto oracle = classical_discriminant_oracle(d, cap);
    out.matches_oracle = oracle.generators[0] == e.generators[0];
    const Polynomial& f = e.generators[0];
    const int degree = f.total_degree();
    static constexpr std::int64_t kPrimes[] = {10007, 10009, 10037, 10039, 10061, 10067};
    std::uniform_int_distribution<int> coord(-7, 7);
    for (int attempt = 0; attempt < 12 && out.irreducible_lines < 3; ++attempt) {
      std::vector<Rational> base;
      std::vector<Rational> dir;
      for (int k = 0; k <= d; ++k) {
        base.emplace_back(coord(rng));
        dir.emplace_back(coord(rng));
      }
      const auto restricted = line_restriction(f, base, dir);
      if (static_cast<int>(restricted.size()) - 1 != degree) continue;
      for (auto p : kPrimes) {
        if (restricted.back() % p == 0) continue;
        if (irreducible_mod_p(restricted, p)) {
          ++out.irreducible_lines;
          break;
        }
      }
    }
    evidence << "; oracle " << (out.matches_oracle ? "match" : "mismatch") << "; irreducible lines " << out.irreducible_lines;
    if (out.matches_oracle && out.jacobian_ok && out.samples_on_locus && out.irreducible_lines >= 3) {
      out.verdict = Verdict::certified;
    } else if (out.jacobian_ok && out.samples_on_locus) {
      out.verdict = Verdict::heuristic;
    }
  } else if (out.jacobian_ok && out.samples_on_locus) {
    out.verdict = Verdict::heuristic;
  }
  out.evidence = evidence.str();
  return out;
}

}  // namespace vermajet
