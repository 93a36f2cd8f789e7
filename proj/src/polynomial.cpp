#include "vermajet/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vermajet {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw std::out_of_range("Polynomial::variable index");
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(var)] = 1;
  Polynomial p(nvars);
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

int Polynomial::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("Polynomial: exponent length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("Polynomial: variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("Polynomial: variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("Polynomial: variable count mismatch");
  Polynomial out(a.nvars_);
  Exponent e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("Polynomial::evaluate: arity");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (int r = 0; r < e[k]; ++r) term *= point[k];
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& substitutes) const {
  if (static_cast<int>(substitutes.size()) != nvars_) throw std::invalid_argument("Polynomial::compose: arity");
  const int target_vars = substitutes.empty() ? 0 : substitutes.front().nvars();
  // powers[k][r] = substitutes[k]^r, filled lazily.
  std::vector<std::vector<Polynomial>> powers(substitutes.size());
  auto power = [&](std::size_t k, int r) -> const Polynomial& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(constant(target_vars, 1));
    while (static_cast<int>(cache.size()) <= r) cache.push_back(cache.back() * substitutes[k]);
    return cache[static_cast<std::size_t>(r)];
  };
  Polynomial out(target_vars);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(target_vars, c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] > 0) term = term * power(k, e[k]);
    }
    out += term;
  }
  return out;
}

Polynomial Polynomial::shift(const std::vector<Rational>& offset) const {
  if (static_cast<int>(offset.size()) != nvars_) throw std::invalid_argument("Polynomial::shift: arity");
  std::vector<Polynomial> subs;
  subs.reserve(offset.size());
  for (int k = 0; k < nvars_; ++k) subs.push_back(variable(nvars_, k) + constant(nvars_, offset[static_cast<std::size_t>(k)]));
  return compose(subs);
}

Polynomial Polynomial::truncate(int max_degree) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (std::accumulate(e.begin(), e.end(), 0) <= max_degree) out.terms_.emplace(e, c);
  }
  return out;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw std::out_of_range("Polynomial::derivative index");
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    Exponent d = e;
    d[static_cast<std::size_t>(var)] -= 1;
    out.add_term(d, c * k);
  }
  return out;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest terms first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational coeff = c;
    if (first) {
      if (coeff < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    const bool constant_term = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (coeff != 1 || constant_term) {
      os << coeff.str();
      if (!constant_term) os << "*";
    }
    bool first_factor = true;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << (k < names.size() ? names[k] : "x" + std::to_string(k));
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return os.str();
}

namespace {

void exponents_of_degree(int nvars, int degree, std::size_t pos, Exponent& current, std::vector<Exponent>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = degree;
    out.push_back(current);
    return;
  }
  for (int k = degree; k >= 0; --k) {
    current[pos] = k;
    exponents_of_degree(nvars, degree - k, pos + 1, current, out);
  }
  current[pos] = 0;
}

}  // namespace

std::vector<Exponent> graded_exponents(int nvars, int max_degree) {
  std::vector<Exponent> out;
  if (nvars == 0) {
    if (max_degree >= 0) out.emplace_back();
    return out;
  }
  Exponent current(static_cast<std::size_t>(nvars), 0);
  for (int deg = 0; deg <= max_degree; ++deg) exponents_of_degree(nvars, deg, 0, current, out);
  return out;
}

}  // namespace vermajet
