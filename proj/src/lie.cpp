#include "vermajet/lie.hpp"

#include <stdexcept>

#include "vermajet/linalg.hpp"

namespace vermajet {

std::string to_string(SubalgebraTag tag) {
  switch (tag) {
    case SubalgebraTag::g_minus: return "g_minus";
    case SubalgebraTag::h: return "h";
    case SubalgebraTag::g_plus: return "g_plus";
    case SubalgebraTag::p: return "p";
    case SubalgebraTag::n: return "n";
    case SubalgebraTag::all: return "all";
  }
  return "?";
}

SubalgebraTag subalgebra_from_string(const std::string& name) {
  for (auto tag : {SubalgebraTag::g_minus, SubalgebraTag::h, SubalgebraTag::g_plus, SubalgebraTag::p,
                   SubalgebraTag::n, SubalgebraTag::all}) {
    if (to_string(tag) == name) return tag;
  }
  throw std::invalid_argument("unknown subalgebra: " + name);
}

bool operator==(const Weight& a, const Weight& b) {
  if (a.coords.size() != b.coords.size()) return false;
  if (a.coords.size() == 0) return true;
  const Eigen::VectorXi diff = a.coords - b.coords;
  return (diff.array() == diff(0)).all();
}

std::string BasisLabel::str() const {
  if (kind == Kind::cartan) return "H" + std::to_string(i);
  return "E" + std::to_string(i) + "," + std::to_string(j);
}

LieAlgebraContext::LieAlgebraContext(int m, int n) : m_(m), n_(n) {
  if (m < 1 || n < 1) throw std::invalid_argument("sl(m+n) needs m >= 1 and n >= 1");
  const int s = m + n;
  for (int i = 1; i <= s; ++i) {
    for (int j = 1; j <= s; ++j) {
      if (i == j) continue;
      basis_.push_back(E(i, j));
      labels_.push_back({BasisLabel::Kind::root, i, j});
    }
  }
  for (int k = 1; k < s; ++k) {
    basis_.push_back(H(k));
    labels_.push_back({BasisLabel::Kind::cartan, k, 0});
  }
}

LieElement LieAlgebraContext::E(int i, int j) const {
  if (i < 1 || j < 1 || i > size() || j > size()) throw std::out_of_range("E(i, j) index out of range");
  LieElement x = zero();
  x(i - 1, j - 1) = 1;
  return x;
}

LieElement LieAlgebraContext::H(int k) const {
  if (k < 1 || k >= size()) throw std::out_of_range("H(k) index out of range");
  LieElement x = zero();
  x(k - 1, k - 1) = 1;
  x(k, k) = -1;
  return x;
}

bool LieAlgebraContext::contains(SubalgebraTag tag, const LieElement& x) const {
  if (x.rows() != size() || x.cols() != size()) return false;
  if (!x.trace().is_zero()) return false;
  for (int r = 0; r < size(); ++r) {
    for (int c = 0; c < size(); ++c) {
      if (x(r, c).is_zero()) continue;
      const bool lower_left = r >= m_ && c < m_;
      switch (tag) {
        case SubalgebraTag::all: break;
        case SubalgebraTag::g_minus:
          if (r <= c) return false;
          break;
        case SubalgebraTag::g_plus:
          if (r >= c) return false;
          break;
        case SubalgebraTag::h:
          if (r != c) return false;
          break;
        case SubalgebraTag::p:
          if (lower_left) return false;
          break;
        case SubalgebraTag::n:
          if (!lower_left) return false;
          break;
      }
    }
  }
  return true;
}

std::vector<std::size_t> LieAlgebraContext::indices(SubalgebraTag tag) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (contains(tag, basis_[k])) out.push_back(k);
  }
  return out;
}

Weight LieAlgebraContext::root_of(std::size_t basis_index) const {
  Weight w{Eigen::VectorXi::Zero(size())};
  const auto& label = labels_.at(basis_index);
  if (label.kind == BasisLabel::Kind::root) {
    w.coords(label.i - 1) += 1;
    w.coords(label.j - 1) -= 1;
  }
  return w;
}

LieAlgebraContext build_context(int m, int n) { return LieAlgebraContext(m, n); }

LieElement bracket(const LieElement& x, const LieElement& y) { return x * y - y * x; }

std::vector<SimpleRoot> simple_roots(const LieAlgebraContext& ctx) {
  std::vector<SimpleRoot> roots;
  for (int i = 1; i < ctx.size(); ++i) {
    Weight beta{Eigen::VectorXi::Zero(ctx.size())};
    beta.coords(i - 1) = 1;
    beta.coords(i) = -1;
    roots.push_back({i, beta, ctx.E(i + 1, i), ctx.H(i)});
  }
  return roots;
}

Rational rho_character(const LieAlgebraContext& ctx, int d, const LieElement& y) {
  if (!ctx.contains(SubalgebraTag::p, y)) {
    throw std::invalid_argument("rho_character: element is not in the parabolic subalgebra p");
  }
  return Rational(d) * y.topLeftCorner(ctx.m(), ctx.m()).trace();
}

Weight highest_weight(const LieAlgebraContext& ctx, int d) {
  if (d < 1) throw std::invalid_argument("highest_weight: d must be >= 1");
  Weight w{Eigen::VectorXi::Zero(ctx.size())};
  w.coords.head(ctx.m()).setConstant(d);
  return w;
}

Rational evaluate_weight(const Weight& w, const LieElement& diagonal) {
  Rational total = 0;
  for (Eigen::Index k = 0; k < w.coords.size(); ++k) total += Rational(w.coords(k)) * diagonal(k, k);
  return total;
}

JacobiReport jacobi_check(const LieAlgebraContext& ctx, std::size_t samples, std::uint64_t seed) {
  const auto& b = ctx.basis();
  JacobiReport out;
  out.holds = true;
  auto check = [&](const LieElement& x, const LieElement& y, const LieElement& z) {
    ++out.triples_checked;
    const LieElement sum = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    if (!all_zero(sum)) out.holds = false;
  };
  if (samples == 0) {
    for (const auto& x : b) {
      for (const auto& y : b) {
        for (const auto& z : b) check(x, y, z);
      }
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
  for (std::size_t k = 0; k < samples; ++k) check(b[pick(rng)], b[pick(rng)], b[pick(rng)]);
  return out;
}

}  // namespace vermajet
