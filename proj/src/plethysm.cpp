#include "vermajet/plethysm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "vermajet/linalg.hpp"

namespace vermajet {

namespace {

void subsets_rec(int m, int size, int start, WedgeIndex& current, std::vector<WedgeIndex>& out) {
  if (static_cast<int>(current.size()) == m) {
    out.push_back(current);
    return;
  }
  for (int k = start; k <= size; ++k) {
    current.push_back(k);
    subsets_rec(m, size, k + 1, current, out);
    current.pop_back();
  }
}

void multisets_rec(int kinds, int d, int start, SymIndex& current, std::vector<SymIndex>& out) {
  if (static_cast<int>(current.size()) == d) {
    out.push_back(current);
    return;
  }
  for (int k = start; k < kinds; ++k) {
    current.push_back(k);
    multisets_rec(kinds, d, k, current, out);
    current.pop_back();
  }
}

Rational factorial(int k) {
  Rational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<WedgeIndex> wedge_subsets(int m, int size) {
  std::vector<WedgeIndex> out;
  WedgeIndex current;
  subsets_rec(m, size, 1, current, out);
  return out;
}

std::size_t module_dim(int m, int n, int d, std::size_t cap) {
  if (m < 1 || n < 1 || d < 0) throw std::invalid_argument("module_dim: need m, n >= 1 and d >= 0");
  const std::uint64_t wedge_dim = binomial(static_cast<std::uint64_t>(m + n), static_cast<std::uint64_t>(m));
  const std::uint64_t dim = binomial(wedge_dim + static_cast<std::uint64_t>(d) - 1, static_cast<std::uint64_t>(d));
  if (dim > cap) {
    throw SizeCapError("Sym^" + std::to_string(d) + "(wedge^" + std::to_string(m) + " K^" + std::to_string(m + n) +
                       ") has dimension " + std::to_string(dim) + " > cap " + std::to_string(cap));
  }
  return static_cast<std::size_t>(dim);
}

PlethysmModule::PlethysmModule(const LieAlgebraContext& ctx, int d, std::size_t ambient_cap)
    : m_(ctx.m()), n_(ctx.n()), d_(d) {
  if (d < 1) throw std::invalid_argument("PlethysmModule: d must be >= 1");
  module_dim(m_, n_, d_, ambient_cap);
  wedges_ = wedge_subsets(m_, m_ + n_);
  for (std::size_t r = 0; r < wedges_.size(); ++r) wedge_rank_.emplace(wedges_[r], static_cast<int>(r));
  SymIndex current;
  multisets_rec(static_cast<int>(wedges_.size()), d_, 0, current, basis_);
  for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
}

std::size_t PlethysmModule::index_of(const SymIndex& idx) const {
  auto it = index_.find(idx);
  if (it == index_.end()) throw std::out_of_range("PlethysmModule: unknown basis index");
  return it->second;
}

int PlethysmModule::wedge_rank(const WedgeIndex& s) const {
  auto it = wedge_rank_.find(s);
  if (it == wedge_rank_.end()) throw std::out_of_range("PlethysmModule: not an m-subset");
  return it->second;
}

PlethysmVector PlethysmModule::act(const LieElement& x, const PlethysmVector& w) const {
  const int size = m_ + n_;
  if (x.rows() != size || x.cols() != size) throw std::invalid_argument("act: element has the wrong size");

  // Image of every wedge basis vector: x acts as a derivation over the m slots.
  std::vector<std::vector<std::pair<int, Rational>>> wedge_image(wedges_.size());
  for (std::size_t r = 0; r < wedges_.size(); ++r) {
    std::map<int, Rational> image;
    const WedgeIndex& s = wedges_[r];
    for (std::size_t slot = 0; slot < s.size(); ++slot) {
      const int k = s[slot];
      for (int i = 1; i <= size; ++i) {
        const Rational& a = x(i - 1, k - 1);
        if (a.is_zero()) continue;
        if (i != k && std::find(s.begin(), s.end(), i) != s.end()) continue;  // e_i ^ e_i = 0
        WedgeIndex t = s;
        t[slot] = i;
        // Sign of the sorting permutation: i moves past every index strictly between k and i.
        int crossings = 0;
        for (int other : s) {
          if (other != k && ((other > k && other < i) || (other < k && other > i))) ++crossings;
        }
        std::sort(t.begin(), t.end());
        image[wedge_rank_.at(t)] += (crossings % 2 == 0) ? a : Rational(-a);
      }
    }
    for (auto& [rank, c] : image) {
      if (!c.is_zero()) wedge_image[r].emplace_back(rank, c);
    }
  }

  PlethysmVector out;
  for (const auto& [idx, c] : w) {
    std::size_t pos = 0;
    while (pos < idx.size()) {
      const int r = idx[pos];
      std::size_t end = pos;
      while (end < idx.size() && idx[end] == r) ++end;
      const Rational mult(static_cast<int>(end - pos));
      for (const auto& [target, a] : wedge_image[static_cast<std::size_t>(r)]) {
        SymIndex next = idx;
        next[pos] = target;
        std::sort(next.begin(), next.end());
        auto [it, inserted] = out.try_emplace(std::move(next), c * mult * a);
        if (!inserted) it->second += c * mult * a;
      }
      pos = end;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

PlethysmVector PlethysmModule::highest_weight_vector() const {
  return {{SymIndex(static_cast<std::size_t>(d_), 0), Rational(1)}};
}

Weight PlethysmModule::weight_of(const SymIndex& idx) const {
  Weight w{Eigen::VectorXi::Zero(m_ + n_)};
  for (int r : idx) {
    for (int k : wedges_.at(static_cast<std::size_t>(r))) w.coords(k - 1) += 1;
  }
  return w;
}

Weight PlethysmModule::homogeneous_weight(const PlethysmVector& w) const {
  if (w.empty()) throw std::invalid_argument("homogeneous_weight: zero vector");
  const Weight first = weight_of(w.begin()->first);
  for (const auto& [idx, c] : w) {
    if (weight_of(idx).coords != first.coords) throw std::invalid_argument("homogeneous_weight: mixed weights");
  }
  return first;
}

RationalVector PlethysmModule::coordinates(const PlethysmVector& w) const {
  RationalVector x = RationalVector::Zero(static_cast<Eigen::Index>(dim()));
  for (const auto& [idx, c] : w) x(static_cast<Eigen::Index>(index_of(idx))) = c;
  return x;
}

PlethysmVector PlethysmModule::from_coordinates(const RationalVector& x) const {
  if (x.size() != static_cast<Eigen::Index>(dim())) throw std::invalid_argument("from_coordinates: length");
  PlethysmVector w;
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    if (!x(k).is_zero()) w.emplace(basis_[static_cast<std::size_t>(k)], x(k));
  }
  return w;
}

std::string PlethysmModule::str(const SymIndex& idx) const {
  std::ostringstream os;
  std::size_t pos = 0;
  while (pos < idx.size()) {
    std::size_t end = pos;
    while (end < idx.size() && idx[end] == idx[pos]) ++end;
    os << "e";
    for (int k : wedges_.at(static_cast<std::size_t>(idx[pos]))) os << k;
    if (end - pos > 1) os << "^" << (end - pos);
    if (end < idx.size()) os << "*";
    pos = end;
  }
  return os.str();
}

std::string PlethysmModule::str(const PlethysmVector& w) const {
  if (w.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : w) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*" << str(idx);
  }
  return os.str();
}

Rational pair(const PlethysmModule& module, const PlethysmVector& functional, const SectionPolynomial& section) {
  if (section.m != module.m() || section.n != module.n()) {
    throw std::invalid_argument("pair: section lives on a different grassmannian");
  }
  if (section.d != module.d()) throw std::invalid_argument("pair: degree mismatch");
  Rational total = 0;
  for (const auto& [idx, c] : section.plucker) {
    auto it = functional.find(idx);
    if (it == functional.end()) continue;
    Rational weight = 1;
    std::size_t pos = 0;
    while (pos < idx.size()) {
      std::size_t end = pos;
      while (end < idx.size() && idx[end] == idx[pos]) ++end;
      weight *= factorial(static_cast<int>(end - pos));
      pos = end;
    }
    total += it->second * c * weight;
  }
  return total;
}

void axpy(PlethysmVector& y, const Rational& a, const PlethysmVector& x) {
  if (a.is_zero()) return;
  for (const auto& [idx, c] : x) {
    auto [it, inserted] = y.try_emplace(idx, a * c);
    if (!inserted) {
      it->second += a * c;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

PlethysmVector scaled(const PlethysmVector& x, const Rational& a) {
  PlethysmVector out;
  axpy(out, a, x);
  return out;
}

PlethysmVector random_vector(const PlethysmModule& module, std::mt19937_64& rng, std::size_t terms) {
  std::uniform_int_distribution<std::size_t> pick(0, module.dim() - 1);
  PlethysmVector w;
  for (std::size_t k = 0; k < terms; ++k) {
    const Rational c = random_rational(rng);
    if (!c.is_zero()) w[module.basis()[pick(rng)]] = c;
  }
  return w;
}

ActionLawReport action_law_check(const LieAlgebraContext& ctx, const PlethysmModule& module, std::size_t vectors,
                                 std::size_t pairs_per_vector, std::uint64_t seed) {
  const auto& b = ctx.basis();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
  ActionLawReport out;
  out.holds = true;
  auto check = [&](const LieElement& x, const LieElement& y, const PlethysmVector& w) {
    ++out.pairs_checked;
    PlethysmVector rhs = module.act(x, module.act(y, w));
    axpy(rhs, Rational(-1), module.act(y, module.act(x, w)));
    if (module.act(bracket(x, y), w) != rhs) out.holds = false;
  };
  for (std::size_t v = 0; v < vectors; ++v) {
    const PlethysmVector w = random_vector(module, rng);
    ++out.vectors;
    if (pairs_per_vector == 0) {
      for (const auto& x : b) {
        for (const auto& y : b) check(x, y, w);
      }
    } else {
      for (std::size_t k = 0; k < pairs_per_vector; ++k) check(b[pick(rng)], b[pick(rng)], w);
    }
  }
  return out;
}

}  // namespace vermajet
