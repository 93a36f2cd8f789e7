#include "vermajet/filtration.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace vermajet {

namespace {

void require_degree(int d) {
  if (d < 1) throw std::invalid_argument("degree d must be >= 1");
}

std::vector<LieElement> elements(const LieAlgebraContext& ctx, SubalgebraTag tag) {
  std::vector<LieElement> out;
  for (auto k : ctx.indices(tag)) out.push_back(ctx.basis()[k]);
  return out;
}

// Reduced basis of span(vectors), expressed in the local coordinates given by
// the union of their supports (sorted like the global basis).
std::vector<PlethysmVector> reduce_span(const std::vector<PlethysmVector>& vectors) {
  std::set<SymIndex> support;
  for (const auto& w : vectors) {
    for (const auto& [idx, c] : w) support.insert(idx);
  }
  if (support.empty()) return {};
  const std::vector<SymIndex> columns(support.begin(), support.end());
  std::map<SymIndex, Eigen::Index> column_of;
  for (std::size_t k = 0; k < columns.size(); ++k) column_of.emplace(columns[k], static_cast<Eigen::Index>(k));

  RationalMatrix m = RationalMatrix::Zero(static_cast<Eigen::Index>(vectors.size()),
                                          static_cast<Eigen::Index>(columns.size()));
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    for (const auto& [idx, c] : vectors[r]) m(static_cast<Eigen::Index>(r), column_of.at(idx)) = c;
  }
  const auto reduced = rref(m);
  std::vector<PlethysmVector> out;
  for (Eigen::Index r = 0; r < reduced.rank; ++r) {
    PlethysmVector w;
    for (Eigen::Index j = 0; j < reduced.reduced.cols(); ++j) {
      if (!reduced.reduced(r, j).is_zero()) w.emplace(columns[static_cast<std::size_t>(j)], reduced.reduced(r, j));
    }
    out.push_back(std::move(w));
  }
  return out;
}

RationalMatrix rows_to_matrix(const PlethysmModule& module, const std::vector<PlethysmVector>& rows) {
  RationalMatrix m = RationalMatrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(module.dim()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [idx, c] : rows[r]) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(module.index_of(idx))) = c;
  }
  return m;
}

}  // namespace

std::vector<std::size_t> FiltrationResult::dims() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels) out.push_back(level.dim);
  return out;
}

FiltrationResult canonical_filtration(int m, int n, int d, int l_max, const Caps& caps) {
  require_degree(d);
  if (l_max < 0) throw std::invalid_argument("canonical_filtration: l_max must be >= 0");
  const auto ctx = build_context(m, n);
  const PlethysmModule module(ctx, d, caps.ambient);

  FiltrationResult result;
  result.m = m;
  result.n = n;
  result.d = d;
  result.full_dim = weyl_dim_oracle(m, n, d);

  // Weight spaces of F_l; every generator is a weight vector and every basis
  // element of g is weight homogeneous, so F_l splits by weight.
  std::map<std::vector<int>, std::vector<PlethysmVector>> blocks;
  const PlethysmVector v = module.highest_weight_vector();
  blocks[module.homogeneous_weight(v).raw()] = {v};

  for (int level = 0; level <= l_max; ++level) {
    if (level > 0) {
      auto candidates = blocks;
      for (const auto& [weight, vectors] : blocks) {
        for (const auto& u : vectors) {
          for (const auto& x : ctx.basis()) {
            PlethysmVector y = module.act(x, u);
            if (!y.empty()) candidates[module.homogeneous_weight(y).raw()].push_back(std::move(y));
          }
        }
      }
      blocks.clear();
      for (auto& [weight, vectors] : candidates) blocks[weight] = reduce_span(vectors);
    }
    FiltrationLevel out;
    out.level = level;
    for (const auto& [weight, vectors] : blocks) {
      out.weights[weight] = vectors.size();
      out.dim += vectors.size();
      out.basis.insert(out.basis.end(), vectors.begin(), vectors.end());
    }
    out.saturated = out.dim == result.full_dim;
    result.levels.push_back(std::move(out));
  }
  return result;
}

MonomialImages apply_pbw_monomials(const PlethysmModule& module, const std::vector<LieElement>& generators,
                                   const PlethysmVector& start, int l, std::size_t monomial_cap) {
  if (l < 0) throw std::invalid_argument("PBW degree must be >= 0");
  const auto k = static_cast<std::uint64_t>(generators.size());
  const std::uint64_t count = binomial(k + static_cast<std::uint64_t>(l), k);
  if (count > monomial_cap) {
    throw SizeCapError(std::to_string(count) + " PBW monomials exceed the cap " + std::to_string(monomial_cap));
  }
  MonomialImages out;
  out.monomials = graded_exponents(static_cast<int>(generators.size()), l);
  std::map<PbwMonomial, std::size_t> position;
  out.images.reserve(out.monomials.size());
  for (std::size_t r = 0; r < out.monomials.size(); ++r) {
    const PbwMonomial& a = out.monomials[r];
    auto first = std::find_if(a.begin(), a.end(), [](int e) { return e > 0; });
    if (first == a.end()) {
      out.images.push_back(start);
    } else {
      // z^a = z_j z^(a - e_j) with z_j the leftmost factor.
      PbwMonomial rest = a;
      const auto j = static_cast<std::size_t>(first - a.begin());
      rest[j] -= 1;
      const PlethysmVector& inner = out.images[position.at(rest)];
      out.images.push_back(inner.empty() ? PlethysmVector{} : module.act(generators[j], inner));
    }
    position.emplace(a, r);
  }
  return out;
}

PbwFiltration pbw_filtration(int m, int n, int d, int l, const Caps& caps) {
  require_degree(d);
  if (l < 1) throw std::invalid_argument("pbw_filtration: l must be >= 1");
  const auto ctx = build_context(m, n);
  const PlethysmModule module(ctx, d, caps.ambient);
  auto images = apply_pbw_monomials(module, elements(ctx, SubalgebraTag::n), module.highest_weight_vector(), l,
                                    caps.monomials);
  PbwFiltration out;
  out.monomials = std::move(images.monomials);
  out.vectors = std::move(images.images);
  out.rank = static_cast<std::size_t>(rank(rows_to_matrix(module, out.vectors)));
  out.independent = out.rank == out.vectors.size();
  return out;
}

SparseMatrix evaluation_matrix(int m, int n, int d, int l, SubalgebraTag subalgebra, const Caps& caps) {
  require_degree(d);
  const auto ctx = build_context(m, n);
  const PlethysmModule module(ctx, d, caps.ambient);
  const auto images = apply_pbw_monomials(module, elements(ctx, subalgebra), module.highest_weight_vector(), l,
                                          caps.monomials);
  return to_sparse(rows_to_matrix(module, images.images));
}

std::size_t annihilator_dim(int m, int n, int d, int l, const Caps& caps) {
  const SparseMatrix eval = evaluation_matrix(m, n, d, l, SubalgebraTag::all, caps);
  // Left kernel: combinations of PBW monomials sending v to zero.
  const RationalMatrix transposed = RationalMatrix(eval.toDense()).transpose();
  return kernel_basis(transposed).size();
}

SplitReport verma_split_check(int m, int n, int d, int l, const Caps& caps) {
  require_degree(d);
  if (l < 1 || l >= d) throw std::invalid_argument("verma_split_check requires 1 <= l < d");
  const SparseMatrix eval_g = evaluation_matrix(m, n, d, l, SubalgebraTag::all, caps);
  const SparseMatrix eval_n = evaluation_matrix(m, n, d, l, SubalgebraTag::n, caps);
  SplitReport out;
  out.dim_Ul_g = static_cast<std::uint64_t>(eval_g.rows());
  out.dim_Ul_n = static_cast<std::uint64_t>(eval_n.rows());
  out.rank_g = static_cast<std::size_t>(rank(eval_g));
  out.rank_n = static_cast<std::size_t>(rank(eval_n));
  out.dim_ann = kernel_basis(RationalMatrix(eval_g.toDense()).transpose()).size();
  const std::uint64_t mn = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n);
  out.split_holds = out.rank_n == out.dim_Ul_n && out.rank_g == out.dim_Ul_n &&
                    out.dim_Ul_n == binomial(mn + static_cast<std::uint64_t>(l), mn) &&
                    out.dim_Ul_g == out.dim_Ul_n + out.dim_ann;
  return out;
}

std::vector<SerreRecord> serre_power_check(int m, int n, int d, const Caps& caps) {
  require_degree(d);
  const auto ctx = build_context(m, n);
  const PlethysmModule module(ctx, d, caps.ambient);
  const PlethysmVector v = module.highest_weight_vector();
  const Weight lambda = highest_weight(ctx, d);
  std::vector<SerreRecord> out;
  for (const auto& root : simple_roots(ctx)) {
    SerreRecord rec;
    rec.root = root.index;
    const Rational expected = evaluate_weight(lambda, root.coroot) + 1;
    rec.expected_power = static_cast<int>(expected.convert_to<long>());
    PlethysmVector w = v;
    int k = 0;
    while (!w.empty() && k <= rec.expected_power) {
      w = module.act(root.lowering, w);
      ++k;
    }
    rec.nilpotency = w.empty() ? k : k + 1;
    rec.ok = rec.nilpotency == rec.expected_power;
    out.push_back(rec);
  }
  return out;
}

CharIdealReport char_ideal_generator_check(int m, int n, int d, int l, const Caps& caps) {
  require_degree(d);
  if (l < 1) throw std::invalid_argument("char_ideal_generator_check: l must be >= 1");
  const auto ctx = build_context(m, n);
  const PlethysmModule module(ctx, d, caps.ambient);
  const PlethysmVector v = module.highest_weight_vector();
  const auto g = elements(ctx, SubalgebraTag::all);

  CharIdealReport out;
  out.holds = true;
  for (auto k : ctx.indices(SubalgebraTag::p)) {
    const LieElement& y = ctx.basis()[k];
    PlethysmVector w = module.act(y, v);
    axpy(w, -rho_character(ctx, d, y), v);
    const auto images = apply_pbw_monomials(module, g, w, l - 1, caps.monomials);
    out.generators_checked += images.images.size();
    for (const auto& image : images.images) {
      if (!image.empty()) out.holds = false;
    }
  }
  return out;
}

std::uint64_t weyl_dim_oracle(int m, int n, int d) {
  if (m < 1 || n < 1 || d < 0) throw std::invalid_argument("weyl_dim_oracle: need m, n >= 1, d >= 0");
  Rational product = 1;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) product *= Rational(d + i + j - 1, i + j - 1);
  }
  if (denominator(product) != 1) throw std::logic_error("hook-content product is not an integer");
  return numerator(product).convert_to<std::uint64_t>();
}

std::size_t multi_filtration(int m, int n, const std::vector<int>& degrees, int l, const Caps& caps) {
  if (degrees.empty()) throw std::invalid_argument("multi_filtration: no summands");
  const int min_degree = *std::min_element(degrees.begin(), degrees.end());
  if (min_degree < 1) throw std::invalid_argument("multi_filtration: degrees must be >= 1");
  if (l < 1 || l > min_degree) throw std::invalid_argument("multi_filtration requires 1 <= l <= min(degrees)");
  const auto ctx = build_context(m, n);
  std::vector<PlethysmModule> modules;
  std::vector<Eigen::Index> offsets;
  Eigen::Index total = 0;
  for (int d : degrees) {
    modules.emplace_back(ctx, d, caps.ambient);
    offsets.push_back(total);
    total += static_cast<Eigen::Index>(modules.back().dim());
  }
  using SumVector = std::vector<PlethysmVector>;
  auto flatten = [&](const SumVector& w) {
    RationalVector x = RationalVector::Zero(total);
    for (std::size_t s = 0; s < w.size(); ++s) x.segment(offsets[s], static_cast<Eigen::Index>(modules[s].dim())) = modules[s].coordinates(w[s]);
    return x;
  };
  auto unflatten = [&](const RationalVector& x) {
    SumVector w(modules.size());
    for (std::size_t s = 0; s < w.size(); ++s) {
      w[s] = modules[s].from_coordinates(x.segment(offsets[s], static_cast<Eigen::Index>(modules[s].dim())));
    }
    return w;
  };

  // F_0 = W = span of the highest weight vectors; F_l = F_{l-1} + g F_{l-1}.
  std::vector<RationalVector> basis;
  for (std::size_t s = 0; s < modules.size(); ++s) {
    SumVector w(modules.size());
    w[s] = modules[s].highest_weight_vector();
    basis.push_back(flatten(w));
  }
  for (int level = 1; level <= l; ++level) {
    std::vector<RationalVector> candidates = basis;
    for (const auto& x : basis) {
      const SumVector w = unflatten(x);
      for (const auto& gen : ctx.basis()) {
        SumVector image(modules.size());
        for (std::size_t s = 0; s < modules.size(); ++s) image[s] = modules[s].act(gen, w[s]);
        candidates.push_back(flatten(image));
      }
    }
    const auto reduced = rref(stack_rows(candidates, total));
    basis.clear();
    for (Eigen::Index r = 0; r < reduced.rank; ++r) basis.push_back(reduced.reduced.row(r).transpose());
  }
  return basis.size();
}

}  // namespace vermajet
