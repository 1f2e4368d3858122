#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "tautilt/algebra.hpp"
#include "tautilt/matrix.hpp"

namespace tautilt {

struct MinimalPresentation;
class Representation;

namespace detail {
struct RepCache {
  std::once_flag paths_once;
  std::vector<Matrix> path_actions;
  std::once_flag sparse_once;
  std::vector<std::vector<std::tuple<int, int, Rational>>> sparse_paths;
  std::once_flag presentation_once;
  std::shared_ptr<const MinimalPresentation> presentation;
  std::once_flag tau_once;
  std::shared_ptr<const Representation> tau;
};
}  // namespace detail

/// A finite-dimensional right module over an Algebra, given as a quiver
/// representation: one vector space per vertex and, for every arrow
/// a: s -> t, a matrix of shape dim(t) x dim(s).
///
/// The algebra must outlive the representation. Values are immutable; lazily
/// computed data (path actions, minimal presentation) is shared between
/// copies.
class Representation {
 public:
  Representation() = default;
  Representation(const Algebra& alg, std::vector<int> dims, std::vector<Matrix> actions)
      : alg_(&alg), dims_(std::move(dims)), actions_(std::move(actions)), cache_(std::make_shared<detail::RepCache>()) {
    if (static_cast<int>(dims_.size()) != alg.num_vertices())
      throw std::invalid_argument("representation has wrong number of vertices");
    if (static_cast<int>(actions_.size()) != alg.num_arrows())
      throw std::invalid_argument("representation has wrong number of arrow matrices");
    for (int a = 0; a < alg.num_arrows(); ++a) {
      const auto& ar = alg.arrow(a);
      if (actions_[a].rows() != static_cast<std::size_t>(dims_[ar.target]) ||
          actions_[a].cols() != static_cast<std::size_t>(dims_[ar.source]))
        throw std::invalid_argument("arrow matrix for '" + ar.name + "' has the wrong shape");
    }
  }

  static Representation zero(const Algebra& alg) {
    std::vector<Matrix> acts;
    for (int a = 0; a < alg.num_arrows(); ++a) acts.emplace_back(0, 0);
    return {alg, std::vector<int>(alg.num_vertices(), 0), std::move(acts)};
  }

  const Algebra& algebra() const { return *alg_; }
  int num_vertices() const { return static_cast<int>(dims_.size()); }
  int dim(int v) const { return dims_[v]; }
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const {
    int s = 0;
    for (int d : dims_) s += d;
    return s;
  }
  bool is_zero() const { return total_dim() == 0; }
  const Matrix& action(int a) const { return actions_[a]; }
  const std::vector<Matrix>& actions() const { return actions_; }

  /// Action of the basis path b: M_{source(b)} -> M_{target(b)}.
  const Matrix& path_action(int b) const {
    std::call_once(cache_->paths_once, [this] {
      const auto& alg = *alg_;
      cache_->path_actions.resize(alg.dim());
      for (std::size_t i = 0; i < alg.dim(); ++i) {
        const auto& p = alg.basis(static_cast<int>(i));
        if (p.word.empty()) {
          cache_->path_actions[i] = Matrix::identity(dims_[p.source]);
          continue;
        }
        Matrix m = actions_[p.word[0]];
        for (std::size_t k = 1; k < p.word.size(); ++k) m = actions_[p.word[k]] * m;
        cache_->path_actions[i] = std::move(m);
      }
    });
    return cache_->path_actions[b];
  }

  /// Nonzero entries (row, column, value) of path_action(b), row-major.
  const std::vector<std::tuple<int, int, Rational>>& sparse_path_action(int b) const {
    std::call_once(cache_->sparse_once, [this] {
      cache_->sparse_paths.resize(alg_->dim());
      for (std::size_t i = 0; i < alg_->dim(); ++i) {
        const Matrix& m = path_action(static_cast<int>(i));
        auto& out = cache_->sparse_paths[i];
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t c = 0; c < m.cols(); ++c)
            if (sgn(m(r, c)) != 0) out.emplace_back(static_cast<int>(r), static_cast<int>(c), m(r, c));
      }
    });
    return cache_->sparse_paths[b];
  }

  /// Action of a linear combination of basis paths from s to t.
  Matrix element_action(const SparseVec& x, int s, int t) const {
    Matrix m(dims_[t], dims_[s]);
    for (const auto& [b, c] : x) m = m + c * path_action(b);
    return m;
  }

  bool satisfies_relations() const {
    for (const auto& rel : alg_->relations()) {
      const auto& q = alg_->quiver();
      int s = q.arrows[rel.terms.front().word.front()].source;
      int t = q.arrows[rel.terms.front().word.back()].target;
      Matrix sum(dims_[t], dims_[s]);
      for (const auto& term : rel.terms) {
        Matrix m = actions_[term.word[0]];
        for (std::size_t k = 1; k < term.word.size(); ++k) m = actions_[term.word[k]] * m;
        sum = sum + term.coef * m;
      }
      if (!sum.is_zero()) return false;
    }
    return true;
  }

  detail::RepCache& cache() const { return *cache_; }

 private:
  const Algebra* alg_ = nullptr;
  std::vector<int> dims_;
  std::vector<Matrix> actions_;
  std::shared_ptr<detail::RepCache> cache_;
};

/// A morphism of representations, one block per vertex
/// (block v has shape dim_target(v) x dim_source(v)).
struct ModuleMap {
  std::vector<Matrix> blocks;

  static ModuleMap zero(const Representation& src, const Representation& tgt) {
    ModuleMap f;
    for (int v = 0; v < src.num_vertices(); ++v) f.blocks.emplace_back(tgt.dim(v), src.dim(v));
    return f;
  }

  static ModuleMap identity(const Representation& m) {
    ModuleMap f;
    for (int v = 0; v < m.num_vertices(); ++v) f.blocks.push_back(Matrix::identity(m.dim(v)));
    return f;
  }

  bool is_zero() const {
    for (const auto& b : blocks)
      if (!b.is_zero()) return false;
    return true;
  }

  /// True iff every block is invertible.
  bool is_isomorphism() const {
    for (const auto& b : blocks)
      if (!is_invertible(b)) return false;
    return true;
  }

  bool intertwines(const Representation& src, const Representation& tgt) const {
    const auto& alg = src.algebra();
    for (int a = 0; a < alg.num_arrows(); ++a) {
      const auto& ar = alg.arrow(a);
      if (!(tgt.action(a) * blocks[ar.source] == blocks[ar.target] * src.action(a))) return false;
    }
    return true;
  }

  /// Concatenation of all blocks, row-major, block by block.
  std::vector<Rational> flatten() const {
    std::vector<Rational> v;
    for (const auto& b : blocks)
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) v.push_back(b(i, j));
    return v;
  }

  friend ModuleMap operator*(const ModuleMap& g, const ModuleMap& f) {
    ModuleMap h;
    for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(g.blocks[v] * f.blocks[v]);
    return h;
  }
  friend ModuleMap operator+(const ModuleMap& f, const ModuleMap& g) {
    ModuleMap h;
    for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(f.blocks[v] + g.blocks[v]);
    return h;
  }
  friend ModuleMap operator*(const Rational& s, const ModuleMap& f) {
    ModuleMap h;
    for (const auto& b : f.blocks) h.blocks.push_back(s * b);
    return h;
  }
};

inline ModuleMap linear_combination(std::span<const ModuleMap> maps, std::span<const Rational> coeffs,
                                    const Representation& src, const Representation& tgt) {
  ModuleMap f = ModuleMap::zero(src, tgt);
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    f = f + coeffs[k] * maps[k];
  }
  return f;
}

inline void check_vertex(const Algebra& alg, int i) {
  if (i < 0 || i >= alg.num_vertices())
    throw std::out_of_range("vertex index " + std::to_string(i + 1) + " out of range");
}

/// Matrix of right multiplication by the element x in e_s B e_t, restricted
/// to paths from `from` to s: columns indexed by paths(from, s), rows by
/// paths(from, t).
inline Matrix right_multiplication(const Algebra& alg, int from, int s, int t, const SparseVec& x) {
  const auto& cols = alg.paths(from, s);
  const auto& rows = alg.paths(from, t);
  Matrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [xb, xc] : x)
      for (const auto& [b, coef] : alg.product(cols[c], xb)) m(alg.local_index(b), c) += xc * coef;
  return m;
}

/// Indecomposable projective P(i) = e_i A: at vertex j the paths from i to j.
inline Representation projective(const Algebra& alg, int i) {
  check_vertex(alg, i);
  std::vector<int> dims(alg.num_vertices());
  for (int j = 0; j < alg.num_vertices(); ++j) dims[j] = static_cast<int>(alg.paths(i, j).size());
  std::vector<Matrix> acts;
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const auto& ar = alg.arrow(a);
    acts.push_back(right_multiplication(alg, i, ar.source, ar.target, {{alg.arrow_element(a), Rational(1)}}));
  }
  return {alg, std::move(dims), std::move(acts)};
}

inline Representation simple(const Algebra& alg, int i) {
  check_vertex(alg, i);
  std::vector<int> dims(alg.num_vertices(), 0);
  dims[i] = 1;
  std::vector<Matrix> acts;
  for (int a = 0; a < alg.num_arrows(); ++a) acts.emplace_back(dims[alg.arrow(a).target], dims[alg.arrow(a).source]);
  return {alg, std::move(dims), std::move(acts)};
}

/// Matrix at vertex v of the map D(A e_i) -> D(A e_j) dual to left
/// multiplication by x in e_j A e_i: rows paths(v, j), columns paths(v, i),
/// entry (c, b) = coefficient of b in c*x.
inline Matrix dual_left_multiplication(const Algebra& alg, int v, int i, int j, const SparseVec& x) {
  const auto& rows = alg.paths(v, j);
  const auto& cols = alg.paths(v, i);
  Matrix m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [xb, xc] : x)
      for (const auto& [b, coef] : alg.product(rows[r], xb)) m(r, alg.local_index(b)) += xc * coef;
  return m;
}

/// Indecomposable injective I(i) = D(A e_i): at vertex j the dual of the
/// paths from j to i.
inline Representation injective(const Algebra& alg, int i) {
  check_vertex(alg, i);
  std::vector<int> dims(alg.num_vertices());
  for (int j = 0; j < alg.num_vertices(); ++j) dims[j] = static_cast<int>(alg.paths(j, i).size());
  std::vector<Matrix> acts;
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const auto& ar = alg.arrow(a);
    // (phi . a)(p) = phi(a p) for p in paths(target(a), i)
    const auto& rows = alg.paths(ar.target, i);
    const auto& cols = alg.paths(ar.source, i);
    Matrix m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [b, coef] : alg.product(alg.arrow_element(a), rows[r])) m(r, alg.local_index(b)) += coef;
    acts.push_back(std::move(m));
  }
  return {alg, std::move(dims), std::move(acts)};
}

inline Representation direct_sum(std::span<const Representation> parts) {
  if (parts.empty()) throw std::invalid_argument("direct sum of no modules needs an algebra");
  const auto& alg = parts[0].algebra();
  std::vector<int> dims(alg.num_vertices(), 0);
  for (const auto& p : parts)
    for (int v = 0; v < alg.num_vertices(); ++v) dims[v] += p.dim(v);
  std::vector<Matrix> acts;
  for (int a = 0; a < alg.num_arrows(); ++a) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.action(a));
    acts.push_back(block_diag(blocks));
  }
  return {alg, std::move(dims), std::move(acts)};
}

inline Representation direct_sum(const Representation& a, const Representation& b) {
  std::vector<Representation> parts{a, b};
  return direct_sum(parts);
}

/// Direct sum of maps f_k : M_k -> N_k as a block-diagonal map.
inline ModuleMap direct_sum(std::span<const ModuleMap> maps) {
  ModuleMap f;
  if (maps.empty()) return f;
  for (std::size_t v = 0; v < maps[0].blocks.size(); ++v) {
    std::vector<Matrix> bl;
    for (const auto& m : maps) bl.push_back(m.blocks[v]);
    f.blocks.push_back(block_diag(bl));
  }
  return f;
}

}  // namespace tautilt
