#pragma once

#include <memory>
#include <vector>

#include "tautilt/matrix.hpp"
#include "tautilt/module_ops.hpp"
#include "tautilt/representation.hpp"

namespace tautilt {

/// Minimal projective presentation P1 -> P0 -> M -> 0.
///
/// P0 = sum over generators g of P(top_vertex[g]), the generator g mapping to
/// the standard vector e_{top_index[g]} of M at its vertex. P1 = sum over
/// syzygy generators h of P(syzygy_vertex[h]); relations[h][g] is the element
/// of e_{top_vertex[g]} A e_{syzygy_vertex[h]} by which the h-th summand maps
/// into the g-th one, so that sum_g m_g * relations[h][g] = 0 in M.
struct MinimalPresentation {
  std::vector<int> top_vertex;
  std::vector<int> top_index;
  std::vector<int> syzygy_vertex;
  std::vector<std::vector<SparseVec>> relations;
  // Per vertex j: coordinates of P0 at j are the concatenation over g of
  // paths(top_vertex[g], j); offset[g][j] locates the block of g.
  std::vector<std::vector<int>> offset;
  std::vector<Matrix> cover;    // per vertex: M_j x (P0)_j
  std::vector<Matrix> section;  // per vertex: (P0)_j x M_j, cover * section = 1

  IntVector p0_multiplicity(int n) const {
    IntVector v(n, 0);
    for (int t : top_vertex) ++v[t];
    return v;
  }
  IntVector p1_multiplicity(int n) const {
    IntVector v(n, 0);
    for (int t : syzygy_vertex) ++v[t];
    return v;
  }
};

namespace detail {

inline std::shared_ptr<const MinimalPresentation> compute_presentation(const Representation& m) {
  const auto& alg = m.algebra();
  const int n = alg.num_vertices();
  auto pres = std::make_shared<MinimalPresentation>();
  auto& P = *pres;

  Submodule rad = radical(m);
  for (int v = 0; v < n; ++v)
    for (auto k : rad.spaces[v].complement_rows()) {
      P.top_vertex.push_back(v);
      P.top_index.push_back(static_cast<int>(k));
    }
  const std::size_t ng = P.top_vertex.size();

  P.offset.assign(ng, std::vector<int>(n, 0));
  std::vector<int> p0_dim(n, 0);
  for (int j = 0; j < n; ++j)
    for (std::size_t g = 0; g < ng; ++g) {
      P.offset[g][j] = p0_dim[j];
      p0_dim[j] += static_cast<int>(alg.paths(P.top_vertex[g], j).size());
    }

  ModuleMap cover;
  for (int j = 0; j < n; ++j) {
    Matrix pi(m.dim(j), p0_dim[j]);
    for (std::size_t g = 0; g < ng; ++g) {
      const auto& ps = alg.paths(P.top_vertex[g], j);
      for (std::size_t l = 0; l < ps.size(); ++l) {
        const Matrix& act = m.path_action(ps[l]);
        for (int r = 0; r < m.dim(j); ++r) pi(r, P.offset[g][j] + l) = act(r, P.top_index[g]);
      }
    }
    // right inverse through a set of pivot columns
    Matrix red = pi;
    auto piv = rref_inplace(red);
    if (static_cast<int>(piv.size()) != m.dim(j)) throw std::logic_error("presentation cover is not surjective");
    Matrix sq = pi.select_cols(piv);
    Matrix inv = inverse(sq);
    Matrix sec(p0_dim[j], m.dim(j));
    for (std::size_t k = 0; k < piv.size(); ++k)
      for (int c = 0; c < m.dim(j); ++c) sec(piv[k], c) = inv(k, c);
    P.section.push_back(std::move(sec));
    cover.blocks.push_back(pi);
    P.cover.push_back(std::move(pi));
  }

  std::vector<Representation> summands;
  for (int v : P.top_vertex) summands.push_back(projective(alg, v));
  if (summands.empty()) return pres;
  Representation p0 = direct_sum(summands);
  Submodule ker = kernel(cover);
  Representation k = as_representation(p0, ker);
  Submodule krad = radical(k);
  for (int j = 0; j < n; ++j)
    for (auto idx : krad.spaces[j].complement_rows()) {
      std::vector<Rational> vec = ker.spaces[j].basis.column(idx);
      std::vector<SparseVec> row(ng);
      for (std::size_t g = 0; g < ng; ++g) {
        const auto& ps = alg.paths(P.top_vertex[g], j);
        for (std::size_t l = 0; l < ps.size(); ++l) {
          const Rational& c = vec[P.offset[g][j] + l];
          if (sgn(c) != 0) row[g].emplace_back(ps[l], c);
        }
      }
      P.syzygy_vertex.push_back(j);
      P.relations.push_back(std::move(row));
    }
  return pres;
}

}  // namespace detail

/// Minimal projective presentation, computed once per module value.
inline const MinimalPresentation& presentation(const Representation& m) {
  auto& cache = m.cache();
  std::call_once(cache.presentation_once, [&] { cache.presentation = detail::compute_presentation(m); });
  return *cache.presentation;
}

}  // namespace tautilt
