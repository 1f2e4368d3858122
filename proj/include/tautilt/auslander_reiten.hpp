#pragma once

#include <vector>

#include "tautilt/errors.hpp"
#include "tautilt/hom.hpp"
#include "tautilt/module_ops.hpp"
#include "tautilt/presentation.hpp"

namespace tautilt {

/// Matrix at vertex v of the map P(i) -> P(j), z -> x z, for x in e_j A e_i:
/// columns paths(i, v), rows paths(j, v).
inline Matrix left_multiplication(const Algebra& alg, int v, int i, int j, const SparseVec& x) {
  const auto& cols = alg.paths(i, v);
  const auto& rows = alg.paths(j, v);
  Matrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [xb, xc] : x)
      for (const auto& [b, coef] : alg.product(xb, cols[c])) m(alg.local_index(b), c) += xc * coef;
  return m;
}

inline bool is_projective(const Representation& m) { return presentation(m).syzygy_vertex.empty(); }

/// g-vector: [P0] - [P1] of the minimal projective presentation.
inline IntVector g_vector(const Representation& m) {
  const auto& p = presentation(m);
  const int n = m.num_vertices();
  IntVector g = p.p0_multiplicity(n);
  auto p1 = p.p1_multiplicity(n);
  for (int i = 0; i < n; ++i) g[i] -= p1[i];
  return g;
}

/// delta_i = dim End(S(i)); all ones for quiver presentations.
inline IntVector d_vector(const Algebra& alg) {
  IntVector d;
  for (int i = 0; i < alg.num_vertices(); ++i) {
    auto s = simple(alg, i);
    d.push_back(static_cast<std::int64_t>(hom_dim(s, s)));
  }
  return d;
}

inline IntMatrix d_matrix(const Algebra& alg) {
  auto d = d_vector(alg);
  return diagonal(d);
}

/// [M]_i = dim Hom(P(i), M) / delta_i.
inline IntVector dimension_vector(const Representation& m) {
  const auto& alg = m.algebra();
  auto d = d_vector(alg);
  IntVector v;
  for (int i = 0; i < alg.num_vertices(); ++i) {
    auto h = static_cast<std::int64_t>(hom_dim(projective(alg, i), m));
    if (h % d[i] != 0) throw std::logic_error("dimension vector entry is not integral");
    v.push_back(h / d[i]);
  }
  return v;
}

/// Nakayama functor on a projective module: P(i) -> I(i) summandwise.
inline Representation nakayama(const Representation& p) {
  const auto& pres = presentation(p);
  if (!pres.syzygy_vertex.empty()) throw NotProjective("Nakayama functor applied to a non-projective module");
  const auto& alg = p.algebra();
  if (pres.top_vertex.empty()) return Representation::zero(alg);
  std::vector<Representation> parts;
  for (int v : pres.top_vertex) parts.push_back(injective(alg, v));
  return direct_sum(parts);
}

namespace detail {

inline Representation compute_tau(const Representation& m) {
  const auto& alg = m.algebra();
  const auto& pres = presentation(m);
  if (pres.syzygy_vertex.empty()) return Representation::zero(alg);
  std::vector<Representation> src, tgt;
  for (int v : pres.syzygy_vertex) src.push_back(injective(alg, v));
  for (int v : pres.top_vertex) tgt.push_back(injective(alg, v));
  Representation i1 = direct_sum(src), i0 = direct_sum(tgt);
  ModuleMap f;
  for (int v = 0; v < alg.num_vertices(); ++v) {
    Matrix blk(i0.dim(v), i1.dim(v));
    std::size_t r0 = 0;
    for (std::size_t g = 0; g < pres.top_vertex.size(); ++g) {
      const int j = pres.top_vertex[g];
      std::size_t c0 = 0;
      for (std::size_t h = 0; h < pres.syzygy_vertex.size(); ++h) {
        const int i = pres.syzygy_vertex[h];
        if (!pres.relations[h][g].empty()) {
          Matrix b = dual_left_multiplication(alg, v, i, j, pres.relations[h][g]);
          for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) blk(r0 + r, c0 + c) = b(r, c);
        }
        c0 += alg.paths(v, i).size();
      }
      r0 += alg.paths(v, j).size();
    }
    f.blocks.push_back(std::move(blk));
  }
  return kernel_module(i1, f);
}

}  // namespace detail

/// Auslander-Reiten translate: tau M = ker(nu p1 : nu P1 -> nu P0).
/// Computed once per module value.
inline const Representation& tau(const Representation& m) {
  auto& cache = m.cache();
  std::call_once(cache.tau_once, [&] { cache.tau = std::make_shared<const Representation>(detail::compute_tau(m)); });
  return *cache.tau;
}

/// Auslander-Bridger transpose Tr M = coker(p1^*), a module over the
/// opposite algebra.
inline Representation transpose(const Representation& m) {
  const auto& alg = m.algebra();
  const auto& op = alg.opposite();
  const auto& pres = presentation(m);
  if (pres.syzygy_vertex.empty()) return Representation::zero(op);
  std::vector<Representation> tgt;
  for (int v : pres.syzygy_vertex) tgt.push_back(projective(op, v));
  Representation q1 = direct_sum(tgt);
  ModuleMap f;
  for (int v = 0; v < op.num_vertices(); ++v) {
    std::size_t rows = 0, cols = 0;
    for (int h : pres.syzygy_vertex) rows += op.paths(h, v).size();
    for (int g : pres.top_vertex) cols += op.paths(g, v).size();
    Matrix blk(rows, cols);
    std::size_t r0 = 0;
    for (std::size_t h = 0; h < pres.syzygy_vertex.size(); ++h) {
      const int j = pres.syzygy_vertex[h];
      std::size_t c0 = 0;
      for (std::size_t g = 0; g < pres.top_vertex.size(); ++g) {
        const int i = pres.top_vertex[g];
        if (!pres.relations[h][g].empty()) {
          Matrix b = left_multiplication(op, v, i, j, pres.relations[h][g]);
          for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) blk(r0 + r, c0 + c) = b(r, c);
        }
        c0 += op.paths(i, v).size();
      }
      r0 += op.paths(j, v).size();
    }
    f.blocks.push_back(std::move(blk));
  }
  return cokernel(q1, f).module;
}

}  // namespace tautilt
