#pragma once

#include <span>
#include <vector>

#include "tautilt/matrix.hpp"
#include "tautilt/representation.hpp"

namespace tautilt {

/// A subrepresentation given by one subspace per vertex. Callers are
/// responsible for closure under the arrow actions.
struct Submodule {
  std::vector<Subspace> spaces;

  std::vector<int> dims() const {
    std::vector<int> d;
    for (const auto& s : spaces) d.push_back(static_cast<int>(s.dim()));
    return d;
  }
  int total_dim() const {
    int t = 0;
    for (const auto& s : spaces) t += static_cast<int>(s.dim());
    return t;
  }
};

/// The submodule as a representation in the coordinates of each subspace.
inline Representation as_representation(const Representation& m, const Submodule& sub) {
  const auto& alg = m.algebra();
  std::vector<Matrix> acts;
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const auto& ar = alg.arrow(a);
    const auto& s = sub.spaces[ar.source];
    const auto& t = sub.spaces[ar.target];
    acts.push_back(t.coordinates(m.action(a) * s.basis));
  }
  return {alg, sub.dims(), std::move(acts)};
}

inline ModuleMap inclusion(const Submodule& sub) {
  ModuleMap f;
  for (const auto& s : sub.spaces) f.blocks.push_back(s.basis);
  return f;
}

struct Quotient {
  Representation module;
  ModuleMap projection;  // M -> M / sub
};

inline Quotient quotient(const Representation& m, const Submodule& sub) {
  const auto& alg = m.algebra();
  Quotient q;
  std::vector<std::vector<std::size_t>> comp;
  std::vector<int> dims;
  for (const auto& s : sub.spaces) {
    q.projection.blocks.push_back(s.quotient_projection());
    comp.push_back(s.complement_rows());
    dims.push_back(static_cast<int>(comp.back().size()));
  }
  std::vector<Matrix> acts;
  for (int a = 0; a < alg.num_arrows(); ++a) {
    const auto& ar = alg.arrow(a);
    acts.push_back(q.projection.blocks[ar.target] * m.action(a).select_cols(comp[ar.source]));
  }
  q.module = Representation(alg, std::move(dims), std::move(acts));
  return q;
}

inline Submodule kernel(const ModuleMap& f) {
  Submodule k;
  for (const auto& b : f.blocks) k.spaces.push_back(null_span(b));
  return k;
}

inline Submodule image(const ModuleMap& f) {
  Submodule k;
  for (const auto& b : f.blocks) k.spaces.push_back(column_span(b));
  return k;
}

/// Sum of the images of several maps into the same module.
inline Submodule sum_of_images(std::span<const ModuleMap> maps, const Representation& target) {
  Submodule s;
  for (int v = 0; v < target.num_vertices(); ++v) {
    std::vector<Matrix> cols;
    for (const auto& f : maps) cols.push_back(f.blocks[v]);
    s.spaces.push_back(column_span(hstack(target.dim(v), cols)));
  }
  return s;
}

inline Representation kernel_module(const Representation& src, const ModuleMap& f) {
  return as_representation(src, kernel(f));
}

inline Quotient cokernel(const Representation& tgt, const ModuleMap& f) { return quotient(tgt, image(f)); }

/// rad M = sum over arrows of the image of the arrow action.
inline Submodule radical(const Representation& m) {
  const auto& alg = m.algebra();
  std::vector<std::vector<Matrix>> into(m.num_vertices());
  for (int a = 0; a < alg.num_arrows(); ++a) into[alg.arrow(a).target].push_back(m.action(a));
  Submodule r;
  for (int v = 0; v < m.num_vertices(); ++v) r.spaces.push_back(column_span(hstack(m.dim(v), into[v])));
  return r;
}

/// The smallest submodule containing the given vectors (columns of gens[v]
/// lie in M_v).
inline Submodule generated_submodule(const Representation& m, const std::vector<Matrix>& gens) {
  const auto& alg = m.algebra();
  std::vector<Matrix> cols;
  for (int v = 0; v < m.num_vertices(); ++v) cols.emplace_back(m.dim(v), 0);
  for (int v = 0; v < m.num_vertices(); ++v) {
    if (gens[v].cols() == 0) continue;
    for (std::size_t b = 0; b < alg.dim(); ++b) {
      const auto& p = alg.basis(static_cast<int>(b));
      if (p.source != v) continue;
      Matrix im = m.path_action(static_cast<int>(b)) * gens[v];
      std::vector<Matrix> parts{cols[p.target], im};
      cols[p.target] = hstack(m.dim(p.target), parts);
    }
  }
  Submodule s;
  for (int v = 0; v < m.num_vertices(); ++v) s.spaces.push_back(column_span(cols[v]));
  return s;
}

}  // namespace tautilt
