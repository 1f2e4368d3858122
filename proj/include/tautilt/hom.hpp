#pragma once

#include <vector>

#include "tautilt/presentation.hpp"
#include "tautilt/sparse.hpp"

namespace tautilt {

namespace detail {

/// Linear system for Hom(M, N): a map is determined by the images n_g in
/// N_{top_vertex[g]} of the generators of M, subject to one vector equation
/// per syzygy generator. Columns are laid out generator by generator.
struct HomSystem {
  std::vector<std::size_t> col_offset;
  std::size_t ncols = 0;
  SparseEchelon echelon{0};
};

inline HomSystem build_hom_system(const Representation& m, const Representation& n, bool stop_at_zero = false) {
  const auto& pres = presentation(m);
  HomSystem sys;
  for (int v : pres.top_vertex) {
    sys.col_offset.push_back(sys.ncols);
    sys.ncols += n.dim(v);
  }
  sys.echelon = SparseEchelon(sys.ncols);
  for (std::size_t h = 0; h < pres.syzygy_vertex.size(); ++h) {
    const int j = pres.syzygy_vertex[h];
    if (n.dim(j) == 0) continue;
    std::vector<SparseRow> rows(n.dim(j));
    for (std::size_t g = 0; g < pres.top_vertex.size(); ++g)
      for (const auto& [b, c] : pres.relations[h][g]) {
        const std::uint32_t off = static_cast<std::uint32_t>(sys.col_offset[g]);
        const bool unit = c == 1;
        for (const auto& [r, col, v] : n.sparse_path_action(b))
          rows[r].emplace_back(off + col, unit ? v : Rational(c * v));
      }
    for (const auto& row : rows) {
      if (row.empty()) continue;
      sys.echelon.add(row);
      if (stop_at_zero && sys.echelon.nullity() == 0) return sys;
    }
  }
  return sys;
}

/// Module map M -> N sending generator g to the column block of x.
inline ModuleMap map_from_generator_images(const Representation& m, const Representation& n,
                                           const std::vector<std::size_t>& col_offset, const std::vector<Rational>& x) {
  const auto& pres = presentation(m);
  const auto& alg = m.algebra();
  ModuleMap f;
  for (int j = 0; j < m.num_vertices(); ++j) {
    const auto& sec = pres.section[j];
    Matrix phi(n.dim(j), sec.rows());
    for (std::size_t g = 0; g < pres.top_vertex.size(); ++g) {
      const auto& ps = alg.paths(pres.top_vertex[g], j);
      for (std::size_t l = 0; l < ps.size(); ++l)
        for (const auto& [r, c, v] : n.sparse_path_action(ps[l])) {
          const Rational& xc = x[col_offset[g] + c];
          if (sgn(xc) != 0) phi(r, pres.offset[g][j] + l) += v * xc;
        }
    }
    f.blocks.push_back(phi * sec);
  }
  return f;
}

}  // namespace detail

inline std::size_t hom_dim(const Representation& m, const Representation& n) {
  if (m.is_zero() || n.is_zero()) return 0;
  return detail::build_hom_system(m, n).echelon.nullity();
}

inline bool hom_is_zero(const Representation& m, const Representation& n) {
  if (m.is_zero() || n.is_zero()) return true;
  return detail::build_hom_system(m, n, true).echelon.nullity() == 0;
}

/// Basis of Hom_A(M, N).
inline std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n) {
  std::vector<ModuleMap> out;
  if (m.is_zero() || n.is_zero()) return out;
  auto sys = detail::build_hom_system(m, n);
  Matrix ns = sys.echelon.nullspace();
  for (std::size_t k = 0; k < ns.cols(); ++k)
    out.push_back(detail::map_from_generator_images(m, n, sys.col_offset, ns.column(k)));
  return out;
}

}  // namespace tautilt
