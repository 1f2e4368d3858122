#pragma once

#include <vector>

#include "tautilt/auslander_reiten.hpp"
#include "tautilt/hom.hpp"
#include "tautilt/matrix.hpp"
#include "tautilt/tau_tilting.hpp"

namespace tautilt {

/// Columns are the slot g-vectors of the pair.
inline IntMatrix g_matrix(const TauTiltingPair& t) { return IntMatrix::from_columns(t.g_vectors()); }

/// C = (G^-1)^T; throws NonIntegral if G is not unimodular.
inline IntMatrix c_matrix(const IntMatrix& g) { return integer_inverse(g).transpose(); }
inline IntMatrix c_matrix(const TauTiltingPair& t) { return c_matrix(g_matrix(t)); }

/// <v, w>_A = sum_i delta_i v_i w_i.
inline std::int64_t inner_product(const IntVector& v, const IntVector& w, const IntVector& delta) {
  if (v.size() != w.size() || v.size() != delta.size()) throw std::invalid_argument("inner product length mismatch");
  BigInt s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += BigInt(static_cast<long>(delta[i])) * static_cast<long>(v[i]) * static_cast<long>(w[i]);
  return to_int64(s);
}

inline std::int64_t inner_product(const IntVector& v, const IntVector& w, const IntMatrix& d) {
  IntVector delta;
  for (std::size_t i = 0; i < d.rows(); ++i) delta.push_back(d(i, i));
  return inner_product(v, w, delta);
}

inline bool is_sign_coherent(const IntVector& c) {
  bool pos = false, neg = false;
  for (auto x : c) {
    pos = pos || x > 0;
    neg = neg || x < 0;
  }
  return !(pos && neg);
}

struct ArFormulaCheck {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool equal = false;
};

/// <g^M, [N]>_A against dim Hom(M, N) - dim Hom(N, tau M), computed
/// independently.
inline ArFormulaCheck verify_ar_formula(const Representation& m, const Representation& n) {
  if (&m.algebra() != &n.algebra()) throw std::invalid_argument("modules over different algebras");
  ArFormulaCheck r;
  r.lhs = inner_product(g_vector(m), dimension_vector(n), d_vector(m.algebra()));
  r.rhs = static_cast<std::int64_t>(hom_dim(m, n)) - static_cast<std::int64_t>(hom_dim(n, tau(m)));
  r.equal = r.lhs == r.rhs;
  return r;
}

}  // namespace tautilt
