#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tautilt/decompose.hpp"
#include "tautilt/errors.hpp"
#include "tautilt/gc_vectors.hpp"
#include "tautilt/module_ops.hpp"
#include "tautilt/tau_tilting.hpp"

namespace tautilt {

struct BrickEvidence {
  std::size_t end_dim = 0;
  bool hom_from_modules_zero = false;  // Hom(M^, B) = 0
  bool hom_to_tau_zero = false;        // Hom(B, tau M^) = 0
  bool hom_from_projectives_zero = false;  // Hom(P^, B) = 0
  bool relation_holds = false;             // D [B] = m c
};

struct BrickCertificate {
  Representation brick;
  IntVector dimension_vector;
  std::int64_t multiplier = 0;
  PairKey pair_key;
  int slot = 0;
  IntVector c_vector;
  BrickEvidence evidence;

  std::int64_t composition_length() const {
    std::int64_t s = 0;
    for (auto x : dimension_vector) s += x;
    return s;
  }
};

/// X is a submodule of a finite direct sum of copies of U: the maps X -> U
/// have no common kernel.
inline bool in_sub(const Representation& x, const Representation& u) {
  if (x.is_zero()) return true;
  auto maps = hom_space(x, u);
  for (int v = 0; v < x.num_vertices(); ++v) {
    if (x.dim(v) == 0) continue;
    std::vector<Matrix> rows;
    for (const auto& f : maps) rows.push_back(f.blocks[v]);
    if (rank(vstack(x.dim(v), rows)) != static_cast<std::size_t>(x.dim(v))) return false;
  }
  return true;
}

/// B = Z / (sum of images of maps U_j -> Z over the other module summands
/// U_j + sum of images of radical endomorphisms of Z). Unverified.
inline Representation trace_quotient(const TauTiltingPair& upper, const Representation& z) {
  std::vector<ModuleMap> maps;
  for (const auto& u : upper.modules()) {
    if (g_vector(u) == g_vector(z)) continue;
    for (auto& f : hom_space(u, z)) maps.push_back(std::move(f));
  }
  if (hom_dim(z, z) > 1) {
    EndomorphismAlgebra e(z);
    for (auto& f : e.radical_maps()) maps.push_back(std::move(f));
  }
  if (maps.empty()) return z;
  return quotient(z, sum_of_images(maps, z)).module;
}

namespace detail {

[[noreturn]] inline void brick_failure(const TauTiltingPair& t, int slot, const IntVector& dims,
                                       const std::string& check) {
  throw BrickVerificationFailed("pair " + to_string(t.key()) + " slot " + std::to_string(slot + 1) +
                                ": candidate " + to_string(dims) + " fails " + check);
}

}  // namespace detail

/// Orders the two pairs of an exchange edge: returns true if `t` is the
/// upper one, i.e. the module part of `other` lies in Fac of that of `t`.
inline bool is_upper(const TauTiltingPair& t, const TauTiltingPair& other) {
  int ex = exchanged_slot(t, other);
  if (ex < 0) throw MutationVerificationFailed("pairs are not adjacent");
  if (!other.is_module_slot(ex)) return true;
  return detail::in_fac_of(other.module(ex), t.modules());
}

/// Brick labelling slot `slot` of `t`, where `neighbour` is the mutation of
/// t at that slot. All defining conditions are checked.
inline BrickCertificate brick_for_slot(const TauTiltingPair& t, int slot, const TauTiltingPair& neighbour) {
  const auto& alg = t.algebra();
  const bool t_upper = is_upper(t, neighbour);
  const TauTiltingPair& upper = t_upper ? t : neighbour;
  const int upper_slot = t_upper ? slot : exchanged_slot(t, neighbour);
  if (!upper.is_module_slot(upper_slot))
    throw BrickVerificationFailed("upper pair " + to_string(upper.key()) + " exchanges a projective slot");

  BrickCertificate cert;
  cert.pair_key = t.key();
  cert.slot = slot;
  cert.brick = trace_quotient(upper, upper.module(upper_slot));
  cert.dimension_vector = dimension_vector(cert.brick);
  const IntVector delta = d_vector(alg);
  cert.multiplier = inner_product(t.g_vector_of(slot), cert.dimension_vector, delta);
  IntMatrix c = c_matrix(t);
  cert.c_vector = c.column(slot);

  if (cert.brick.is_zero()) detail::brick_failure(t, slot, cert.dimension_vector, "nonzero");
  cert.evidence.end_dim = hom_dim(cert.brick, cert.brick);
  if (!is_brick(cert.brick)) detail::brick_failure(t, slot, cert.dimension_vector, "brick test");

  auto m_hat = t.other_modules(slot);
  auto p_hat = t.other_projectives(slot);
  cert.evidence.hom_from_modules_zero = true;
  cert.evidence.hom_to_tau_zero = true;
  for (const auto& x : m_hat) {
    cert.evidence.hom_from_modules_zero = cert.evidence.hom_from_modules_zero && hom_is_zero(x, cert.brick);
    cert.evidence.hom_to_tau_zero = cert.evidence.hom_to_tau_zero && hom_is_zero(cert.brick, tau(x));
  }
  cert.evidence.hom_from_projectives_zero = true;
  for (int j : p_hat)
    cert.evidence.hom_from_projectives_zero =
        cert.evidence.hom_from_projectives_zero && hom_is_zero(projective(alg, j), cert.brick);
  if (!cert.evidence.hom_from_modules_zero) detail::brick_failure(t, slot, cert.dimension_vector, "Hom(M^, B) = 0");
  if (!cert.evidence.hom_to_tau_zero) detail::brick_failure(t, slot, cert.dimension_vector, "Hom(B, tau M^) = 0");
  if (!cert.evidence.hom_from_projectives_zero)
    detail::brick_failure(t, slot, cert.dimension_vector, "Hom(P^, B) = 0");

  cert.evidence.relation_holds = cert.multiplier != 0;
  for (std::size_t i = 0; i < delta.size(); ++i)
    cert.evidence.relation_holds =
        cert.evidence.relation_holds && delta[i] * cert.dimension_vector[i] == cert.multiplier * cert.c_vector[i];
  if (!cert.evidence.relation_holds) detail::brick_failure(t, slot, cert.dimension_vector, "D[B] = m c");
  return cert;
}

inline BrickCertificate brick_for_slot(const TauTiltingPair& t, int slot) {
  return brick_for_slot(t, slot, mutate(t, slot));
}

struct XMatrixCheck {
  IntMatrix x;         // column i = [B_i]
  IntMatrix gtdx;      // G^T D X
  IntVector diagonal;  // the multipliers
};

/// Assembles X from the certificates of all slots and checks that G^T D X
/// is diagonal with the multipliers on the diagonal and that D X = C diag(m).
inline XMatrixCheck x_matrix(const TauTiltingPair& t, const std::vector<BrickCertificate>& certs) {
  const int n = t.size();
  if (static_cast<int>(certs.size()) != n) throw std::invalid_argument("need one certificate per slot");
  std::vector<IntVector> cols;
  XMatrixCheck r;
  for (const auto& c : certs) {
    cols.push_back(c.dimension_vector);
    r.diagonal.push_back(c.multiplier);
  }
  r.x = IntMatrix::from_columns(cols);
  IntMatrix d = d_matrix(t.algebra());
  IntMatrix g = g_matrix(t);
  r.gtdx = g.transpose() * d * r.x;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (r.gtdx(i, j) != (i == j ? r.diagonal[i] : 0))
        throw BrickVerificationFailed("pair " + to_string(t.key()) + ": G^T D X is not diag(m) at (" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  IntMatrix lhs = d * r.x;
  IntMatrix rhs = c_matrix(g) * diagonal(r.diagonal);
  if (!(lhs == rhs)) throw BrickVerificationFailed("pair " + to_string(t.key()) + ": D X differs from C D");
  return r;
}

}  // namespace tautilt
