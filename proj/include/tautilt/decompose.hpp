#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "tautilt/auslander_reiten.hpp"
#include "tautilt/errors.hpp"
#include "tautilt/hom.hpp"
#include "tautilt/module_ops.hpp"
#include "tautilt/polynomial.hpp"

namespace tautilt {

inline constexpr int kDecompositionTrialBudget = 32;

/// End(M) with coordinates: every endomorphism in the span of `basis` is
/// identified by its entries at `span.pivot_rows` of its flattening.
class EndomorphismAlgebra {
 public:
  explicit EndomorphismAlgebra(const Representation& m) : m_(&m), basis_(hom_space(m, m)) {}

  std::size_t dim() const { return basis_.size(); }
  const std::vector<ModuleMap>& basis() const { return basis_; }

  std::vector<Rational> coordinates(const ModuleMap& f) const {
    build_coordinates();
    auto flat = f.flatten();
    std::vector<Rational> c;
    for (auto r : span_.pivot_rows) c.push_back(flat[r]);
    return c;
  }

  ModuleMap combination(std::span<const Rational> coeffs) const {
    return linear_combination(basis_, coeffs, *m_, *m_);
  }

  /// Jacobson radical: the radical of the trace form tr_M(xy), which in
  /// characteristic zero is a nil ideal containing every nilpotent ideal.
  /// Columns are coefficient vectors with respect to basis().
  const Matrix& radical() const {
    if (!radical_) {
      const std::size_t r = basis_.size();
      Matrix gram(r, r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
          Rational t;
          for (std::size_t v = 0; v < basis_[i].blocks.size(); ++v) {
            const auto& a = basis_[i].blocks[v];
            const auto& b = basis_[j].blocks[v];
            for (std::size_t p = 0; p < a.rows(); ++p)
              for (std::size_t q = 0; q < a.cols(); ++q)
                if (sgn(a(p, q)) != 0 && sgn(b(q, p)) != 0) t += a(p, q) * b(q, p);
          }
          gram(i, j) = t;
          gram(j, i) = t;
        }
      radical_ = nullspace(gram);
    }
    return *radical_;
  }

  std::vector<ModuleMap> radical_maps() const {
    std::vector<ModuleMap> out;
    const Matrix& j = radical();
    for (std::size_t k = 0; k < j.cols(); ++k) out.push_back(combination(j.column(k)));
    return out;
  }

  /// True iff E/J is commutative.
  bool commutative_mod_radical() const {
    Subspace jspan = column_span(radical());
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t k = i + 1; k < basis_.size(); ++k) {
        ModuleMap c = basis_[i] * basis_[k] + Rational(-1) * (basis_[k] * basis_[i]);
        // coefficients of the commutator with respect to basis()
        auto cc = coordinates(c);
        Matrix col(cc.size(), 1);
        for (std::size_t t = 0; t < cc.size(); ++t) col(t, 0) = cc[t];
        build_coordinates();
        Matrix coeffs = inverse(coords_of_basis_) * col;
        if (!jspan.contains(coeffs)) return false;
      }
    return true;
  }

  /// Minimal polynomial of an endomorphism via linear dependence of powers.
  Polynomial minimal_polynomial(const ModuleMap& f) const {
    std::vector<std::vector<Rational>> powers{coordinates(ModuleMap::identity(*m_))};
    ModuleMap p = ModuleMap::identity(*m_);
    while (true) {
      p = f * p;
      powers.push_back(coordinates(p));
      Matrix sys = Matrix::from_columns(powers[0].size(), powers);
      Matrix ns = nullspace(sys);
      if (ns.cols() > 0) {
        std::vector<Rational> c(powers.size());
        for (std::size_t k = 0; k < powers.size(); ++k) c[k] = ns(k, 0);
        return Polynomial(std::move(c)).monic();
      }
    }
  }

 private:
  void build_coordinates() const {
    if (has_coordinates_ || basis_.empty()) return;
    std::vector<std::vector<Rational>> cols;
    for (const auto& f : basis_) cols.push_back(f.flatten());
    Matrix flat = Matrix::from_columns(cols[0].size(), cols);
    span_ = column_span(flat);
    coords_of_basis_ = span_.coordinates(flat);
    has_coordinates_ = true;
  }

  const Representation* m_;
  std::vector<ModuleMap> basis_;
  mutable bool has_coordinates_ = false;
  mutable Subspace span_;
  mutable Matrix coords_of_basis_;
  mutable std::optional<Matrix> radical_;
};

inline ModuleMap evaluate(const Polynomial& p, const ModuleMap& f) {
  ModuleMap out;
  for (const auto& b : f.blocks) out.blocks.push_back(p(b));
  return out;
}

namespace detail {

/// Candidate endomorphisms for splitting: the basis first, then seeded
/// random small integer combinations.
class EndoCandidates {
 public:
  EndoCandidates(const EndomorphismAlgebra& e, std::uint64_t seed) : e_(e), rng_(seed) {}
  ModuleMap next() {
    std::vector<Rational> c(e_.dim());
    if (k_ < e_.dim()) {
      c[k_] = 1;
    } else {
      std::uniform_int_distribution<int> d(-3, 3);
      for (auto& x : c) x = d(rng_);
    }
    ++k_;
    return e_.combination(c);
  }

 private:
  const EndomorphismAlgebra& e_;
  std::mt19937_64 rng_;
  std::size_t k_ = 0;
};

/// f^k with k maximal such that f^k divides mu.
inline Polynomial primary_part(const Polynomial& mu, const Polynomial& f) {
  Polynomial g = Polynomial::constant(1), rest = mu;
  while (true) {
    auto [q, r] = divmod(rest, f);
    if (!r.is_zero()) break;
    g = g * f;
    rest = q;
  }
  return g;
}

enum class SplitOutcome { kSplit, kIndecomposable, kInconclusive };

struct Split {
  SplitOutcome outcome;
  Representation first, second;
};

inline Split try_split(const Representation& m, int budget) {
  if (hom_dim(m, m) == 1) return {SplitOutcome::kIndecomposable, {}, {}};
  EndomorphismAlgebra e(m);
  if (e.dim() <= 1) return {SplitOutcome::kIndecomposable, {}, {}};
  const std::size_t s = e.dim() - e.radical().cols();
  if (s == 1) return {SplitOutcome::kIndecomposable, {}, {}};
  std::optional<bool> commutative;
  EndoCandidates cand(e, 0x7a75u + e.dim());
  for (int trial = 0; trial < budget; ++trial) {
    ModuleMap phi = cand.next();
    Polynomial mu = e.minimal_polynomial(phi);
    Polynomial sq = squarefree_part(mu);
    if (sq.degree() < 2) continue;
    auto fs = find_factor(sq);
    if (fs.outcome == FactorOutcome::kFactorFound) {
      Polynomial g = primary_part(mu, fs.factor);
      Polynomial h = divmod(mu, g).first;
      Submodule a = kernel(evaluate(g, phi));
      Submodule b = kernel(evaluate(h, phi));
      return {SplitOutcome::kSplit, as_representation(m, a), as_representation(m, b)};
    }
    if (fs.outcome == FactorOutcome::kIrreducible && static_cast<std::size_t>(sq.degree()) == s) {
      if (!commutative) commutative = e.commutative_mod_radical();
      // E/J is then a field generated by phi
      if (*commutative) return {SplitOutcome::kIndecomposable, {}, {}};
    }
  }
  return {SplitOutcome::kInconclusive, {}, {}};
}

inline void split_fully(const Representation& m, int budget, std::vector<Representation>& out) {
  if (m.is_zero()) return;
  auto sp = try_split(m, budget);
  switch (sp.outcome) {
    case SplitOutcome::kIndecomposable:
      out.push_back(m);
      return;
    case SplitOutcome::kSplit:
      split_fully(sp.first, budget, out);
      split_fully(sp.second, budget, out);
      return;
    case SplitOutcome::kInconclusive:
      throw DecompositionInconclusive("no splitting endomorphism found for module of dimension " +
                                      std::to_string(m.total_dim()));
  }
}

}  // namespace detail

/// Isomorphism test by evaluating random combinations of a Hom(M, N) basis.
/// A false negative requires every sample to hit the zero set of a nonzero
/// determinant; with the fixed seed the answer is deterministic.
inline bool is_isomorphic(const Representation& m, const Representation& n) {
  if (m.dims() != n.dims()) return false;
  if (m.is_zero()) return true;
  auto basis = hom_space(m, n);
  if (basis.empty()) return false;
  for (const auto& f : basis)
    if (f.is_isomorphism()) return true;
  std::mt19937_64 rng(0x150u + static_cast<std::uint64_t>(m.total_dim()));
  std::uniform_int_distribution<long> d(-(1L << 20), 1L << 20);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Rational> c(basis.size());
    for (auto& x : c) x = d(rng);
    if (linear_combination(basis, c, m, n).is_isomorphism()) return true;
  }
  return false;
}

/// Order used for summands everywhere: total dimension, dimension vector,
/// then g-vector, all lexicographic.
inline bool canonical_less(const Representation& a, const Representation& b) {
  if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
  if (a.dims() != b.dims()) return a.dims() < b.dims();
  return g_vector(a) < g_vector(b);
}

struct Summand {
  Representation module;
  int multiplicity = 1;
};

/// Krull-Schmidt decomposition with isomorphic summands grouped, in
/// canonical order.
inline std::vector<Summand> decompose(const Representation& m, int budget = kDecompositionTrialBudget) {
  std::vector<Representation> parts;
  detail::split_fully(m, budget, parts);
  std::vector<Summand> groups;
  for (auto& p : parts) {
    bool found = false;
    for (auto& g : groups)
      if (is_isomorphic(g.module, p)) {
        ++g.multiplicity;
        found = true;
        break;
      }
    if (!found) groups.push_back({std::move(p), 1});
  }
  std::stable_sort(groups.begin(), groups.end(),
                   [](const Summand& a, const Summand& b) { return canonical_less(a.module, b.module); });
  return groups;
}

inline bool is_indecomposable(const Representation& m, int budget = kDecompositionTrialBudget) {
  if (m.is_zero()) return false;
  auto sp = detail::try_split(m, budget);
  if (sp.outcome == detail::SplitOutcome::kInconclusive)
    throw DecompositionInconclusive("indecomposability test inconclusive");
  return sp.outcome == detail::SplitOutcome::kIndecomposable;
}

/// End(M) is a division algebra.
inline bool is_brick(const Representation& m, int budget = kDecompositionTrialBudget) {
  if (m.is_zero()) return false;
  if (hom_dim(m, m) == 1) return true;
  EndomorphismAlgebra e(m);
  if (e.radical().cols() > 0) return false;
  detail::EndoCandidates cand(e, 0xb51cu + e.dim());
  bool commutative = e.commutative_mod_radical();
  for (int trial = 0; trial < budget; ++trial) {
    Polynomial mu = e.minimal_polynomial(cand.next());
    auto fs = find_factor(mu);
    if (fs.outcome == FactorOutcome::kFactorFound) return false;  // fs(phi) is a zero divisor
    if (fs.outcome == FactorOutcome::kIrreducible && commutative && static_cast<std::size_t>(mu.degree()) == e.dim())
      return true;
  }
  throw BrickTestInconclusive("could not decide whether the endomorphism algebra is a division algebra");
}

/// Sum of the images of all maps U -> X.
inline Submodule trace_submodule(const Representation& u, const Representation& x) {
  auto maps = hom_space(u, x);
  return sum_of_images(maps, x);
}

/// X is a quotient of a finite direct sum of copies of U.
inline bool in_fac(const Representation& x, const Representation& u) {
  if (x.is_zero()) return true;
  return trace_submodule(u, x).total_dim() == x.total_dim();
}

}  // namespace tautilt
