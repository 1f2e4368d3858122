#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "tautilt/auslander_reiten.hpp"
#include "tautilt/decompose.hpp"
#include "tautilt/errors.hpp"
#include "tautilt/hom.hpp"

namespace tautilt {

using PairKey = std::vector<IntVector>;

inline std::string to_string(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

inline std::string to_string(const PairKey& k) {
  std::string s = "{";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + to_string(k[i]);
  return s + "}";
}

/// A tau-tilting pair (M, P) with M split into pairwise non-isomorphic
/// indecomposable summands. Slots are numbered 0..n-1: module summands in
/// canonical order, then projective vertices in ascending order.
class TauTiltingPair {
 public:
  TauTiltingPair() = default;
  TauTiltingPair(const Algebra& alg, std::vector<Representation> modules, std::vector<int> projectives)
      : alg_(&alg), modules_(std::move(modules)), projectives_(std::move(projectives)) {
    std::sort(modules_.begin(), modules_.end(), canonical_less);
    std::sort(projectives_.begin(), projectives_.end());
    for (const auto& m : modules_) g_.push_back(g_vector(m));
    for (int j : projectives_) {
      IntVector e(alg.num_vertices(), 0);
      e[j] = -1;
      g_.push_back(std::move(e));
    }
    key_ = g_;
    std::sort(key_.begin(), key_.end());
  }

  const Algebra& algebra() const { return *alg_; }
  int size() const { return static_cast<int>(g_.size()); }
  const std::vector<Representation>& modules() const { return modules_; }
  const std::vector<int>& projectives() const { return projectives_; }
  int num_modules() const { return static_cast<int>(modules_.size()); }
  bool is_module_slot(int s) const { return s < num_modules(); }
  const Representation& module(int s) const { return modules_.at(s); }
  int projective_vertex(int s) const { return projectives_.at(s - num_modules()); }
  const IntVector& g_vector_of(int s) const { return g_.at(s); }
  const std::vector<IntVector>& g_vectors() const { return g_; }
  const PairKey& key() const { return key_; }

  int slot_of(const IntVector& g) const {
    for (int s = 0; s < size(); ++s)
      if (g_[s] == g) return s;
    return -1;
  }

  /// The module M as one representation.
  Representation module_sum() const {
    if (modules_.empty()) return Representation::zero(*alg_);
    return direct_sum(modules_);
  }

  /// Module summands other than slot s.
  std::vector<Representation> other_modules(int s) const {
    std::vector<Representation> out;
    for (int k = 0; k < num_modules(); ++k)
      if (k != s) out.push_back(modules_[k]);
    return out;
  }

  std::vector<int> other_projectives(int s) const {
    std::vector<int> out;
    for (int k = 0; k < static_cast<int>(projectives_.size()); ++k)
      if (k + num_modules() != s) out.push_back(projectives_[k]);
    return out;
  }

 private:
  const Algebra* alg_ = nullptr;
  std::vector<Representation> modules_;
  std::vector<int> projectives_;
  std::vector<IntVector> g_;
  PairKey key_;
};

/// Hom(M, tau M) = 0 and Hom(P, M) = 0.
inline bool is_tau_rigid_pair(const Representation& m, const std::vector<int>& projectives) {
  if (!hom_is_zero(m, tau(m))) return false;
  for (int j : projectives)
    if (!hom_is_zero(projective(m.algebra(), j), m)) return false;
  return true;
}

/// Summandwise version of the same test.
inline bool is_tau_rigid_pair(const std::vector<Representation>& summands, const std::vector<int>& projectives) {
  for (const auto& x : summands)
    for (const auto& y : summands)
      if (!hom_is_zero(x, tau(y))) return false;
  for (int j : projectives)
    for (const auto& x : summands)
      if (!hom_is_zero(projective(x.algebra(), j), x)) return false;
  return true;
}

inline TauTiltingPair initial_pair(const Algebra& alg) {
  std::vector<Representation> mods;
  for (int i = 0; i < alg.num_vertices(); ++i) mods.push_back(projective(alg, i));
  return {alg, std::move(mods), {}};
}

inline TauTiltingPair empty_support_pair(const Algebra& alg) {
  std::vector<int> ps;
  for (int i = 0; i < alg.num_vertices(); ++i) ps.push_back(i);
  return {alg, {}, std::move(ps)};
}

/// Checks the defining conditions of a tau-tilting pair; returns a
/// description of the first failure, or nothing.
inline std::optional<std::string> pair_defect(const TauTiltingPair& t) {
  const auto& alg = t.algebra();
  if (t.size() != alg.num_vertices()) return "pair has " + std::to_string(t.size()) + " summands";
  std::set<IntVector> seen(t.g_vectors().begin(), t.g_vectors().end());
  if (seen.size() != static_cast<std::size_t>(t.size())) return std::string("repeated summand");
  for (const auto& m : t.modules())
    if (m.is_zero()) return std::string("zero module summand");
  if (!is_tau_rigid_pair(t.modules(), t.projectives())) return std::string("pair is not tau-rigid");
  IntMatrix g = IntMatrix::from_columns(t.g_vectors());
  BigInt det = integer_determinant(g);
  if (det != 1 && det != -1) return "g-vectors do not form a basis (det " + det.get_str() + ")";
  return std::nullopt;
}

namespace detail {

/// Minimal left add(U)-approximation X -> U' for pairwise non-isomorphic
/// indecomposables U_j: U_j occurs with multiplicity
/// dim Hom(X, U_j) - dim rad(X, U_j), where rad(X, U_j) collects the maps
/// factoring through a radical map of add U.
struct Approximation {
  Representation target;
  ModuleMap map;
};

inline std::size_t flat_size(const ModuleMap& f) {
  std::size_t n = 0;
  for (const auto& b : f.blocks) n += b.rows() * b.cols();
  return n;
}

inline SparseRow sparse_flatten(const ModuleMap& f) {
  SparseRow row;
  std::uint32_t pos = 0;
  for (const auto& b : f.blocks)
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j, ++pos)
        if (sgn(b(i, j)) != 0) row.emplace_back(pos, b(i, j));
  return row;
}

inline Approximation minimal_left_approximation(const Representation& x, const std::vector<Representation>& us) {
  const std::size_t k = us.size();
  std::vector<std::vector<ModuleMap>> hx(k);
  for (std::size_t j = 0; j < k; ++j) hx[j] = hom_space(x, us[j]);
  std::vector<Representation> summands;
  std::vector<ModuleMap> components;
  for (std::size_t j = 0; j < k; ++j) {
    if (hx[j].empty()) continue;
    SparseEchelon span(flat_size(hx[j][0]));
    for (std::size_t l = 0; l < k; ++l) {
      if (hx[l].empty()) continue;
      std::vector<ModuleMap> through;
      if (l == j) {
        EndomorphismAlgebra e(us[j]);
        through = e.radical_maps();
      } else {
        through = hom_space(us[l], us[j]);
      }
      for (const auto& h : through)
        for (const auto& g : hx[l]) span.add(sparse_flatten(h * g));
    }
    // Hom basis elements independent modulo the radical part
    for (const auto& g : hx[j])
      if (span.add(sparse_flatten(g))) {
        summands.push_back(us[j]);
        components.push_back(g);
      }
  }
  Approximation ap;
  if (summands.empty()) {
    ap.target = Representation::zero(x.algebra());
    ap.map = ModuleMap::zero(x, ap.target);
    return ap;
  }
  ap.target = direct_sum(summands);
  for (int v = 0; v < x.num_vertices(); ++v) {
    std::vector<Matrix> rows;
    for (const auto& c : components) rows.push_back(c.blocks[v]);
    ap.map.blocks.push_back(vstack(x.dim(v), rows));
  }
  return ap;
}

/// X lies in Fac(U_1 + ... + U_k).
inline bool in_fac_of(const Representation& x, const std::vector<Representation>& us) {
  if (x.is_zero()) return true;
  std::vector<ModuleMap> maps;
  for (const auto& u : us)
    for (auto& f : hom_space(u, x)) maps.push_back(std::move(f));
  return sum_of_images(maps, x).total_dim() == x.total_dim();
}

/// Mutation at a module slot X with X not in Fac U (the new pair is
/// smaller): Y = coker of the minimal left add(U)-approximation of X.
inline TauTiltingPair down_mutation(const TauTiltingPair& t, int slot) {
  const auto& alg = t.algebra();
  const Representation& x = t.module(slot);
  auto us = t.other_modules(slot);
  auto ps = t.other_projectives(slot);
  auto ap = minimal_left_approximation(x, us);
  Representation y = cokernel(ap.target, ap.map).module;
  if (y.is_zero()) {
    std::vector<int> candidates;
    for (int j = 0; j < alg.num_vertices(); ++j) {
      if (std::find(ps.begin(), ps.end(), j) != ps.end()) continue;
      bool zero = true;
      for (const auto& u : us) zero = zero && hom_is_zero(projective(alg, j), u);
      if (zero) candidates.push_back(j);
    }
    if (candidates.size() != 1)
      throw MutationVerificationFailed("support drop found " + std::to_string(candidates.size()) +
                                       " candidate vertices");
    ps.push_back(candidates[0]);
    return {alg, std::move(us), std::move(ps)};
  }
  auto parts = decompose(y);
  if (parts.size() != 1)
    throw MutationVerificationFailed("cokernel of the approximation has " + std::to_string(parts.size()) +
                                     " non-isomorphic summands");
  us.push_back(parts[0].module);
  return {alg, std::move(us), std::move(ps)};
}

/// Duality between pairs over A and over A^op:
/// (M, P) -> (Tr M_np + P^*, M_pr^*), which reverses the mutation order.
/// `slot_map[s]` is the slot of the image of summand s.
struct DualPair {
  TauTiltingPair pair;
  std::vector<int> slot_map;
};

inline DualPair dual_pair(const TauTiltingPair& t) {
  const auto& op = t.algebra().opposite();
  std::vector<Representation> mods;
  std::vector<int> projs;
  std::vector<std::pair<bool, std::size_t>> where;  // (is module, index before sorting)
  for (const auto& m : t.modules()) {
    const auto& pres = presentation(m);
    if (pres.syzygy_vertex.empty()) {
      if (pres.top_vertex.size() != 1) throw MutationVerificationFailed("projective summand is decomposable");
      where.emplace_back(false, projs.size());
      projs.push_back(pres.top_vertex[0]);
    } else {
      where.emplace_back(true, mods.size());
      mods.push_back(transpose(m));
    }
  }
  for (int j : t.projectives()) {
    where.emplace_back(true, mods.size());
    mods.push_back(projective(op, j));
  }
  std::vector<IntVector> gs;
  for (auto [is_mod, idx] : where) {
    if (is_mod) {
      gs.push_back(g_vector(mods[idx]));
    } else {
      IntVector e(op.num_vertices(), 0);
      e[projs[idx]] = -1;
      gs.push_back(std::move(e));
    }
  }
  DualPair d{TauTiltingPair(op, std::move(mods), std::move(projs)), {}};
  for (const auto& g : gs) d.slot_map.push_back(d.pair.slot_of(g));
  return d;
}

}  // namespace detail

/// Mutation without the involutivity check.
inline TauTiltingPair mutate_unchecked(const TauTiltingPair& t, int slot) {
  if (slot < 0 || slot >= t.size()) throw std::out_of_range("slot " + std::to_string(slot) + " out of range");
  if (t.is_module_slot(slot) && !detail::in_fac_of(t.module(slot), t.other_modules(slot)))
    return detail::down_mutation(t, slot);
  auto d = detail::dual_pair(t);
  const int ds = d.slot_map[slot];
  if (!d.pair.is_module_slot(ds) ||
      detail::in_fac_of(d.pair.module(ds), d.pair.other_modules(ds)))
    throw MutationVerificationFailed("slot " + std::to_string(slot) + " of " + to_string(t.key()) +
                                     " is neither down- nor up-mutable");
  auto lower = detail::down_mutation(d.pair, ds);
  return detail::dual_pair(lower).pair;
}

/// Slot of `next` that replaced a summand of `prev`.
inline int exchanged_slot(const TauTiltingPair& prev, const TauTiltingPair& next) {
  int found = -1;
  for (int s = 0; s < next.size(); ++s)
    if (prev.slot_of(next.g_vector_of(s)) < 0) {
      if (found >= 0) return -1;
      found = s;
    }
  return found;
}

/// Mutation at a slot, with postconditions: the result is a tau-tilting
/// pair sharing exactly n-1 summands with t, and mutating it back at the
/// exchanged slot returns t.
inline TauTiltingPair mutate(const TauTiltingPair& t, int slot) {
  TauTiltingPair r = mutate_unchecked(t, slot);
  auto fail = [&](const std::string& what) {
    throw MutationVerificationFailed("mutation of " + to_string(t.key()) + " at slot " + std::to_string(slot) +
                                     ": " + what);
  };
  if (auto defect = pair_defect(r)) fail(*defect);
  if (r.key() == t.key()) fail("result equals the input");
  int ex = exchanged_slot(t, r);
  if (ex < 0) fail("result does not share exactly n-1 summands");
  TauTiltingPair back = mutate_unchecked(r, ex);
  if (back.key() != t.key()) fail("mutation is not involutive");
  return r;
}

struct ExchangeLimits {
  std::size_t max_pairs = 10000;
  int max_depth = 64;
};

enum class GraphStatus { kClosed, kCutoffPairs, kCutoffDepth, kStopped };

struct ExchangeEdge {
  PairKey a, b;  // a < b
  int slot_a = 0, slot_b = 0;
};

struct ExchangeGraph {
  std::map<PairKey, TauTiltingPair> nodes;
  std::map<PairKey, int> depth;
  std::vector<ExchangeEdge> edges;  // sorted by (a, b)
  GraphStatus status = GraphStatus::kClosed;

  bool closed() const { return status == GraphStatus::kClosed; }
};

/// Runs fn(i) for i in [0, count) on up to `threads` workers.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < std::min<std::size_t>(threads, count); ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline unsigned default_threads() {
  unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : h;
}

/// Called with the graph and the sorted keys first reached at each level;
/// returning true stops the traversal with status kStopped.
using LevelVisitor = std::function<bool(const ExchangeGraph&, const std::vector<PairKey>&)>;

/// Breadth-first enumeration of the exchange graph from (A, 0). Each level
/// is expanded in parallel and merged in key order, so the result does not
/// depend on the number of threads.
inline ExchangeGraph exchange_graph(const Algebra& alg, const ExchangeLimits& limits = {},
                                    unsigned threads = default_threads(), const LevelVisitor& visit = {}) {
  if (limits.max_pairs == 0 || limits.max_depth <= 0) throw std::invalid_argument("limits must be positive");
  ExchangeGraph g;
  TauTiltingPair start = initial_pair(alg);
  if (auto defect = pair_defect(start)) throw MutationVerificationFailed("initial pair: " + *defect);
  g.nodes.emplace(start.key(), start);
  g.depth[start.key()] = 0;
  std::map<std::pair<PairKey, PairKey>, ExchangeEdge> edges;
  std::vector<PairKey> frontier{start.key()};
  // (pair, slot) -> neighbour, for mutations already verified as the
  // involutivity check of an earlier edge
  std::map<std::pair<PairKey, int>, PairKey> known;
  const int n = alg.num_vertices();
  auto finish = [&] {
    for (auto& [k, e] : edges) g.edges.push_back(std::move(e));
    return std::move(g);
  };
  for (int level = 0; !frontier.empty(); ++level) {
    if (visit && visit(g, frontier)) {
      g.status = GraphStatus::kStopped;
      return finish();
    }
    std::vector<std::pair<std::size_t, int>> tasks;
    for (std::size_t f = 0; f < frontier.size(); ++f)
      for (int s = 0; s < n; ++s)
        if (!known.count({frontier[f], s})) tasks.emplace_back(f, s);
    std::vector<TauTiltingPair> results(tasks.size());
    parallel_for(tasks.size(), threads, [&](std::size_t i) {
      results[i] = mutate(g.nodes.at(frontier[tasks[i].first]), tasks[i].second);
    });
    std::vector<PairKey> next;
    for (std::size_t i = 0; i < results.size(); ++i) {
      const PairKey& from = frontier[tasks[i].first];
      const int slot = tasks[i].second;
      TauTiltingPair& r = results[i];
      PairKey to = r.key();
      if (!g.nodes.count(to)) {
        if (level + 1 > limits.max_depth) {
          g.status = GraphStatus::kCutoffDepth;
          continue;
        }
        if (g.nodes.size() >= limits.max_pairs) {
          g.status = GraphStatus::kCutoffPairs;
          continue;
        }
        g.depth[to] = level + 1;
        next.push_back(to);
        g.nodes.emplace(to, std::move(r));
      }
      ExchangeEdge e{from, to, slot, exchanged_slot(g.nodes.at(from), g.nodes.at(to))};
      known[{to, e.slot_b}] = from;
      if (e.b < e.a) {
        std::swap(e.a, e.b);
        std::swap(e.slot_a, e.slot_b);
      }
      edges.emplace(std::make_pair(e.a, e.b), std::move(e));
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  return finish();
}

}  // namespace tautilt
