#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tautilt/bricks.hpp"
#include "tautilt/errors.hpp"
#include "tautilt/gc_vectors.hpp"
#include "tautilt/tau_tilting.hpp"

namespace tautilt {

struct AnalysisOptions {
  ExchangeLimits limits;
  unsigned threads = default_threads();
  bool bricks = true;
  int ar_samples = 0;
  std::uint64_t seed = 0;
};

struct CheckTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct AlgebraDigest {
  std::vector<std::string> vertices;
  std::size_t dimension = 0;
  IntVector delta;
  std::int64_t delta_max = 1;
};

struct PairReport {
  PairKey key;
  int depth = 0;
  IntMatrix g, c;
  std::vector<BrickCertificate> bricks;  // one per slot when computed
};

struct EdgeReport {
  PairKey a, b;
  int slot_a = 0, slot_b = 0;
  std::optional<IntVector> label;
};

struct AnalysisReport {
  AlgebraDigest algebra;
  ExchangeGraph graph;
  std::vector<PairReport> pairs;  // in key order
  std::vector<EdgeReport> edges;
  std::optional<std::int64_t> max_brick_length;
  std::vector<std::pair<std::string, CheckTally>> checks;
  std::vector<std::string> failures;

  GraphStatus status() const { return graph.status; }
  bool tau_tilting_finite() const { return graph.closed(); }
  bool all_passed() const { return failures.empty(); }

  CheckTally& tally(const std::string& name) {
    for (auto& [n, t] : checks)
      if (n == name) return t;
    checks.emplace_back(name, CheckTally{});
    return checks.back().second;
  }
};

inline AlgebraDigest digest(const Algebra& alg) {
  AlgebraDigest d;
  d.vertices = alg.quiver().vertices;
  d.dimension = alg.dim();
  d.delta = d_vector(alg);
  d.delta_max = *std::max_element(d.delta.begin(), d.delta.end());
  return d;
}

inline std::string to_string(GraphStatus s) {
  switch (s) {
    case GraphStatus::kClosed:
      return "closed";
    case GraphStatus::kCutoffPairs:
      return "cutoff_pairs";
    case GraphStatus::kCutoffDepth:
      return "cutoff_depth";
    case GraphStatus::kStopped:
      return "stopped";
  }
  return "unknown";
}

namespace detail {

inline void record(AnalysisReport& r, const std::string& check, const std::optional<std::string>& failure) {
  auto& t = r.tally(check);
  if (failure) {
    ++t.failed;
    r.failures.push_back(check + ": " + *failure);
  } else {
    ++t.passed;
  }
}

inline bool is_nonzero(const IntVector& v) {
  return std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
}

inline std::size_t shared_slots(const PairKey& a, const PairKey& b) {
  std::size_t n = 0;
  for (const auto& g : a)
    if (std::binary_search(b.begin(), b.end(), g)) ++n;
  return n;
}

struct PairOutcome {
  IntMatrix g, c;
  std::vector<BrickCertificate> bricks;
  std::vector<std::pair<std::string, std::optional<std::string>>> results;
};

inline PairOutcome analyze_pair(const TauTiltingPair& t, const std::map<std::pair<PairKey, int>, PairKey>& neighbours,
                                const ExchangeGraph& graph, bool with_bricks) {
  PairOutcome out;
  const std::string where = "pair " + to_string(t.key());
  const int n = t.size();
  out.g = g_matrix(t);
  try {
    out.c = c_matrix(out.g);
  } catch (const std::exception& e) {
    out.results.emplace_back("c_inverse_transpose", where + ": " + e.what());
    return out;
  }
  IntVector ones(n, 1);
  out.results.emplace_back("c_inverse_transpose", out.c * out.g.transpose() == diagonal(ones)
                                                      ? std::nullopt
                                                      : std::optional<std::string>(where + ": C G^T != I"));
  for (int s = 0; s < n; ++s) {
    IntVector col = out.c.column(s);
    bool ok = is_nonzero(col) && is_sign_coherent(col);
    out.results.emplace_back("sign_coherence", ok ? std::nullopt
                                                  : std::optional<std::string>(where + " slot " + std::to_string(s + 1) +
                                                                               ": c-vector " + to_string(col)));
  }
  if (!with_bricks) return out;
  bool complete = true;
  for (int s = 0; s < n; ++s) {
    try {
      auto it = neighbours.find({t.key(), s});
      out.bricks.push_back(it != neighbours.end() ? brick_for_slot(t, s, graph.nodes.at(it->second))
                                                  : brick_for_slot(t, s));
      out.results.emplace_back("brick_certificates", std::nullopt);
    } catch (const Error& e) {
      complete = false;
      out.results.emplace_back("brick_certificates", where + " slot " + std::to_string(s + 1) + ": " + e.what());
    }
  }
  if (complete) {
    try {
      x_matrix(t, out.bricks);
      out.results.emplace_back("x_matrix", std::nullopt);
    } catch (const Error& e) {
      out.results.emplace_back("x_matrix", std::string(e.what()));
    }
  } else {
    out.bricks.clear();
  }
  return out;
}

}  // namespace detail

/// Distinct indecomposable modules occurring as summands of the pairs of
/// the graph, ordered by g-vector.
inline std::vector<Representation> enumerated_indecomposables(const ExchangeGraph& g) {
  std::map<IntVector, const Representation*> seen;
  for (const auto& [k, t] : g.nodes)
    for (int s = 0; s < t.num_modules(); ++s) seen.emplace(t.g_vector_of(s), &t.module(s));
  std::vector<Representation> out;
  for (const auto& [gv, m] : seen) out.push_back(*m);
  return out;
}

struct ArSample {
  std::vector<std::size_t> m, n;  // indices into the pool
};

/// K seeded random pairs of direct sums of 1 to 3 pool modules each.
inline std::vector<ArSample> draw_ar_samples(std::size_t pool, int count, std::uint64_t seed) {
  std::vector<ArSample> out;
  if (pool == 0) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(1, 3);
  std::uniform_int_distribution<std::size_t> pick(0, pool - 1);
  for (int k = 0; k < count; ++k) {
    ArSample s;
    for (int i = len(rng); i > 0; --i) s.m.push_back(pick(rng));
    for (int i = len(rng); i > 0; --i) s.n.push_back(pick(rng));
    out.push_back(std::move(s));
  }
  return out;
}

inline Representation sum_of(const std::vector<Representation>& pool, const std::vector<std::size_t>& idx) {
  std::vector<Representation> parts;
  for (auto i : idx) parts.push_back(pool[i]);
  return direct_sum(parts);
}

/// Enumerates the exchange graph and runs every verification sweep. Each
/// pair is processed independently and merged in key order.
inline AnalysisReport analyze(const Algebra& alg, const AnalysisOptions& opt = {}) {
  AnalysisReport r;
  r.algebra = digest(alg);
  for (const char* name : {"c_inverse_transpose", "sign_coherence"}) r.tally(name);
  if (opt.bricks)
    for (const char* name : {"brick_certificates", "x_matrix", "edge_labels"}) r.tally(name);
  r.graph = exchange_graph(alg, opt.limits, opt.threads);
  const ExchangeGraph& g = r.graph;
  const int n = alg.num_vertices();

  std::map<std::pair<PairKey, int>, PairKey> neighbours;
  for (const auto& e : g.edges) {
    neighbours[{e.a, e.slot_a}] = e.b;
    neighbours[{e.b, e.slot_b}] = e.a;
  }
  std::vector<const TauTiltingPair*> order;
  for (const auto& [k, t] : g.nodes) order.push_back(&t);
  std::vector<detail::PairOutcome> outcomes(order.size());
  parallel_for(order.size(), opt.threads,
               [&](std::size_t i) { outcomes[i] = detail::analyze_pair(*order[i], neighbours, g, opt.bricks); });
  std::map<PairKey, std::size_t> index;
  for (std::size_t i = 0; i < order.size(); ++i) {
    PairReport p;
    p.key = order[i]->key();
    p.depth = g.depth.at(p.key);
    p.g = std::move(outcomes[i].g);
    p.c = std::move(outcomes[i].c);
    p.bricks = std::move(outcomes[i].bricks);
    for (const auto& [check, failure] : outcomes[i].results) detail::record(r, check, failure);
    for (const auto& b : p.bricks)
      r.max_brick_length = std::max(r.max_brick_length.value_or(0), b.composition_length());
    index[p.key] = i;
    r.pairs.push_back(std::move(p));
  }

  std::vector<std::optional<std::string>> edge_failures(g.edges.size());
  for (const auto& e : g.edges) {
    EdgeReport er{e.a, e.b, e.slot_a, e.slot_b, std::nullopt};
    const auto& ba = r.pairs[index.at(e.a)].bricks;
    if (!ba.empty()) er.label = ba[e.slot_a].dimension_vector;
    r.edges.push_back(std::move(er));
  }
  if (opt.bricks) {
    parallel_for(g.edges.size(), opt.threads, [&](std::size_t i) {
      const auto& e = g.edges[i];
      const auto& ba = r.pairs[index.at(e.a)].bricks;
      const auto& bb = r.pairs[index.at(e.b)].bricks;
      const std::string where = "edge " + to_string(e.a) + " -- " + to_string(e.b);
      if (ba.empty() || bb.empty()) {
        edge_failures[i] = where + ": missing certificate";
        return;
      }
      const auto& ca = ba[e.slot_a];
      const auto& cb = bb[e.slot_b];
      IntVector neg;
      for (auto x : cb.c_vector) neg.push_back(-x);
      if (ca.c_vector != neg)
        edge_failures[i] = where + ": c-vectors are not opposite";
      else if (!is_isomorphic(ca.brick, cb.brick))
        edge_failures[i] = where + ": endpoint bricks differ";
    });
    for (const auto& f : edge_failures) detail::record(r, "edge_labels", f);
  }

  if (g.closed()) {
    for (const char* name : {"involutivity", "shared_summands", "regularity", "connectivity"}) r.tally(name);
    std::vector<std::optional<std::string>> inv(g.edges.size());
    parallel_for(g.edges.size(), opt.threads, [&](std::size_t i) {
      const auto& e = g.edges[i];
      if (mutate_unchecked(g.nodes.at(e.a), e.slot_a).key() != e.b ||
          mutate_unchecked(g.nodes.at(e.b), e.slot_b).key() != e.a)
        inv[i] = "edge " + to_string(e.a) + " -- " + to_string(e.b);
    });
    for (const auto& f : inv) detail::record(r, "involutivity", f);
    std::map<PairKey, int> degree;
    std::map<PairKey, std::vector<PairKey>> adj;
    for (const auto& e : g.edges) {
      std::size_t shared = detail::shared_slots(e.a, e.b);
      detail::record(r, "shared_summands",
                     shared == static_cast<std::size_t>(n - 1)
                         ? std::nullopt
                         : std::optional<std::string>("edge " + to_string(e.a) + " -- " + to_string(e.b) + " shares " +
                                                      std::to_string(shared)));
      ++degree[e.a];
      ++degree[e.b];
      adj[e.a].push_back(e.b);
      adj[e.b].push_back(e.a);
    }
    for (const auto& [k, t] : g.nodes) {
      int d = degree.count(k) ? degree.at(k) : 0;
      detail::record(r, "regularity",
                     d == n ? std::nullopt
                            : std::optional<std::string>("pair " + to_string(k) + " has degree " + std::to_string(d)));
    }
    std::set<PairKey> reached{g.nodes.begin()->first};
    std::vector<PairKey> stack{g.nodes.begin()->first};
    while (!stack.empty()) {
      PairKey k = std::move(stack.back());
      stack.pop_back();
      for (const auto& nb : adj[k])
        if (reached.insert(nb).second) stack.push_back(nb);
    }
    detail::record(r, "connectivity",
                   reached.size() == g.nodes.size()
                       ? std::nullopt
                       : std::optional<std::string>(std::to_string(g.nodes.size() - reached.size()) + " pairs unreached"));
  }

  if (opt.ar_samples > 0) {
    r.tally("ar_formula");
    auto pool = enumerated_indecomposables(g);
    auto samples = draw_ar_samples(pool.size(), opt.ar_samples, opt.seed);
    std::vector<std::optional<std::string>> res(samples.size());
    parallel_for(samples.size(), opt.threads, [&](std::size_t i) {
      Representation m = sum_of(pool, samples[i].m);
      Representation nn = sum_of(pool, samples[i].n);
      auto c = verify_ar_formula(m, nn);
      if (!c.equal)
        res[i] = "sample " + std::to_string(i + 1) + ": M " + to_string(dimension_vector(m)) + ", N " +
                 to_string(dimension_vector(nn)) + ": " + std::to_string(c.lhs) + " != " + std::to_string(c.rhs);
    });
    for (const auto& f : res) detail::record(r, "ar_formula", f);
  }
  return r;
}

enum class LongBrickOutcome { kFound, kNotFound };

struct LongBrickResult {
  std::int64_t target = 0;
  LongBrickOutcome outcome = LongBrickOutcome::kNotFound;
  std::optional<BrickCertificate> certificate;
  std::int64_t length = 0;
  IntVector c_vector;
  PairKey pair;
  int slot = 0;
  std::size_t pairs_explored = 0;
};

/// Scans c-vectors in BFS order for one with sum |c_i| >= delta_A t; the
/// brick of that slot then has at least t composition factors. A closed
/// graph without a hit proves that no such brick exists.
inline LongBrickResult find_long_brick(const Algebra& alg, std::int64_t t, const ExchangeLimits& limits = {},
                                       unsigned threads = default_threads()) {
  if (t < 1) throw std::invalid_argument("target length must be positive");
  const std::int64_t bound = digest(alg).delta_max * t;
  std::set<IntVector> seen;
  std::optional<std::pair<PairKey, int>> hit;
  IntVector hit_c;
  auto visit = [&](const ExchangeGraph& g, const std::vector<PairKey>& level) {
    for (const auto& k : level) {
      IntMatrix c = c_matrix(g.nodes.at(k));
      for (std::size_t s = 0; s < c.cols(); ++s) {
        IntVector col = c.column(s);
        if (!seen.insert(col).second) continue;
        std::int64_t sum = 0;
        for (auto x : col) sum += x < 0 ? -x : x;
        if (sum >= bound) {
          hit = {k, static_cast<int>(s)};
          hit_c = col;
          return true;
        }
      }
    }
    return false;
  };
  ExchangeGraph g = exchange_graph(alg, limits, threads, visit);
  LongBrickResult r;
  r.target = t;
  r.pairs_explored = g.nodes.size();
  if (!hit) {
    if (g.closed()) return r;
    throw CutoffReached("no c-vector with sum |c_i| >= " + std::to_string(bound) + " among " +
                        std::to_string(g.nodes.size()) + " pairs");
  }
  const TauTiltingPair& p = g.nodes.at(hit->first);
  r.outcome = LongBrickOutcome::kFound;
  r.certificate = brick_for_slot(p, hit->second);
  r.length = r.certificate->composition_length();
  r.c_vector = hit_c;
  r.pair = hit->first;
  r.slot = hit->second;
  if (r.length < t)
    throw BrickVerificationFailed("brick " + to_string(r.certificate->dimension_vector) + " is shorter than " +
                                  std::to_string(t));
  return r;
}

inline std::string pair_label(const PairKey& k) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? " " : "") + to_string(k[i]);
  return s;
}

/// Exchange graph in DOT: nodes labelled by sorted g-vectors, edges by the
/// dimension vector of their brick when known.
inline std::string export_dot(const AnalysisReport& r) {
  std::map<PairKey, std::size_t> id;
  for (const auto& p : r.pairs) id.emplace(p.key, id.size());
  std::ostringstream out;
  out << "graph exchange {\n  node [shape=box];\n";
  for (const auto& p : r.pairs) out << "  n" << id.at(p.key) << " [label=\"" << pair_label(p.key) << "\"];\n";
  for (const auto& e : r.edges) {
    out << "  n" << id.at(e.a) << " -- n" << id.at(e.b);
    if (e.label) out << " [label=\"" << to_string(*e.label) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

using Json = nlohmann::ordered_json;

inline Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

inline Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    a.push_back(std::move(row));
  }
  return a;
}

inline Json to_json(const PairKey& k) {
  Json a = Json::array();
  for (const auto& g : k) a.push_back(to_json(g));
  return a;
}

inline Json to_json(const BrickCertificate& c) {
  Json j;
  j["slot"] = c.slot + 1;
  j["dimension_vector"] = to_json(c.dimension_vector);
  j["length"] = c.composition_length();
  j["multiplier"] = c.multiplier;
  j["c_vector"] = to_json(c.c_vector);
  j["end_dim"] = c.evidence.end_dim;
  return j;
}

inline Json to_json(const AnalysisReport& r) {
  Json j;
  Json alg;
  alg["vertices"] = r.algebra.vertices;
  alg["dimension"] = r.algebra.dimension;
  alg["delta"] = to_json(r.algebra.delta);
  alg["delta_max"] = r.algebra.delta_max;
  j["algebra"] = std::move(alg);
  j["status"] = to_string(r.status());
  j["tau_tilting_finite"] = r.tau_tilting_finite() ? Json(true) : Json(nullptr);
  j["pair_count"] = r.pairs.size();
  j["edge_count"] = r.edges.size();
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json pj;
    pj["key"] = to_json(p.key);
    pj["depth"] = p.depth;
    const TauTiltingPair& t = r.graph.nodes.at(p.key);
    Json summands = Json::array();
    for (int s = 0; s < t.size(); ++s) {
      Json sj;
      sj["slot"] = s + 1;
      if (t.is_module_slot(s)) {
        sj["kind"] = "module";
        sj["dimension_vector"] = to_json(dimension_vector(t.module(s)));
      } else {
        sj["kind"] = "shifted_projective";
        sj["vertex"] = r.algebra.vertices[t.projective_vertex(s)];
      }
      summands.push_back(std::move(sj));
    }
    pj["summands"] = std::move(summands);
    pj["g_matrix"] = to_json(p.g);
    pj["c_matrix"] = to_json(p.c);
    if (!p.bricks.empty()) {
      Json bj = Json::array();
      for (const auto& b : p.bricks) bj.push_back(to_json(b));
      pj["bricks"] = std::move(bj);
    }
    pairs.push_back(std::move(pj));
  }
  j["pairs"] = std::move(pairs);
  Json edges = Json::array();
  for (const auto& e : r.edges) {
    Json ej;
    ej["a"] = to_json(e.a);
    ej["b"] = to_json(e.b);
    ej["slot_a"] = e.slot_a + 1;
    ej["slot_b"] = e.slot_b + 1;
    if (e.label) ej["brick"] = to_json(*e.label);
    edges.push_back(std::move(ej));
  }
  j["edges"] = std::move(edges);
  j["max_brick_length"] = r.max_brick_length ? Json(*r.max_brick_length) : Json(nullptr);
  Json checks;
  for (const auto& [name, t] : r.checks) checks[name] = Json{{"passed", t.passed}, {"failed", t.failed}};
  j["checks"] = std::move(checks);
  j["failures"] = r.failures;
  return j;
}

inline std::string export_json(const AnalysisReport& r) { return to_json(r).dump(2) + "\n"; }

inline Json to_json(const LongBrickResult& r) {
  Json j;
  j["target"] = r.target;
  j["found"] = r.outcome == LongBrickOutcome::kFound;
  j["pairs_explored"] = r.pairs_explored;
  if (r.certificate) {
    j["pair"] = to_json(r.pair);
    j["slot"] = r.slot + 1;
    j["c_vector"] = to_json(r.c_vector);
    j["brick"] = to_json(*r.certificate);
  }
  return j;
}

}  // namespace tautilt
