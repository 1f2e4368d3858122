#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tautilt/errors.hpp"
#include "tautilt/rational.hpp"
#include "tautilt/sparse.hpp"

namespace tautilt {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
};

/// One term coef * path of a relation; the path is a list of arrow indices
/// composed left to right (first arrow first).
struct PathTerm {
  Rational coef;
  std::vector<int> word;
};

struct Relation {
  std::vector<PathTerm> terms;
};

/// A path of the normal-form basis of the algebra.
struct BasisPath {
  int source = 0;
  int target = 0;
  std::vector<int> word;  // empty for the trivial path at `source`

  std::size_t length() const { return word.size(); }
};

/// Sparse linear combination of basis indices, sorted by index.
using SparseVec = std::vector<std::pair<int, Rational>>;

/// Path algebra of a quiver modulo an admissible ideal, stored through a
/// basis of normal-form paths and its structure constants.
///
/// Paths compose left to right: p*q is "first p, then q". Instances are
/// immutable; each one owns (or, for the opposite, points back to) its
/// opposite algebra, whose basis is the same set of paths read backwards.
class Algebra {
 public:
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  static constexpr int kDefaultMaxLength = 64;
  static constexpr std::size_t kMaxEnumeratedPaths = 200000;

  static std::shared_ptr<const Algebra> create(Quiver quiver, std::vector<Relation> relations,
                                               int max_length = kDefaultMaxLength);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  int num_vertices() const { return quiver_.num_vertices(); }
  int num_arrows() const { return quiver_.num_arrows(); }
  const Arrow& arrow(int a) const { return quiver_.arrows[a]; }

  std::size_t dim() const { return basis_.size(); }
  const BasisPath& basis(int b) const { return basis_[b]; }
  const std::vector<BasisPath>& basis() const { return basis_; }

  /// Basis indices of paths from s to t, in basis order.
  const std::vector<int>& paths(int s, int t) const { return between_[s][t]; }
  /// Position of basis element b inside paths(source, target).
  int local_index(int b) const { return local_index_[b]; }
  int trivial(int v) const { return trivial_[v]; }
  int arrow_element(int a) const { return arrow_basis_[a]; }

  /// Product of two basis elements as a combination of basis elements.
  const SparseVec& product(int i, int j) const { return table_[static_cast<std::size_t>(i) * basis_.size() + j]; }

  /// Smallest L such that every path of length L vanishes.
  int nilpotency_bound() const { return nilpotency_; }

  const Algebra& opposite() const { return *opposite_; }
  bool is_opposite() const { return is_opposite_; }

  /// Human-readable name of a basis path, e.g. "e1" or "a*b".
  std::string path_name(int b) const {
    const auto& p = basis_[b];
    if (p.word.empty()) return "e" + quiver_.vertices[p.source];
    std::string s;
    for (std::size_t k = 0; k < p.word.size(); ++k) {
      if (k) s += "*";
      s += quiver_.arrows[p.word[k]].name;
    }
    return s;
  }

 private:
  Algebra() = default;
  void build(int max_length);
  void build_opposite();

  Quiver quiver_;
  std::vector<Relation> relations_;
  std::vector<BasisPath> basis_;
  std::vector<std::vector<std::vector<int>>> between_;
  std::vector<int> local_index_;
  std::vector<int> trivial_;
  std::vector<int> arrow_basis_;
  std::vector<SparseVec> table_;
  int nilpotency_ = 0;
  std::unique_ptr<Algebra> owned_opposite_;
  const Algebra* opposite_ = nullptr;
  bool is_opposite_ = false;
};

namespace detail {

struct EnumeratedPath {
  int source;
  int target;
  std::vector<int> word;
};

inline bool word_less(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& name_rank) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return name_rank[a[i]] < name_rank[b[i]];
  return false;
}

inline void validate_relations(const Quiver& q, std::vector<Relation>& rels) {
  for (std::size_t r = 0; r < rels.size(); ++r) {
    auto& rel = rels[r];
    const std::string tag = "relation " + std::to_string(r + 1);
    if (rel.terms.empty()) throw InvalidRelation(tag + " has no terms");
    int s = -1, t = -1;
    for (const auto& term : rel.terms) {
      if (term.word.size() < 2) throw InvalidRelation(tag + " contains a path of length < 2");
      for (std::size_t k = 0; k + 1 < term.word.size(); ++k)
        if (q.arrows[term.word[k]].target != q.arrows[term.word[k + 1]].source)
          throw InvalidRelation(tag + " contains a non-composable path");
      int ts = q.arrows[term.word.front()].source, tt = q.arrows[term.word.back()].target;
      if (s < 0) {
        s = ts;
        t = tt;
      } else if (s != ts || t != tt) {
        throw InvalidRelation(tag + " has non-parallel terms");
      }
    }
    // merge repeated paths
    std::map<std::vector<int>, Rational> merged;
    for (const auto& term : rel.terms) merged[term.word] += term.coef;
    rel.terms.clear();
    for (auto& [w, c] : merged)
      if (sgn(c) != 0) rel.terms.push_back({c, w});
    if (rel.terms.empty()) throw InvalidRelation(tag + " has all coefficients zero");
  }
}

}  // namespace detail

inline std::shared_ptr<const Algebra> Algebra::create(Quiver quiver, std::vector<Relation> relations,
                                                      int max_length) {
  if (quiver.vertices.empty()) throw ParseError("quiver needs at least one vertex");
  {
    std::set<std::string> seen;
    for (const auto& v : quiver.vertices)
      if (!seen.insert(v).second) throw ParseError("duplicate vertex label '" + v + "'");
    std::set<std::string> names;
    for (const auto& a : quiver.arrows) {
      if (!names.insert(a.name).second) throw ParseError("duplicate arrow name '" + a.name + "'");
      if (a.source < 0 || a.source >= quiver.num_vertices() || a.target < 0 || a.target >= quiver.num_vertices())
        throw ParseError("arrow '" + a.name + "' has an endpoint out of range");
    }
  }
  detail::validate_relations(quiver, relations);
  std::shared_ptr<Algebra> a(new Algebra());
  a->quiver_ = std::move(quiver);
  a->relations_ = std::move(relations);
  a->build(max_length);
  a->build_opposite();
  return a;
}

inline void Algebra::build(int max_length) {
  const int n = num_vertices();
  const int m = num_arrows();
  std::vector<int> name_rank(m);
  {
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return quiver_.arrows[x].name < quiver_.arrows[y].name; });
    for (int i = 0; i < m; ++i) name_rank[order[i]] = i;
  }
  std::vector<std::vector<int>> out_arrows(n), in_arrows(n);
  for (int a = 0; a < m; ++a) {
    out_arrows[quiver_.arrows[a].source].push_back(a);
    in_arrows[quiver_.arrows[a].target].push_back(a);
  }

  for (int bound = 1; bound <= max_length; ++bound) {
    // All paths of length <= bound, grouped into (source, target) blocks.
    std::vector<detail::EnumeratedPath> paths;
    for (int v = 0; v < n; ++v) paths.push_back({v, v, {}});
    std::size_t level_begin = 0;
    for (int len = 1; len <= bound; ++len) {
      std::size_t level_end = paths.size();
      for (std::size_t i = level_begin; i < level_end; ++i) {
        for (int a : out_arrows[paths[i].target]) {
          auto w = paths[i].word;
          w.push_back(a);
          paths.push_back({paths[i].source, quiver_.arrows[a].target, std::move(w)});
          if (paths.size() > kMaxEnumeratedPaths)
            throw NotAdmissible("more than " + std::to_string(kMaxEnumeratedPaths) +
                                " paths of length <= " + std::to_string(bound) + " without a nilpotency witness");
        }
      }
      level_begin = level_end;
    }
    std::vector<std::vector<std::vector<int>>> block(n, std::vector<std::vector<int>>(n));
    for (std::size_t i = 0; i < paths.size(); ++i) block[paths[i].source][paths[i].target].push_back(static_cast<int>(i));
    std::map<std::pair<int, std::vector<int>>, std::pair<int, std::uint32_t>> column_of;  // -> (s,t) packed, column
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        auto& ids = block[s][t];
        std::sort(ids.begin(), ids.end(),
                  [&](int x, int y) { return detail::word_less(paths[x].word, paths[y].word, name_rank); });
        for (std::uint32_t c = 0; c < ids.size(); ++c)
          column_of[{s, paths[ids[c]].word}] = {s * n + t, c};
      }
    auto lookup = [&](int s, const std::vector<int>& w) { return column_of.at({s, w}); };

    // Ideal generators u*r*v truncated to length <= bound.
    std::vector<std::vector<SparseEchelon>> ideal;
    ideal.reserve(n);
    for (int s = 0; s < n; ++s) {
      ideal.emplace_back();
      for (int t = 0; t < n; ++t) ideal[s].emplace_back(block[s][t].size());
    }
    for (const auto& rel : relations_) {
      const int rs = quiver_.arrows[rel.terms.front().word.front()].source;
      const int rt = quiver_.arrows[rel.terms.front().word.back()].target;
      std::size_t min_len = SIZE_MAX;
      for (const auto& term : rel.terms) min_len = std::min(min_len, term.word.size());
      if (static_cast<int>(min_len) > bound) continue;
      for (const auto& u : paths) {
        if (u.target != rs || u.word.size() + min_len > static_cast<std::size_t>(bound)) continue;
        for (const auto& v : paths) {
          if (v.source != rt || u.word.size() + min_len + v.word.size() > static_cast<std::size_t>(bound)) continue;
          SparseRow row;
          for (const auto& term : rel.terms) {
            if (u.word.size() + term.word.size() + v.word.size() > static_cast<std::size_t>(bound)) continue;
            std::vector<int> w = u.word;
            w.insert(w.end(), term.word.begin(), term.word.end());
            w.insert(w.end(), v.word.begin(), v.word.end());
            row.emplace_back(lookup(u.source, w).second, term.coef);
          }
          std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
          ideal[u.source][v.target].add(row);
        }
      }
    }

    // Nilpotency witness: every path of length == bound lies in the ideal.
    bool witness = true;
    for (const auto& p : paths) {
      if (static_cast<int>(p.word.size()) != bound) continue;
      if (!ideal[p.source][p.target].is_pivot(lookup(p.source, p.word).second)) {
        witness = false;
        break;
      }
    }
    if (!witness) continue;

    nilpotency_ = bound;
    // Basis: free columns, ordered by (length, lexicographic word, source).
    std::vector<int> basis_ids;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const auto& p = paths[i];
      if (!ideal[p.source][p.target].is_pivot(lookup(p.source, p.word).second)) basis_ids.push_back(static_cast<int>(i));
    }
    std::sort(basis_ids.begin(), basis_ids.end(), [&](int x, int y) {
      const auto& px = paths[x];
      const auto& py = paths[y];
      if (px.word.size() != py.word.size()) return px.word.size() < py.word.size();
      if (px.word.empty()) return px.source < py.source;
      return detail::word_less(px.word, py.word, name_rank);
    });
    basis_.clear();
    std::map<std::pair<int, std::uint32_t>, int> basis_of_column;
    for (int id : basis_ids) {
      const auto& p = paths[id];
      basis_of_column[lookup(p.source, p.word)] = static_cast<int>(basis_.size());
      basis_.push_back({p.source, p.target, p.word});
    }
    between_.assign(n, std::vector<std::vector<int>>(n));
    local_index_.assign(basis_.size(), 0);
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      auto& list = between_[basis_[b].source][basis_[b].target];
      local_index_[b] = static_cast<int>(list.size());
      list.push_back(static_cast<int>(b));
    }
    trivial_.assign(n, -1);
    arrow_basis_.assign(m, -1);
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      if (basis_[b].word.empty()) trivial_[basis_[b].source] = static_cast<int>(b);
      if (basis_[b].word.size() == 1) arrow_basis_[basis_[b].word[0]] = static_cast<int>(b);
    }
    for (int a = 0; a < m; ++a)
      if (arrow_basis_[a] < 0) throw InvalidRelation("arrow '" + quiver_.arrows[a].name + "' lies in the ideal");

    // Normal forms of pivot paths, per block.
    std::vector<std::vector<std::map<std::uint32_t, SparseVec>>> normal(n, std::vector<std::map<std::uint32_t, SparseVec>>(n));
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        for (auto& [pc, row] : ideal[s][t].pivot_normal_forms()) {
          SparseVec v;
          for (auto& [c, coef] : row) v.emplace_back(basis_of_column.at({s * n + t, c}), coef);
          std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
          normal[s][t][pc] = std::move(v);
        }

    const std::size_t d = basis_.size();
    table_.assign(d * d, {});
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        if (basis_[i].target != basis_[j].source) continue;
        std::vector<int> w = basis_[i].word;
        w.insert(w.end(), basis_[j].word.begin(), basis_[j].word.end());
        if (static_cast<int>(w.size()) > bound) continue;
        const int s = basis_[i].source, t = basis_[j].target;
        auto col = lookup(s, w);
        auto it = basis_of_column.find(col);
        if (it != basis_of_column.end())
          table_[i * d + j] = {{it->second, Rational(1)}};
        else
          table_[i * d + j] = normal[s][t].at(col.second);
      }
    return;
  }
  throw NotAdmissible("no nilpotency witness among path lengths <= " + std::to_string(max_length));
}

inline void Algebra::build_opposite() {
  auto op = std::unique_ptr<Algebra>(new Algebra());
  op->quiver_.vertices = quiver_.vertices;
  for (const auto& a : quiver_.arrows) op->quiver_.arrows.push_back({a.name, a.target, a.source});
  for (const auto& r : relations_) {
    Relation rr;
    for (const auto& t : r.terms) rr.terms.push_back({t.coef, std::vector<int>(t.word.rbegin(), t.word.rend())});
    op->relations_.push_back(std::move(rr));
  }
  for (const auto& b : basis_) op->basis_.push_back({b.target, b.source, std::vector<int>(b.word.rbegin(), b.word.rend())});
  const int n = num_vertices();
  op->between_.assign(n, std::vector<std::vector<int>>(n));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) op->between_[s][t] = between_[t][s];
  op->local_index_ = local_index_;
  op->trivial_ = trivial_;
  op->arrow_basis_ = arrow_basis_;
  const std::size_t d = basis_.size();
  op->table_.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) op->table_[i * d + j] = table_[j * d + i];
  op->nilpotency_ = nilpotency_;
  op->is_opposite_ = true;
  op->opposite_ = this;
  opposite_ = op.get();
  owned_opposite_ = std::move(op);
}

/// Parses the JSON presentation document:
///   {"vertices": [...], "arrows": [{"name","from","to"}],
///    "relations": [{"terms": [{"coef": "-1/2", "path": [...]}]}]}
/// Vertex order fixes the indices used by every vector and matrix.
inline std::shared_ptr<const Algebra> parse_algebra(std::string_view text,
                                                    int max_length = Algebra::kDefaultMaxLength) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  auto check_keys = [](const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!obj.is_object()) throw ParseError(where + " must be an object");
    for (const auto& [k, v] : obj.items()) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || k == a;
      if (!ok) throw ParseError("unknown key '" + k + "' in " + where);
    }
  };
  check_keys(doc, {"vertices", "arrows", "relations"}, "document");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw ParseError("'vertices' must be an array");

  Quiver q;
  std::map<std::string, int> vertex_index;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw ParseError("vertex labels must be strings");
    auto label = v.get<std::string>();
    if (vertex_index.count(label)) throw ParseError("duplicate vertex label '" + label + "'");
    vertex_index[label] = q.num_vertices();
    q.vertices.push_back(label);
  }
  std::map<std::string, int> arrow_index;
  if (doc.contains("arrows")) {
    if (!doc["arrows"].is_array()) throw ParseError("'arrows' must be an array");
    for (const auto& a : doc["arrows"]) {
      check_keys(a, {"name", "from", "to"}, "arrow");
      for (const char* k : {"name", "from", "to"})
        if (!a.contains(k) || !a[k].is_string()) throw ParseError(std::string("arrow field '") + k + "' must be a string");
      auto name = a["name"].get<std::string>();
      auto from = a["from"].get<std::string>(), to = a["to"].get<std::string>();
      if (!vertex_index.count(from) || !vertex_index.count(to))
        throw ParseError("arrow '" + name + "' refers to an unknown vertex");
      if (arrow_index.count(name)) throw ParseError("duplicate arrow name '" + name + "'");
      arrow_index[name] = q.num_arrows();
      q.arrows.push_back({name, vertex_index[from], vertex_index[to]});
    }
  }
  std::vector<Relation> rels;
  if (doc.contains("relations")) {
    if (!doc["relations"].is_array()) throw ParseError("'relations' must be an array");
    for (const auto& r : doc["relations"]) {
      check_keys(r, {"terms"}, "relation");
      if (!r.contains("terms") || !r["terms"].is_array()) throw ParseError("relation needs a 'terms' array");
      Relation rel;
      for (const auto& t : r["terms"]) {
        check_keys(t, {"coef", "path"}, "term");
        if (!t.contains("coef") || !t.contains("path") || !t["path"].is_array())
          throw ParseError("term needs 'coef' and 'path'");
        PathTerm term;
        try {
          if (t["coef"].is_string())
            term.coef = parse_rational(t["coef"].get<std::string>());
          else if (t["coef"].is_number_integer())
            term.coef = Rational(t["coef"].get<long>());
          else
            throw ParseError("coefficient must be a rational string");
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what());
        }
        for (const auto& name : t["path"]) {
          if (!name.is_string() || !arrow_index.count(name.get<std::string>()))
            throw ParseError("relation path uses an unknown arrow");
          term.word.push_back(arrow_index[name.get<std::string>()]);
        }
        rel.terms.push_back(std::move(term));
      }
      rels.push_back(std::move(rel));
    }
  }
  return Algebra::create(std::move(q), std::move(rels), max_length);
}

}  // namespace tautilt
