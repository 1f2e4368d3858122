#pragma once

// Brute-force count of support tau-tilting pairs of a hereditary algebra of
// finite type. Indecomposables are found as generic representations with
// trivial endomorphisms over all dimension vectors below the maximal root;
// rigidity uses dim Ext^1(X, Y) = dim Hom(X, Y) - <x, y> with the Euler form.
// Only the exact linear algebra of matrix.hpp is shared with the library.

#include <fstream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tautilt/matrix.hpp"

namespace tautilt::oracle {

struct Quiver {
  int n = 0;
  std::vector<std::pair<int, int>> arrows;  // (source, target)
};

inline Quiver read_quiver(const std::string& path) {
  std::ifstream in(path);
  auto doc = nlohmann::json::parse(in);
  Quiver q;
  std::vector<std::string> labels = doc.at("vertices").get<std::vector<std::string>>();
  q.n = static_cast<int>(labels.size());
  auto index = [&](const std::string& l) {
    for (int i = 0; i < q.n; ++i)
      if (labels[i] == l) return i;
    throw std::runtime_error("unknown vertex " + l);
  };
  for (const auto& a : doc.at("arrows")) q.arrows.emplace_back(index(a.at("from")), index(a.at("to")));
  if (!doc.at("relations").empty()) throw std::runtime_error("oracle handles path algebras only");
  return q;
}

struct Rep {
  std::vector<int> d;
  std::vector<Matrix> maps;  // maps[a] : d[source] -> d[target]
};

inline int hom_dim(const Quiver& q, const Rep& x, const Rep& y) {
  // unknown f_i is a y_i x x_i matrix, stored row-major after f_0..f_{i-1}
  std::vector<std::size_t> off(q.n + 1, 0);
  for (int i = 0; i < q.n; ++i) off[i + 1] = off[i] + static_cast<std::size_t>(y.d[i]) * x.d[i];
  std::size_t rows = 0;
  for (const auto& [s, t] : q.arrows) rows += static_cast<std::size_t>(y.d[t]) * x.d[s];
  Matrix eq(rows, off[q.n]);
  std::size_t r = 0;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto [s, t] = q.arrows[a];
    // (Y_a f_s - f_t X_a)(p, c) = 0
    for (int p = 0; p < y.d[t]; ++p)
      for (int c = 0; c < x.d[s]; ++c, ++r) {
        for (int k = 0; k < y.d[s]; ++k) eq(r, off[s] + k * x.d[s] + c) += y.maps[a](p, k);
        for (int k = 0; k < x.d[t]; ++k) eq(r, off[t] + p * x.d[t] + k) -= x.maps[a](k, c);
      }
  }
  return static_cast<int>(off[q.n] - rank(eq));
}

inline int euler(const Quiver& q, const std::vector<int>& x, const std::vector<int>& y) {
  int e = 0;
  for (int i = 0; i < q.n; ++i) e += x[i] * y[i];
  for (const auto& [s, t] : q.arrows) e -= x[s] * y[t];
  return e;
}

inline int ext_dim(const Quiver& q, const Rep& x, const Rep& y) { return hom_dim(q, x, y) - euler(q, x.d, y.d); }

inline std::vector<Rep> indecomposables(const Quiver& q, const std::vector<int>& max_root, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::vector<Rep> out;
  std::vector<int> d(q.n, 0);
  while (true) {
    int i = 0;
    while (i < q.n && d[i] == max_root[i]) d[i++] = 0;
    if (i == q.n) break;
    ++d[i];
    for (int attempt = 0; attempt < 8; ++attempt) {
      Rep x{d, {}};
      for (const auto& [s, t] : q.arrows) {
        Matrix m(d[t], d[s]);
        for (int p = 0; p < d[t]; ++p)
          for (int c = 0; c < d[s]; ++c) m(p, c) = entry(rng);
        x.maps.push_back(std::move(m));
      }
      if (hom_dim(q, x, x) == 1) {
        out.push_back(std::move(x));
        break;
      }
    }
  }
  return out;
}

/// Number of n-element sets of pairwise compatible objects among the
/// indecomposables and the shifted projectives P(i)[1].
inline std::size_t count_pairs(const Quiver& q, const std::vector<int>& max_root, std::uint64_t seed = 1) {
  auto mods = indecomposables(q, max_root, seed);
  const std::size_t m = mods.size(), total = m + q.n;
  std::vector<std::vector<char>> ok(total, std::vector<char>(total, 0));
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = a + 1; b < total; ++b) {
      bool c;
      if (a < m && b < m)
        c = ext_dim(q, mods[a], mods[b]) == 0 && ext_dim(q, mods[b], mods[a]) == 0;
      else if (a < m)
        c = mods[a].d[b - m] == 0;
      else
        c = true;
      ok[a][b] = ok[b][a] = c;
    }
  std::vector<char> rigid(total, 1);
  for (std::size_t a = 0; a < m; ++a) rigid[a] = ext_dim(q, mods[a], mods[a]) == 0;
  std::size_t count = 0;
  std::vector<std::size_t> chosen;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (chosen.size() == static_cast<std::size_t>(q.n)) {
      ++count;
      return;
    }
    for (std::size_t v = from; v < total; ++v) {
      if (!rigid[v]) continue;
      bool fits = true;
      for (auto u : chosen) fits = fits && ok[u][v];
      if (!fits) continue;
      chosen.push_back(v);
      self(self, v + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return count;
}

}  // namespace tautilt::oracle
