#pragma once

#include <cstddef>
#include <algorithm>
#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "tautilt/matrix.hpp"
#include "tautilt/rational.hpp"

namespace tautilt {

using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

/// Incremental sparse row echelon form over Q.
///
/// Rows are reduced against earlier pivots on insertion only, so row k never
/// contains the pivot column of a row inserted before it. Null space vectors
/// are recovered by back substitution in reverse insertion order.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t ncols) : ncols_(ncols), pivot_of_col_(ncols, -1), acc_(ncols), flags_(ncols, 0) {}

  std::size_t cols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t nullity() const { return ncols_ - rows_.size(); }

  /// Inserts a row; returns true if it increased the rank.
  bool add(const SparseRow& row) {
    std::priority_queue<int, std::vector<int>, std::greater<>> pending;
    for (const auto& [c, v] : row) {
      if (sgn(v) == 0) continue;
      if (touched_flag(c)) {
        acc_[c] += v;
      } else {
        acc_[c] = v;
        touched_.push_back(c);
        flags_[c] = 1;
      }
      if (pivot_of_col_[c] >= 0) pending.push(pivot_of_col_[c]);
    }
    Rational t;
    int last = -1;
    while (!pending.empty()) {
      int k = pending.top();
      pending.pop();
      if (k == last) continue;
      last = k;
      const auto& prow = rows_[k];
      std::uint32_t pc = pivots_[k];
      if (sgn(acc_[pc]) == 0) continue;
      Rational f = acc_[pc];
      for (const auto& [c, v] : prow) {
        mpq_mul(t.get_mpq_t(), f.get_mpq_t(), v.get_mpq_t());
        if (touched_flag(c)) {
          acc_[c] -= t;
        } else {
          acc_[c] = -t;
          touched_.push_back(c);
          flags_[c] = 1;
        }
        if (c != pc && pivot_of_col_[c] >= 0) pending.push(pivot_of_col_[c]);
      }
    }
    SparseRow out;
    std::uint32_t piv = UINT32_MAX;
    for (auto c : touched_) {
      if (sgn(acc_[c]) != 0) {
        out.emplace_back(c, acc_[c]);
        if (c < piv) piv = c;
      }
      flags_[c] = 0;
    }
    touched_.clear();
    if (out.empty()) return false;
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Rational inv;
    for (auto& [c, v] : out)
      if (c == piv) inv = 1 / v;
    for (auto& [c, v] : out) v *= inv;
    pivot_of_col_[piv] = static_cast<int>(rows_.size());
    pivots_.push_back(piv);
    rows_.push_back(std::move(out));
    return true;
  }

  bool is_pivot(std::uint32_t c) const { return pivot_of_col_[c] >= 0; }

  /// For every pivot column, its value expressed through free columns when
  /// all free columns are treated as independent: pivot = sum coef * free.
  /// Entries are sorted by column.
  std::vector<std::pair<std::uint32_t, SparseRow>> pivot_normal_forms() const {
    std::vector<SparseRow> nf(rows_.size());
    Rational t;
    for (std::size_t r = rows_.size(); r-- > 0;) {
      std::vector<std::pair<std::uint32_t, Rational>> acc;
      for (const auto& [c, v] : rows_[r]) {
        if (c == pivots_[r]) continue;
        int k = pivot_of_col_[c];
        if (k < 0) {
          acc.emplace_back(c, -v);
        } else {
          for (const auto& [fc, fv] : nf[k]) {
            mpq_mul(t.get_mpq_t(), v.get_mpq_t(), fv.get_mpq_t());
            acc.emplace_back(fc, -t);
          }
        }
      }
      std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      SparseRow merged;
      for (auto& [c, v] : acc) {
        if (!merged.empty() && merged.back().first == c)
          merged.back().second += v;
        else
          merged.emplace_back(c, std::move(v));
      }
      std::erase_if(merged, [](const auto& e) { return sgn(e.second) == 0; });
      nf[r] = std::move(merged);
    }
    std::vector<std::pair<std::uint32_t, SparseRow>> out;
    for (std::size_t r = 0; r < rows_.size(); ++r) out.emplace_back(pivots_[r], std::move(nf[r]));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  /// Null space basis; column k has a 1 at the k-th free column.
  Matrix nullspace() const {
    std::vector<std::uint32_t> free_cols;
    for (std::uint32_t c = 0; c < ncols_; ++c)
      if (pivot_of_col_[c] < 0) free_cols.push_back(c);
    Matrix n(ncols_, free_cols.size());
    std::vector<Rational> x(ncols_);
    Rational t;
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
      for (auto& v : x) v = 0;
      x[free_cols[k]] = 1;
      for (std::size_t r = rows_.size(); r-- > 0;) {
        Rational s;
        for (const auto& [c, v] : rows_[r]) {
          if (c == pivots_[r] || sgn(x[c]) == 0) continue;
          mpq_mul(t.get_mpq_t(), v.get_mpq_t(), x[c].get_mpq_t());
          s -= t;
        }
        x[pivots_[r]] = s;
      }
      for (std::size_t i = 0; i < ncols_; ++i) n(i, k) = x[i];
    }
    return n;
  }

 private:
  bool touched_flag(std::uint32_t c) const { return flags_[c] != 0; }

  std::size_t ncols_;
  std::vector<int> pivot_of_col_;
  std::vector<std::uint32_t> pivots_;
  std::vector<SparseRow> rows_;
  std::vector<Rational> acc_;
  std::vector<std::uint32_t> touched_;
  std::vector<char> flags_;
};

}  // namespace tautilt
