#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tautilt/errors.hpp"
#include "tautilt/rational.hpp"

namespace tautilt {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      assert(cols[j].size() == rows);
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<Rational> column(std::size_t j) const {
    std::vector<Rational> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix select_rows(std::span<const std::size_t> idx) const {
    Matrix m(idx.size(), cols_);
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t j = 0; j < cols_; ++j) m(r, j) = (*this)(idx[r], j);
    return m;
  }

  Matrix select_cols(std::span<const std::size_t> idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t c = 0; c < idx.size(); ++c) m(i, c) = (*this)(i, idx[c]);
    return m;
  }

  std::size_t nonzeros() const {
    return static_cast<std::size_t>(
        std::count_if(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) != 0; }));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    Rational t;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b(k, j);
          if (sgn(bkj) == 0) continue;
          mpq_mul(t.get_mpq_t(), aik.get_mpq_t(), bkj.get_mpq_t());
          c(i, j) += t;
        }
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const Rational& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  std::vector<Rational> apply(std::span<const Rational> v) const {
    assert(v.size() == cols_);
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Rational trace() const {
    Rational t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Horizontal concatenation; all blocks must share the row count `rows`.
inline Matrix hstack(std::size_t rows, std::span<const Matrix> blocks) {
  std::size_t cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  Matrix m(rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    assert(b.rows() == rows || b.cols() == 0);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, off + j) = b(i, j);
    off += b.cols();
  }
  return m;
}

inline Matrix vstack(std::size_t cols, std::span<const Matrix> blocks) {
  std::size_t rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Matrix m(rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    assert(b.cols() == cols || b.rows() == 0);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, j) = b(i, j);
    off += b.rows();
  }
  return m;
}

inline Matrix block_diag(std::span<const Matrix> blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix m(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

/// Reduces `m` in place to reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref_inplace(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Rational t, f;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = c; j < m.cols(); ++j) swap(m(p, j), m(r, j));
    if (m(r, c) != 1) {
      Rational inv = 1 / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        const Rational& rj = m(r, j);
        if (sgn(rj) == 0) continue;
        mpq_mul(t.get_mpq_t(), f.get_mpq_t(), rj.get_mpq_t());
        m(i, j) -= t;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Matrix m) { return rref_inplace(m).size(); }

/// Basis of the right null space, one basis vector per column.
inline Matrix nullspace(const Matrix& a) {
  Matrix r = a;
  auto pivots = rref_inplace(r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix n(a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    n(free_cols[k], k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) n(pivots[i], k) = -r(i, free_cols[k]);
  }
  return n;
}

inline Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Rational det = 1, t;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) {
        if (sgn(m(c, j)) == 0) continue;
        mpq_mul(t.get_mpq_t(), f.get_mpq_t(), m(c, j).get_mpq_t());
        m(i, j) -= t;
      }
    }
  }
  return det;
}

inline bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

inline Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref_inplace(aug);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) throw std::domain_error("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// A linear subspace of Q^d stored in reduced column echelon form: the basis
/// restricted to `pivot_rows` is the identity, so coordinates of a vector in
/// the subspace are its entries at `pivot_rows`.
struct Subspace {
  std::size_t ambient = 0;
  Matrix basis;  // ambient x dim
  std::vector<std::size_t> pivot_rows;

  std::size_t dim() const { return pivot_rows.size(); }

  /// Rows not among the pivots; the standard vectors at these rows span a
  /// complement.
  std::vector<std::size_t> complement_rows() const {
    std::vector<bool> piv(ambient, false);
    for (auto p : pivot_rows) piv[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ambient; ++i)
      if (!piv[i]) out.push_back(i);
    return out;
  }

  /// Coordinates (dim x k) of the columns of `v`, assumed to lie in the span.
  Matrix coordinates(const Matrix& v) const { return v.select_rows(pivot_rows); }

  /// Projection Q^d -> Q^d / span, in the basis given by the complement rows.
  Matrix quotient_projection() const {
    auto comp = complement_rows();
    Matrix q(comp.size(), ambient);
    for (std::size_t r = 0; r < comp.size(); ++r) q(r, comp[r]) = 1;
    for (std::size_t k = 0; k < pivot_rows.size(); ++k)
      for (std::size_t r = 0; r < comp.size(); ++r) q(r, pivot_rows[k]) = -basis(comp[r], k);
    return q;
  }

  bool contains(const Matrix& v) const {
    if (v.cols() == 0) return true;
    return (v - basis * coordinates(v)).is_zero();
  }
};

/// Span of the columns of `cols` (ambient dimension = cols.rows()).
inline Subspace column_span(const Matrix& cols) {
  Subspace s;
  s.ambient = cols.rows();
  Matrix t = cols.transpose();
  auto piv = rref_inplace(t);
  s.pivot_rows = piv;
  s.basis = Matrix(cols.rows(), piv.size());
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (std::size_t i = 0; i < cols.rows(); ++i) s.basis(i, k) = t(k, i);
  return s;
}

inline Subspace null_span(const Matrix& a) { return column_span(nullspace(a)); }

// --------------------------------------------------------------------------
// Exact integer vectors and matrices.

using IntVector = std::vector<std::int64_t>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_columns(std::span<const IntVector> cols) {
    std::size_t rows = cols.empty() ? 0 : cols[0].size();
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j].at(i);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && (*this)(i, j) != 0) return false;
    return true;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("integer matrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        BigInt s = 0;
        for (std::size_t k = 0; k < a.cols_; ++k) s += BigInt(static_cast<long>(a(i, k))) * static_cast<long>(b(k, j));
        c(i, j) = to_int64(s);
      }
    return c;
  }

  std::vector<std::vector<std::int64_t>> to_rows() const {
    std::vector<std::vector<std::int64_t>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i].assign(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

inline IntMatrix diagonal(std::span<const std::int64_t> d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

struct BareissResult {
  BigInt determinant;
  std::vector<std::vector<BigInt>> adjugate;  // inverse = adjugate / determinant
};

/// Fraction-free (Bareiss) elimination of [A | I]; yields det(A) and adj(A)
/// with only exact integer divisions.
inline BareissResult bareiss_adjugate(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("Bareiss on non-square matrix");
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(a(i, j));
    m[i][n + i] = 1;
  }
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return {BigInt(0), {}};
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        BigInt v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = v;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  // After full fraction-free Gauss-Jordan every diagonal entry equals det(A)
  // up to the accumulated row-swap sign.
  BareissResult res;
  res.determinant = prev * sign;
  res.adjugate.assign(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) res.adjugate[i][j] = m[i][n + j] * sign;
  return res;
}

/// Exact integer inverse; throws NonIntegral if the inverse has a
/// non-integer entry, std::domain_error if singular.
inline IntMatrix integer_inverse(const IntMatrix& a) {
  auto br = bareiss_adjugate(a);
  if (br.determinant == 0) throw std::domain_error("integer matrix is singular");
  const std::size_t n = a.rows();
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!mpz_divisible_p(br.adjugate[i][j].get_mpz_t(), br.determinant.get_mpz_t()))
        throw NonIntegral("inverse entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                          br.adjugate[i][j].get_str() + "/" + br.determinant.get_str());
      BigInt q = br.adjugate[i][j] / br.determinant;
      inv(i, j) = to_int64(q);
    }
  return inv;
}

inline BigInt integer_determinant(const IntMatrix& a) { return bareiss_adjugate(a).determinant; }

inline Matrix to_rational(const IntMatrix& a) {
  Matrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = static_cast<long>(a(i, j));
  return m;
}

}  // namespace tautilt
