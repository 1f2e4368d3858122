#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tautilt/matrix.hpp"
#include "tautilt/rational.hpp"

namespace tautilt {

/// Univariate polynomial over Q; coefficient i multiplies x^i.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& a) { return Polynomial({a}); }
  static Polynomial x_minus(const Rational& root) { return Polynomial({-root, Rational(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }

  /// Euclidean division: returns (quotient, remainder).
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> q(a.c_.size() - b.c_.size() + 1);
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      Rational f = rem[k + b.degree()] / b.lead();
      q[k] = f;
      if (sgn(f) == 0) continue;
      for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= f * b.c_[j];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    std::vector<Rational> r = c_;
    Rational l = lead();
    for (auto& x : r) x /= l;
    return Polynomial(std::move(r));
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return Polynomial(std::move(r));
  }

  Rational operator()(const Rational& x) const {
    Rational r;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  /// Evaluates at a square matrix by Horner's rule.
  Matrix operator()(const Matrix& a) const {
    const std::size_t n = a.rows();
    Matrix r(n, n);
    for (std::size_t i = c_.size(); i-- > 0;) {
      r = r * a;
      for (std::size_t d = 0; d < n; ++d) r(d, d) += c_[i];
    }
    return r;
  }

  /// Primitive integer polynomial with positive leading coefficient and the
  /// same roots.
  std::vector<BigInt> primitive_integer() const {
    BigInt l = 1;
    for (const auto& q : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<BigInt> z(c_.size());
    BigInt g = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      Rational s = c_[i] * l;
      z[i] = s.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
    }
    if (g != 0)
      for (auto& x : z) x /= g;
    if (!z.empty() && z.back() < 0)
      for (auto& x : z) x = -x;
    return z;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  Polynomial g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

namespace detail {

/// Positive divisors of |n| by trial division; empty optional if |n| exceeds
/// the factoring limit.
inline std::optional<std::vector<BigInt>> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  if (n == 0) return std::nullopt;
  if (n > BigInt("1000000000000")) return std::nullopt;
  std::vector<std::pair<BigInt, int>> fac;
  for (BigInt p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) fac.emplace_back(p, e);
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : fac) {
    std::size_t m = divs.size();
    BigInt pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < m; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

inline BigInt eval_int(const std::vector<BigInt>& f, const BigInt& x) {
  BigInt r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

}  // namespace detail

/// Distinct rational roots (ascending). Returns nullopt when the
/// coefficients are too large to enumerate candidate roots.
inline std::optional<std::vector<Rational>> rational_roots(const Polynomial& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  auto f = p.primitive_integer();
  std::size_t low = 0;
  while (low < f.size() && f[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  std::vector<BigInt> g(f.begin() + static_cast<long>(low), f.end());
  if (g.size() <= 1) return roots;
  auto num = detail::positive_divisors(g.front());
  auto den = detail::positive_divisors(g.back());
  if (!num || !den) return std::nullopt;
  for (const auto& a : *num)
    for (const auto& b : *den)
      for (int s : {1, -1}) {
        Rational r(a * s, b);
        r.canonicalize();
        if (r.get_den() != b) continue;  // visited already in lowest terms
        if (sgn(p(r)) == 0) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

enum class FactorOutcome { kIrreducible, kFactorFound, kInconclusive };

struct FactorSearch {
  FactorOutcome outcome;
  Polynomial factor;  // monic nontrivial factor when outcome == kFactorFound
};

/// Looks for one monic nontrivial factor of `p` over Q: rational roots first,
/// then Kronecker's interpolation method up to `max_degree`.
inline FactorSearch find_factor(const Polynomial& p, int max_degree = 8, std::size_t combo_budget = 200000) {
  const int n = p.degree();
  if (n <= 1) return {FactorOutcome::kIrreducible, {}};
  auto roots = rational_roots(p);
  if (!roots) return {FactorOutcome::kInconclusive, {}};
  if (!roots->empty()) return {FactorOutcome::kFactorFound, Polynomial::x_minus(roots->front())};
  if (n <= 3) return {FactorOutcome::kIrreducible, {}};
  if (n > max_degree) return {FactorOutcome::kInconclusive, {}};
  auto f = p.primitive_integer();
  for (int d = 2; d <= n / 2; ++d) {
    // d+1 integer sample points where f does not vanish (no rational roots).
    std::vector<BigInt> xs, ys;
    for (long k = 0; static_cast<int>(xs.size()) < d + 1; ++k) {
      long x = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
      xs.emplace_back(x);
      ys.push_back(detail::eval_int(f, xs.back()));
    }
    std::vector<std::vector<BigInt>> cands;
    std::size_t combos = 1;
    for (const auto& y : ys) {
      auto dv = detail::positive_divisors(y);
      if (!dv) return {FactorOutcome::kInconclusive, {}};
      std::vector<BigInt> signed_divs;
      for (const auto& v : *dv) {
        signed_divs.push_back(v);
        signed_divs.push_back(-v);
      }
      combos *= signed_divs.size();
      if (combos > combo_budget) return {FactorOutcome::kInconclusive, {}};
      cands.push_back(std::move(signed_divs));
    }
    std::vector<std::size_t> idx(d + 1, 0);
    while (true) {
      // Lagrange interpolation through (xs[i], cands[i][idx[i]]).
      Polynomial q;
      for (int i = 0; i <= d; ++i) {
        Polynomial basis = Polynomial::constant(1);
        Rational denom = 1;
        for (int j = 0; j <= d; ++j) {
          if (j == i) continue;
          basis = basis * Polynomial::x_minus(Rational(xs[j]));
          denom *= Rational(xs[i] - xs[j]);
        }
        q = q + Polynomial::constant(Rational(cands[i][idx[i]]) / denom) * basis;
      }
      if (q.degree() == d) {
        auto [quo, rem] = divmod(p, q);
        if (rem.is_zero()) return {FactorOutcome::kFactorFound, q.monic()};
      }
      int pos = 0;
      while (pos <= d && ++idx[pos] == cands[pos].size()) idx[pos++] = 0;
      if (pos > d) break;
    }
  }
  return {FactorOutcome::kIrreducible, {}};
}

/// Minimal polynomial (monic) of a square matrix via Krylov dependency of
/// its powers.
inline Polynomial minimal_polynomial(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return Polynomial::constant(1);
  std::vector<Matrix> powers{Matrix::identity(n)};
  while (true) {
    const std::size_t k = powers.size();
    Matrix system(n * n, k + 1);
    powers.push_back(powers.back() * a);
    for (std::size_t p = 0; p <= k; ++p)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) system(i * n + j, p) = powers[p](i, j);
    Matrix ns = nullspace(system);
    if (ns.cols() > 0) {
      std::vector<Rational> c(k + 1);
      for (std::size_t p = 0; p <= k; ++p) c[p] = ns(p, 0);
      return Polynomial(std::move(c)).monic();
    }
  }
}

}  // namespace tautilt
