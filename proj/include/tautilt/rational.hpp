#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tautilt {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "a", "-a", "a/b" (b != 0) into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false))
    throw std::invalid_argument("malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  BigInt d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(BigInt(num), d);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Converts an integral rational to int64, throwing if it is not integral or
/// does not fit.
inline std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("rational " + q.get_str() + " is not integral");
  const BigInt& z = q.get_num();
  if (!z.fits_slong_p()) throw std::overflow_error("integer " + z.get_str() + " overflows int64");
  return static_cast<std::int64_t>(z.get_si());
}

inline std::int64_t to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer " + z.get_str() + " overflows int64");
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace tautilt
