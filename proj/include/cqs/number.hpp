#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cqs {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Residue of a in [0, m), m > 0.
inline Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int gcd(const Int& a, const Int& b, const Int& c) { return gcd(gcd(a, b), c); }

/// Inverse of a modulo m, or nullopt when none exists. Modulo 1 the inverse is 0.
inline std::optional<Int> inverse_mod(const Int& a, const Int& m) {
  if (m == 1) return Int(0);
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
  return r;
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

inline Int to_int(std::size_t i) { return Int(static_cast<unsigned long>(i)); }

/// Fits in a machine word, for loops over enumerated ranges.
inline long to_long(const Int& x) { return x.get_si(); }

inline std::string to_string(const Int& x) { return x.get_str(); }

/// Always "num/den", also for integers.
inline std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

template <class T>
std::string to_string(const std::vector<T>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + "]";
}

/// Parses "n" or "n/d" with optional leading sign. Returns nullopt on malformed text.
inline std::optional<Rational> parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::size_t slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!valid_int(num, true)) return std::nullopt;
  std::string ns(num);
  if (ns[0] == '+') ns.erase(0, 1);
  Int n(ns);
  Int d(1);
  if (slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    if (!valid_int(den, false)) return std::nullopt;
    d = Int(std::string(den));
    if (d == 0) return std::nullopt;
  }
  return make_rational(n, d);
}

}  // namespace cqs
