#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "cqs/lattice.hpp"
#include "oracle/oracle.hpp"

namespace testing_support {

using oracle::i64;

inline cqs::Int I(i64 v) { return cqs::Int(static_cast<long>(v)); }

inline cqs::Rational R(i64 num, i64 den = 1) { return cqs::make_rational(I(num), I(den)); }

inline std::vector<std::pair<i64, i64>> coprime_pairs(i64 dmax, i64 dmin = 2) {
  std::vector<std::pair<i64, i64>> out;
  for (i64 d = dmin; d <= dmax; ++d)
    for (i64 q = 1; q < d; ++q)
      if (std::gcd(d, q) == 1) out.push_back({d, q});
  return out;
}

inline std::vector<i64> to_i64(const std::vector<cqs::Int>& v) {
  std::vector<i64> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

inline std::vector<oracle::Pt> to_pts(const std::vector<cqs::LatticePoint>& v) {
  std::vector<oracle::Pt> out;
  for (const auto& p : v) out.push_back({p.r.get_si(), p.s.get_si()});
  return out;
}

inline std::vector<cqs::LatticePoint> from_pts(const std::vector<oracle::Pt>& v) {
  std::vector<cqs::LatticePoint> out;
  for (const auto& p : v) out.push_back({I(p.first), I(p.second)});
  return out;
}

/// Fixed-seed generator so property failures reproduce.
inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eed1234u);
  return g;
}

inline i64 uniform(i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng()); }

/// Random point of L(k) in [0, box)^2.
inline oracle::Pt random_class_point(i64 d, i64 q, i64 k, i64 box) {
  for (;;) {
    i64 s = uniform(0, box - 1);
    i64 r0 = oracle::md(k - q * s, d);
    i64 steps = (box - 1 - r0) / d;
    if (r0 >= box) continue;
    return {r0 + d * uniform(0, steps), s};
  }
}

}  // namespace testing_support
