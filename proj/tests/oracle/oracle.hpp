#pragma once

// Brute-force reference implementations used only by the tests. Machine integers, no shared code
// with the library beyond the standard library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using Pt = std::pair<i64, i64>;

inline i64 md(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

struct Hj {
  std::vector<i64> q, c, qbar;  // full sequences with sentinels
};

/// Continued fraction by repeated ceiling division; qbar by search for the smallest solution.
inline Hj hj(i64 d, i64 q) {
  Hj h;
  h.q = {d, q};
  h.c = {2};
  while (h.q.back() != 0) {
    i64 a = h.q[h.q.size() - 2], b = h.q.back();
    i64 c = (a + b - 1) / b;
    h.c.push_back(c);
    h.q.push_back(c * b - a);
  }
  h.c.push_back(2);
  std::size_t n = h.q.size() - 2;
  h.qbar.assign(n + 2, 0);
  h.qbar[n + 1] = d;
  for (std::size_t i = 1; i <= n; ++i) {
    i64 x = 1;
    while (md(q * x - h.q[i], d) != 0) ++x;
    h.qbar[i] = x;
  }
  return h;
}

/// Interior denominations q_1 > ... > q_n.
inline std::vector<i64> denominations(const Hj& h) { return std::vector<i64>(h.q.begin() + 1, h.q.end() - 1); }

inline std::vector<i64> greedy(const std::vector<i64>& denoms, i64 k) {
  std::vector<i64> out;
  for (i64 c : denoms) {
    out.push_back(k / c);
    k %= c;
  }
  if (k != 0) throw std::runtime_error("greedy left a remainder");
  return out;
}

inline i64 coin_count(const std::vector<i64>& v) { return std::accumulate(v.begin(), v.end(), i64(0)); }

/// Fewest coins summing to k.
inline i64 dp_coin_optimal(const std::vector<i64>& denoms, i64 k) {
  const i64 inf = INT64_MAX / 4;
  std::vector<i64> best(static_cast<std::size_t>(k + 1), inf);
  best[0] = 0;
  for (i64 v = 1; v <= k; ++v)
    for (i64 c : denoms)
      if (c <= v && best[static_cast<std::size_t>(v - c)] + 1 < best[static_cast<std::size_t>(v)])
        best[static_cast<std::size_t>(v)] = best[static_cast<std::size_t>(v - c)] + 1;
  return best[static_cast<std::size_t>(k)];
}

inline bool in_class(i64 d, i64 q, i64 k, const Pt& p) { return md(p.first + q * p.second - k, d) == 0; }

/// Points of L(k) in [0,b)^2 not dominated by another such point.
inline std::vector<Pt> brute_staircase(i64 d, i64 q, i64 k, i64 box) {
  std::vector<Pt> pts, out;
  for (i64 r = 0; r < box; ++r)
    for (i64 s = 0; s < box; ++s)
      if (in_class(d, q, k, {r, s})) pts.push_back({r, s});
  for (const auto& p : pts) {
    bool dominated = false;
    for (const auto& t : pts)
      if (t != p && t.first <= p.first && t.second <= p.second) dominated = true;
    if (!dominated) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Whether some convex combination of a and b is <= p componentwise.
inline bool segment_below(const Pt& a, const Pt& b, const Pt& p) {
  // lambda in [0,1] with lambda (a - b) <= p - b in both coordinates; bounds kept as fractions.
  i64 lo_n = 0, lo_d = 1, hi_n = 1, hi_d = 1;
  for (int c = 0; c < 2; ++c) {
    i64 ac = c ? a.second : a.first, bc = c ? b.second : b.first, pc = c ? p.second : p.first;
    i64 coef = ac - bc, rhs = pc - bc;
    if (coef == 0) {
      if (rhs < 0) return false;
    } else if (coef > 0) {
      if (static_cast<__int128>(rhs) * hi_d < static_cast<__int128>(hi_n) * coef) hi_n = rhs, hi_d = coef;
    } else {
      if (static_cast<__int128>(-rhs) * lo_d > static_cast<__int128>(lo_n) * -coef) lo_n = -rhs, lo_d = -coef;
    }
  }
  return static_cast<__int128>(lo_n) * hi_d <= static_cast<__int128>(hi_n) * lo_d;
}

/// Vertices of conv(S) + quadrant by testing every point against every pair of the others.
inline std::vector<Pt> brute_hull(std::vector<Pt> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<Pt> out;
  for (const auto& p : s) {
    bool covered = false;
    for (std::size_t i = 0; i < s.size() && !covered; ++i) {
      if (s[i] == p) continue;
      if (s[i].first <= p.first && s[i].second <= p.second) covered = true;
      for (std::size_t j = i + 1; j < s.size() && !covered; ++j)
        if (s[j] != p && segment_below(s[i], s[j], p)) covered = true;
    }
    if (!covered) out.push_back(p);
  }
  return out;
}

/// Points of L(k) in the box not dominated by any generator.
inline std::optional<i64> brute_quotient(i64 d, i64 q, i64 k, const std::vector<Pt>& gens) {
  bool xa = false, ya = false;
  i64 rb = 0, sb = 0;
  for (const auto& g : gens) {
    if (g.second == 0) xa = true, rb = std::max(rb, g.first);
    if (g.first == 0) ya = true, sb = std::max(sb, g.second);
  }
  if (!xa || !ya) return std::nullopt;
  i64 count = 0;
  for (i64 r = 0; r <= rb; ++r)
    for (i64 s = 0; s <= sb; ++s) {
      if (!in_class(d, q, k, {r, s})) continue;
      bool hit = false;
      for (const auto& g : gens)
        if (g.first <= r && g.second <= s) hit = true;
      if (!hit) ++count;
    }
  return count;
}

/// #{(i,j) : i,j >= 1, p i + qw j <= nu, a i + b j = k (mod d)}.
inline i64 brute_kappa_pi(i64 d, i64 a, i64 b, i64 p, i64 qw, i64 k, i64 nu) {
  i64 count = 0;
  for (i64 i = 1; p * i <= nu; ++i)
    for (i64 j = 1; p * i + qw * j <= nu; ++j)
      if (md(a * i + b * j - k, d) == 0) ++count;
  return count;
}

/// Support of the product of (x^{a_t} - lambda_t y^{b_t}), exact in 128-bit integers.
inline std::set<Pt> expand_support(const std::vector<std::pair<Pt, i64>>& factors) {
  std::map<Pt, __int128> f{{{0, 0}, 1}};
  for (const auto& [ab, lam] : factors) {
    std::map<Pt, __int128> g;
    for (const auto& [m, c] : f) {
      g[{m.first + ab.first, m.second}] += c;
      g[{m.first, m.second + ab.second}] -= c * lam;
    }
    f.clear();
    for (const auto& [m, c] : g)
      if (c != 0) f[m] = c;
  }
  std::set<Pt> out;
  for (const auto& [m, c] : f) out.insert(m);
  return out;
}

/// d * v_i for i = 1..n, minimised over the support.
inline std::vector<i64> scaled_valuations(const Hj& h, const std::vector<Pt>& support) {
  std::size_t n = h.q.size() - 2;
  std::vector<i64> v(n, INT64_MAX);
  for (const auto& p : support)
    for (std::size_t i = 1; i <= n; ++i) v[i - 1] = std::min(v[i - 1], p.first * h.qbar[i] + p.second * h.q[i]);
  return v;
}

/// Whether x^r y^s is invariant under (d;a,b).
inline bool invariant(i64 d, i64 a, i64 b, i64 r, i64 s) { return md(a * r + b * s, d) == 0; }

struct SearchEntry {
  std::vector<Pt> support;
  std::vector<i64> scaled_v;  // d * v_i
};

struct SearchResult {
  std::vector<SearchEntry> entries;
  std::vector<std::vector<i64>> minimal;  // distinct minimal vectors under the componentwise order
};

/// Candidate diagrams of class k: every support of at most max_size points of L(k) in [0,box)^2, and
/// every non-empty subset of `extra` (used for the staircase, whose full set attains the minimum).
inline SearchResult genericity_search(i64 d, i64 q, i64 k, i64 box, std::size_t max_size, const std::vector<Pt>& extra) {
  Hj h = hj(d, q);
  std::vector<Pt> pts;
  for (i64 r = 0; r < box; ++r)
    for (i64 s = 0; s < box; ++s)
      if (in_class(d, q, k, {r, s})) pts.push_back({r, s});
  SearchResult out;
  std::vector<Pt> cur;
  auto emit = [&](const std::vector<Pt>& s) { out.entries.push_back({s, scaled_valuations(h, s)}); };
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!cur.empty()) emit(cur);
    if (cur.size() == max_size) return;
    for (std::size_t i = from; i < pts.size(); ++i) {
      cur.push_back(pts[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  if (extra.size() >= 31) throw std::runtime_error("too many extra points");
  for (std::uint32_t mask = 1; mask < (1u << extra.size()); ++mask) {
    std::vector<Pt> s;
    for (std::size_t i = 0; i < extra.size(); ++i)
      if (mask >> i & 1u) s.push_back(extra[i]);
    emit(s);
  }
  std::set<std::vector<i64>> vs;
  for (const auto& e : out.entries) vs.insert(e.scaled_v);
  // When the componentwise minimum is itself attained it is the unique minimal element.
  std::vector<i64> low = *vs.begin();
  for (const auto& v : vs)
    for (std::size_t i = 0; i < v.size(); ++i) low[i] = std::min(low[i], v[i]);
  if (vs.count(low)) {
    out.minimal.push_back(low);
    return out;
  }
  for (const auto& v : vs) {
    bool dominated = false;
    for (const auto& u : vs) {
      if (u == v) continue;
      bool le = true;
      for (std::size_t i = 0; i < v.size(); ++i) le = le && u[i] <= v[i];
      if (le) dominated = true;
    }
    if (!dominated) out.minimal.push_back(v);
  }
  return out;
}

}  // namespace oracle
