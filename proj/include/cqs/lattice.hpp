#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "checks.hpp"
#include "error.hpp"
#include "number.hpp"

namespace cqs {

/// Exponent pair (r, s) of the monomial x^r y^s.
struct LatticePoint {
  Int r;
  Int s;

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.r == b.r && a.s == b.s; }
  friend bool operator!=(const LatticePoint& a, const LatticePoint& b) { return !(a == b); }
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
    return a.r < b.r || (a.r == b.r && a.s < b.s);
  }
  friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
    return {Int(a.r + b.r), Int(a.s + b.s)};
  }
};

inline std::string to_string(const LatticePoint& p) {
  return "(" + to_string(p.r) + "," + to_string(p.s) + ")";
}

/// Canonical monomial order: s descending, then r descending.
struct MonomialOrder {
  bool operator()(const LatticePoint& a, const LatticePoint& b) const {
    return a.s > b.s || (a.s == b.s && a.r > b.r);
  }
};

/// L(k) = {(r,s) : r + q s = k mod d}.
class ClassLattice {
 public:
  ClassLattice(const Singularity& x, const Int& k)
      : d_(x.d()), q_(x.q()), qinv_(x.q_inverse()), k_(mod(k, x.d())) {}

  const Int& d() const { return d_; }
  const Int& q() const { return q_; }
  const Int& k() const { return k_; }

  bool contains(const LatticePoint& p) const { return mod(Int(p.r + q_ * p.s - k_), d_) == 0; }

  /// Residue of s mod d for points of L(k) in column r.
  Int s_residue(const Int& r) const { return mod(Int((k_ - r) * qinv_), d_); }

  /// Residue of r mod d for points of L(k) in row s.
  Int r_residue(const Int& s) const { return mod(Int(k_ - q_ * s), d_); }

 private:
  Int d_, q_, qinv_, k_;
};

/// Class of a single monomial.
inline Int monomial_class(const Singularity& x, const LatticePoint& p) {
  return mod(Int(p.r + x.q() * p.s), x.d());
}

/// Number of integers t in [lo, hi] with t = res (mod m).
inline Int count_in_residue(const Int& lo, const Int& hi, const Int& res, const Int& m) {
  if (hi < lo) return 0;
  Int first = lo + mod(Int(res - lo), m);
  if (first > hi) return 0;
  return (hi - first) / m + 1;
}

/// Boundary chain of conv(S) + R_{>=0}^2, listed from the y-axis side to the x-axis side.
/// r strictly increases, s strictly decreases and slopes strictly increase along the chain.
class NewtonPolygon {
 public:
  NewtonPolygon() : vertices_{LatticePoint{Int(0), Int(0)}} {}

  explicit NewtonPolygon(std::vector<LatticePoint> chain) : vertices_(std::move(chain)) {
    if (vertices_.empty()) throw InvalidInput("Newton polygon needs a vertex");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (vertices_[i].r < 0 || vertices_[i].s < 0) throw InvalidInput("negative exponent in chain");
      if (i + 1 < vertices_.size() &&
          !(vertices_[i].r < vertices_[i + 1].r && vertices_[i].s > vertices_[i + 1].s))
        throw InvalidInput("chain is not monotone");
      if (i + 2 < vertices_.size() && turn(vertices_[i], vertices_[i + 1], vertices_[i + 2]) <= 0)
        throw InvalidInput("chain is not strictly convex");
    }
  }

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const LatticePoint& front() const { return vertices_.front(); }
  const LatticePoint& back() const { return vertices_.back(); }
  std::size_t compact_faces() const { return vertices_.size() - 1; }

  bool touches_y_axis() const { return front().r == 0; }
  bool touches_x_axis() const { return back().s == 0; }
  bool convenient() const { return touches_y_axis() && touches_x_axis(); }

  /// Sign of p.s minus the chain height at p.r: -1 below, 0 on, +1 above.
  /// Left of the first vertex the chain continues vertically, so every point there is below.
  int compare(const LatticePoint& p) const {
    if (p.r < front().r) return -1;
    if (p.r >= back().r) return sgn(Int(p.s - back().s));
    std::size_t hi = 1;
    while (vertices_[hi].r < p.r) ++hi;
    const LatticePoint& u = vertices_[hi - 1];
    const LatticePoint& v = vertices_[hi];
    // (p.s - u.s)(v.r - u.r) vs (v.s - u.s)(p.r - u.r)
    Int lhs = (p.s - u.s) * (v.r - u.r);
    Int rhs = (v.s - u.s) * (p.r - u.r);
    return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
  }

  /// Chain height at abscissa r >= front().r.
  Rational height(const Int& r) const {
    if (r < front().r) throw InvalidInput("height left of the chain");
    if (r >= back().r) return Rational(back().s);
    std::size_t hi = 1;
    while (vertices_[hi].r < r) ++hi;
    const LatticePoint& u = vertices_[hi - 1];
    const LatticePoint& v = vertices_[hi];
    return Rational(u.s) + make_rational(Int((v.s - u.s) * (r - u.r)), Int(v.r - u.r));
  }

  /// Membership in conv(chain) + R_{>=0}^2.
  bool contains(const LatticePoint& p) const { return p.r >= front().r && p.s >= back().s && compare(p) >= 0; }

  /// Twice the area between the chain and the coordinate axes. Convenient chains only.
  Int area2_under() const {
    if (!convenient()) throw InvalidInput("area under a non-convenient chain is infinite");
    Int a = 0;
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
      a += (vertices_[i + 1].r - vertices_[i].r) * (vertices_[i].s + vertices_[i + 1].s);
    return a;
  }

  friend bool operator==(const NewtonPolygon& a, const NewtonPolygon& b) { return a.vertices_ == b.vertices_; }

  /// Orientation of (a, b, c): positive for a left turn.
  static int turn(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    Int cr = (b.r - a.r) * (c.s - a.s) - (b.s - a.s) * (c.r - a.r);
    return sgn(cr);
  }

 private:
  std::vector<LatticePoint> vertices_;
};

inline std::string to_string(const NewtonPolygon& p) { return to_string(p.vertices()); }

/// South-west convex chain of a finite point set: the compact faces of conv(S) + R_{>=0}^2.
inline NewtonPolygon lower_hull(std::vector<LatticePoint> pts) {
  if (pts.empty()) throw InvalidInput("hull of an empty support");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  // The chain ends at the lowest point, leftmost among ties.
  std::size_t last = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].s < pts[last].s) last = i;
  std::vector<LatticePoint> chain;
  for (std::size_t i = 0; i <= last; ++i) {
    const LatticePoint& p = pts[i];
    if (!chain.empty() && chain.back().r == p.r) continue;  // same column, higher point
    if (!chain.empty() && p.s >= chain.back().s) continue;
    while (chain.size() >= 2 && NewtonPolygon::turn(chain[chain.size() - 2], chain.back(), p) <= 0)
      chain.pop_back();
    chain.push_back(p);
  }
  return NewtonPolygon(std::move(chain));
}

/// Staircase-minimal elements of a point set, ordered by s ascending.
inline std::vector<LatticePoint> staircase_minimal(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
    return a.s < b.s || (a.s == b.s && a.r < b.r);
  });
  std::vector<LatticePoint> out;
  for (const auto& p : pts)
    if (out.empty() || p.r < out.back().r) out.push_back(p);
  return out;
}

/// Minimal monomials of L(k), ordered by s ascending. All coordinates are below d.
inline std::vector<LatticePoint> module_generators(const Singularity& x, const Int& k) {
  ClassLattice lat(x, k);
  std::vector<LatticePoint> out;
  for (Int s = 0; s < x.d(); ++s) {
    Int r = lat.r_residue(s);
    if (out.empty() || r < out.back().r) out.push_back({r, s});
    if (r == 0) break;
  }
  return out;
}

/// Vertices (tail_j, head_{j-1}) of the class hull, j = n+1 down to 1, without repeats.
inline NewtonPolygon hull_of_class_closed(const Singularity& x, const Int& k) {
  DecompositionNorms nm = norms(x, greedy_decomposition(x, k));
  std::vector<LatticePoint> chain;
  for (std::size_t j = x.n() + 1; j >= 1; --j) {
    LatticePoint p{nm.tail[j], nm.head[j - 1]};
    if (chain.empty() || chain.back() != p) chain.push_back(p);
  }
  return NewtonPolygon(std::move(chain));
}

inline NewtonPolygon hull_of_class(const Singularity& x, const Int& k, Verify v = Verify::check,
                                   CheckLog* log = nullptr) {
  NewtonPolygon p = hull_of_class_closed(x, k);
  if (v != Verify::off) agree(v, "class hull vs hull of generators", p, lower_hull(module_generators(x, k)), log);
  return p;
}

inline void require_class(const Singularity& x, const Int& k, const std::vector<LatticePoint>& support) {
  ClassLattice lat(x, k);
  for (const auto& p : support)
    if (!lat.contains(p))
      throw ClassMismatch("monomial x^" + to_string(p.r) + " y^" + to_string(p.s) + " has class " +
                          to_string(monomial_class(x, p)) + ", expected " + to_string(lat.k()));
}

/// Newton polygon of a diagram in L(k). Since (0,0) is in L, adding L is the same as adding the quadrant.
inline NewtonPolygon hull_of_diagram(const std::vector<LatticePoint>& support, const Singularity& x,
                                     const Int& k) {
  if (support.empty()) throw InvalidInput("empty support");
  require_class(x, k, support);
  return lower_hull(support);
}

inline NewtonPolygon minkowski_sum(const NewtonPolygon& a, const NewtonPolygon& b) {
  std::vector<LatticePoint> ea, eb;
  for (std::size_t i = 0; i + 1 < a.vertices().size(); ++i)
    ea.push_back({Int(a.vertices()[i + 1].r - a.vertices()[i].r), Int(a.vertices()[i + 1].s - a.vertices()[i].s)});
  for (std::size_t i = 0; i + 1 < b.vertices().size(); ++i)
    eb.push_back({Int(b.vertices()[i + 1].r - b.vertices()[i].r), Int(b.vertices()[i + 1].s - b.vertices()[i].s)});
  // Steeper edges first; edge e precedes f when cross(e, f) > 0.
  auto cross = [](const LatticePoint& e, const LatticePoint& f) { return sgn(Int(e.r * f.s - e.s * f.r)); };
  std::vector<LatticePoint> chain{a.front() + b.front()};
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    LatticePoint step;
    if (j == eb.size() || (i < ea.size() && cross(ea[i], eb[j]) > 0)) {
      step = ea[i++];
    } else if (i == ea.size() || cross(ea[i], eb[j]) < 0) {
      step = eb[j++];
    } else {
      step = ea[i++] + eb[j++];
    }
    chain.push_back(chain.back() + step);
  }
  return NewtonPolygon(std::move(chain));
}

/// Points of the lattice lying on the compact chain.
inline Int lattice_points_on_chain(const NewtonPolygon& p, const ClassLattice& lat) {
  Int count = 0;
  const auto& v = p.vertices();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    for (Int r = v[i].r; r < v[i + 1].r; ++r) {
      LatticePoint pt{r, Int(0)};
      Rational h = p.height(r);
      if (!is_integer(h)) continue;
      pt.s = h.get_num();
      if (lat.contains(pt)) ++count;
    }
  }
  if (lat.contains(v.back())) ++count;
  return count;
}

/// Lattice segments of the chain: points of the lattice on it, minus one.
inline Int lattice_segments(const NewtonPolygon& p, const ClassLattice& lat) {
  return lattice_points_on_chain(p, lat) - 1;
}

struct RegionCount {
  Int interior;             // lattice points strictly inside the region
  Int boundary;             // distinct lattice points on its boundary
  Int boundary_incidences;  // boundary points counted once per piece they bound
  Int pieces;               // connected components of the open region
  Int area2;                // twice the area
  Int axis_gap_x;           // x-intercept difference, inner minus outer
  Int axis_gap_y;           // y-intercept difference, inner minus outer
};

/// Lattice points of L(k) in the closed region between an outer (lower) and inner (upper) chain.
/// The open region may split into several pieces where the chains touch; each piece is a lattice
/// polygon of L(k), so area2 = d (boundary_incidences + 2 interior - 2 pieces).
inline RegionCount region_count(const NewtonPolygon& outer, const NewtonPolygon& inner, const ClassLattice& lat) {
  if (!outer.convenient() || !inner.convenient())
    throw InvalidInput("region between non-convenient chains is unbounded");
  for (const auto& v : inner.vertices())
    if (!outer.contains(v)) throw ContainmentError("inner vertex " + to_string(v) + " lies below the outer chain");

  RegionCount rc;
  rc.area2 = inner.area2_under() - outer.area2_under();
  rc.axis_gap_x = inner.back().r - outer.back().r;
  rc.axis_gap_y = inner.front().s - outer.front().s;

  // Breakpoints where either chain bends; the height gap is linear in between.
  std::vector<Int> ts;
  for (const auto& v : outer.vertices()) ts.push_back(v.r);
  for (const auto& v : inner.vertices()) ts.push_back(v.r);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Rational> gap;
  for (const auto& t : ts) gap.push_back(inner.height(t) - outer.height(t));

  std::vector<std::pair<Int, Int>> pieces;
  for (std::size_t m = 0; m + 1 < ts.size(); ++m) {
    if (gap[m] == 0 && gap[m + 1] == 0) continue;
    if (!pieces.empty() && pieces.back().second == ts[m] && gap[m] != 0)
      pieces.back().second = ts[m + 1];
    else
      pieces.push_back({ts[m], ts[m + 1]});
  }
  rc.pieces = to_int(pieces.size());

  const Int& d = lat.d();
  std::size_t pi = 0;
  for (Int r = 0; r <= inner.back().r; ++r) {
    while (pi < pieces.size() && pieces[pi].second < r) ++pi;
    // Pieces whose closure contains column r: at most two, sharing a touching point.
    std::vector<std::size_t> owners;
    for (std::size_t j = pi; j < pieces.size() && pieces[j].first <= r; ++j)
      if (pieces[j].second >= r) owners.push_back(j);
    if (owners.empty()) continue;
    Rational lo = outer.height(r), hi = inner.height(r);
    Int s_lo = ceil_div(lo.get_num(), lo.get_den());
    Int s_hi = floor_div(hi.get_num(), hi.get_den());
    if (s_hi < s_lo) continue;
    Int res = lat.s_residue(r);
    for (Int s = s_lo + mod(Int(res - s_lo), d); s <= s_hi; s += d) {
      LatticePoint p{r, s};
      bool on_boundary = r == 0 || outer.compare(p) == 0 || inner.compare(p) == 0;
      if (on_boundary) {
        ++rc.boundary;
        rc.boundary_incidences += to_int(owners.size());
      } else {
        ++rc.interior;
      }
    }
  }
  return rc;
}

/// #{(i,j) : i,j >= 1, p i + qw j <= nu, a i + b j = k mod d} for the ambient action (d;a,b).
inline Int kappa_pi_count(const RawType& ambient, const Int& p, const Int& qw, const Int& k, const Int& nu) {
  if (p <= 0 || qw <= 0) throw InvalidInput("weights must be positive");
  const Int& d = ambient.d;
  Int g = gcd(ambient.b, d);
  Int dg = d / g;
  Int binv = *inverse_mod(Int(ambient.b / g), dg);
  Int count = 0;
  for (Int i = 1; p * i + qw <= nu; ++i) {
    Int jmax = (nu - p * i) / qw;
    Int rhs = mod(Int(k - ambient.a * i), d);
    if (mod(rhs, g) != 0) continue;
    Int j0 = mod(Int(rhs / g * binv), dg);
    count += count_in_residue(Int(1), jmax, j0, dg);
  }
  return count;
}

/// Minimal elements of {a + b : a in A, b in B}.
inline std::vector<LatticePoint> monomial_product(const std::vector<LatticePoint>& a,
                                                  const std::vector<LatticePoint>& b) {
  std::vector<LatticePoint> sums;
  sums.reserve(a.size() * b.size());
  for (const auto& p : a)
    for (const auto& q : b) sums.push_back(p + q);
  return staircase_minimal(std::move(sums));
}

/// Dimension of L(k) modulo the monomial submodule generated by gens; nullopt when infinite.
inline std::optional<Int> quotient_dimension(const Singularity& x, const Int& k,
                                             const std::vector<LatticePoint>& gens) {
  require_class(x, k, gens);
  ClassLattice lat(x, k);
  std::vector<LatticePoint> st = staircase_minimal(gens);
  if (st.empty() || st.front().s != 0 || st.back().r != 0) return std::nullopt;
  // st has s ascending and r descending; walk columns left to right.
  std::sort(st.begin(), st.end());
  Int total = 0;
  Int threshold = st.front().s;  // generator on the y-axis bounds every column
  std::size_t gi = 0;
  for (Int r = 0; r < st.back().r; ++r) {
    while (gi < st.size() && st[gi].r <= r) {
      if (st[gi].s < threshold) threshold = st[gi].s;
      ++gi;
    }
    total += count_in_residue(Int(0), Int(threshold - 1), lat.s_residue(r), x.d());
  }
  return total;
}

}  // namespace cqs
