#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "arith.hpp"
#include "checks.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "number.hpp"
#include "resolution.hpp"

namespace cqs {

/// Sparse polynomial in x, y with exact coefficients, iterated in canonical monomial order.
using Polynomial = std::map<LatticePoint, Rational, MonomialOrder>;

inline void add_term(Polynomial& f, const LatticePoint& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = f.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) f.erase(it);
  }
}

inline Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_term(out, ma + mb, ca * cb);
  return out;
}

/// The curvette x^{q_i} - lambda y^{qbar_i} of E_i.
struct Curvette {
  std::size_t index;
  Rational lambda;
};

struct GenericGerm {
  Singularity x;
  Int k;
  std::vector<Curvette> factors;
};

/// Product of k_i curvettes of E_i, [k] = greedy decomposition of k. Parameters are the
/// distinct integers seed, seed+1, ... within each index.
inline GenericGerm generic_germ(const Singularity& x, const Int& k, long seed = 1) {
  if (seed < 1) throw InvalidInput("seed must be positive");
  Decomposition kd = greedy_decomposition(x, k);
  GenericGerm g{x, mod(k, x.d()), {}};
  for (std::size_t i = 1; i <= x.n(); ++i)
    for (Int j = 0; j < kd[i]; ++j) g.factors.push_back({i, Rational(Int(seed + j))});
  return g;
}

inline Polynomial curvette_polynomial(const Singularity& x, const Curvette& c) {
  Polynomial f;
  add_term(f, {x.q_at(c.index), Int(0)}, Rational(1));
  add_term(f, {Int(0), x.qbar_at(c.index)}, Rational(-c.lambda));
  return f;
}

inline Polynomial expand(const GenericGerm& g) {
  Polynomial f;
  add_term(f, {Int(0), Int(0)}, Rational(1));
  for (const auto& c : g.factors) f = multiply(f, curvette_polynomial(g.x, c));
  return f;
}

/// Support of a germ in L(k); points in canonical monomial order.
struct GermSupport {
  Singularity x;
  Int k;
  std::vector<LatticePoint> points;
};

/// Support of a polynomial, with its class inferred from the leading monomial.
inline GermSupport support_of(const Singularity& x, const Polynomial& f) {
  if (f.empty()) throw InvalidInput("the zero polynomial has no class");
  GermSupport s{x, monomial_class(x, f.begin()->first), {}};
  for (const auto& [m, c] : f) {
    if (m.r < 0 || m.s < 0) throw InvalidInput("negative exponent in " + to_string(m));
    Int km = monomial_class(x, m);
    if (km != s.k)
      throw ClassMismatch("mixed classes: " + to_string(f.begin()->first) + " has class " + to_string(s.k) + " but " +
                          to_string(m) + " has class " + to_string(km));
    s.points.push_back(m);
  }
  return s;
}

inline GermSupport germ_support(const GenericGerm& g, Verify mode = Verify::check, CheckLog* log = nullptr) {
  GermSupport s = support_of(g.x, expand(g));
  if (mode != Verify::off)
    agree(mode, "generic germ polygon vs class hull", hull_of_diagram(s.points, g.x, g.k), hull_of_class(g.x, g.k), log);
  return s;
}

struct ValuationVector {
  std::vector<Rational> v;  // v_1..v_n
  Decomposition alpha;      // intersection numbers -M v, sentinels 0
};

/// Divisorial valuations of a diagram and the associated intersection vector.
inline ValuationVector valuation_vector(const Singularity& x, const std::vector<LatticePoint>& support) {
  if (support.empty()) throw InvalidInput("empty support");
  Int k = monomial_class(x, support.front());
  require_class(x, k, support);
  std::size_t n = x.n();
  ValuationVector out;
  out.v = valuations_closed(x, support.front());
  for (const auto& m : support) {
    std::vector<Rational> vm = valuations_closed(x, m);
    for (std::size_t i = 0; i < n; ++i)
      if (vm[i] < out.v[i]) out.v[i] = vm[i];
  }
  std::vector<Int> a(n + 2, Int(0));
  for (std::size_t i = 0; i < n; ++i) {
    Rational t = Rational(x.c_at(i + 1)) * out.v[i];
    if (i > 0) t -= out.v[i - 1];
    if (i + 1 < n) t -= out.v[i + 1];
    if (!is_integer(t)) throw RouteMismatch("intersection number is not integral");
    a[i + 1] = t.get_num();
  }
  out.alpha = Decomposition(std::move(a));
  if (mod(Int(norms(x, out.alpha).x_norm - k), x.d()) != 0) throw RouteMismatch("intersection vector has wrong class");
  return out;
}

/// True when the diagram has the Newton polygon of its class.
inline bool is_generic(const Singularity& x, const std::vector<LatticePoint>& support) {
  if (support.empty()) throw InvalidInput("empty support");
  Int k = monomial_class(x, support.front());
  return hull_of_diagram(support, x, k) == hull_of_class(x, k, Verify::off);
}

inline Rational intersection_multiplicity(const Singularity& x, const Curvette& a, const Curvette& b) {
  if (a.index == b.index && a.lambda == b.lambda) throw InvalidInput("a curvette meets itself with infinite multiplicity");
  if (a.index < 1 || a.index > x.n() || b.index < 1 || b.index > x.n()) throw InvalidInput("curvette index out of range");
  Int u = x.q_at(a.index) * x.qbar_at(b.index);
  Int w = x.qbar_at(a.index) * x.q_at(b.index);
  return make_rational(u < w ? u : w, x.d());
}

}  // namespace cqs
