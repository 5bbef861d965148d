#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "arith.hpp"
#include "checks.hpp"
#include "error.hpp"
#include "germs.hpp"
#include "lattice.hpp"
#include "number.hpp"
#include "resolution.hpp"

namespace cqs {

/// [0, k_1..k_n] Q [k_1..k_n, 0]^t.
inline Int q_form(const Matrix& q, const Decomposition& k) {
  std::size_t n = q.size() - 1;
  Int total = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (k[i] == 0) continue;
    for (std::size_t j = i; j < n; ++j) total += k[i] * q[i][j] * k[j + 1];
  }
  return total;
}

inline Rational mu_class_closed(const Singularity& x, const Int& k) {
  Int kk = mod(k, x.d());
  if (kk == 0) return Rational(-1);
  Decomposition kd = greedy_decomposition(x, kk);
  Int kbar = norms(x, kd).bar;
  return make_rational(Int(x.d() - 1 + (kk - 1) * (kbar - 1)), x.d()) -
         Rational(q_form(q_matrix(x, Verify::off), kd));
}

/// Same value from twice the area under the class hull.
inline Rational mu_class_hull(const Singularity& x, const Int& k) {
  Int kk = mod(k, x.d());
  if (kk == 0) return Rational(-1);
  NewtonPolygon h = hull_of_class(x, kk, Verify::off);
  return 1 + make_rational(Int(h.area2_under() - h.back().r - h.front().s), x.d());
}

inline Rational mu_class(const Singularity& x, const Int& k, Verify mode = Verify::check, CheckLog* log = nullptr) {
  Rational m = mu_class_closed(x, k);
  if (mode != Verify::off) agree(mode, "mu_class closed form vs hull area", m, mu_class_hull(x, k), log);
  return m;
}

/// delta of the generic germ by the recursion along the resolution chain.
inline Rational delta_generic(const Singularity& x, const Int& k) {
  Rational total = 0;
  Int kk = mod(k, x.d());
  for (std::size_t i = 1; i <= x.n() && kk != 0; ++i) {
    const Int& d = x.q_at(i - 1);
    const Int& q = x.q_at(i);
    total += make_rational(Int(kk * (kk - 1 - q + d)), Int(2 * d * q));
    kk = mod(kk, q);
  }
  return total;
}

/// delta of a product of curvettes: the parts plus pairwise intersections.
inline Rational delta_curvette_sum(const GenericGerm& g) {
  Rational total = 0;
  for (const auto& c : g.factors) total += delta_generic(g.x, g.x.q_at(c.index));
  for (std::size_t a = 0; a < g.factors.size(); ++a)
    for (std::size_t b = a + 1; b < g.factors.size(); ++b)
      total += intersection_multiplicity(g.x, g.factors[a], g.factors[b]);
  return total;
}

inline Int kappa_closed(const Singularity& x, const Int& k) {
  Int kk = mod(k, x.d());
  if (kk == 0) return 0;
  return norms(x, greedy_decomposition(x, kk)).coins - 1;
}

/// kappa by counting lattice points under the weighted blow-up at each stage.
inline Int kappa_recursive(const Singularity& x, const Int& k) {
  Int total = 0;
  Int kk = mod(k, x.d());
  for (std::size_t i = 1; i <= x.n() && kk != 0; ++i) {
    const Int& d = x.q_at(i - 1);
    const Int& q = x.q_at(i);
    Singularity xi = hj_expansion(d, q);
    Int v = nu(Int(1), q, hull_of_class(xi, kk, Verify::off).vertices());
    total += kappa_pi_count(RawType(d, Int(1), q), Int(1), q, kk, v);
    kk = mod(kk, q);
  }
  return total;
}

inline Int kappa_generic(const Singularity& x, const Int& k, Verify mode = Verify::check, CheckLog* log = nullptr) {
  Int c = kappa_closed(x, k);
  if (mode != Verify::off) agree(mode, "kappa closed form vs recursion", c, kappa_recursive(x, k), log);
  return c;
}

/// Delta(k) = delta - kappa of the generic germ, zero on the trivial class.
inline Rational delta_cap(const Singularity& x, const Int& k, Verify mode = Verify::off, CheckLog* log = nullptr) {
  Int kk = mod(k, x.d());
  if (kk == 0) return 0;
  Rational dl = delta_generic(x, kk);
  if (mode != Verify::off) agree(mode, "delta recursion vs curvette sum", dl, delta_curvette_sum(generic_germ(x, kk)), log);
  return dl - Rational(kappa_generic(x, kk, mode, log));
}

/// Correction term R_X(k) = -Delta(-k).
inline Rational r_blache(const Singularity& x, const Int& k) { return -delta_cap(x, Int(-k)); }

struct MnulResult {
  Decomposition exponents;     // [k] + [w]
  std::optional<Int> quotient; // dim O(k+w) / (O(k) (x) O(w)); nullopt if infinite
};

/// Generators of the product of the curvette modules O(q_i)^{m_i}.
inline std::vector<LatticePoint> product_generators(const Singularity& x, const Decomposition& m) {
  std::vector<LatticePoint> gens{{Int(0), Int(0)}};
  for (std::size_t i = 1; i <= x.n(); ++i) {
    if (m[i] == 0) continue;
    std::vector<LatticePoint> gi = module_generators(x, x.q_at(i));
    for (Int t = 0; t < m[i]; ++t) gens = monomial_product(gens, gi);
  }
  return gens;
}

inline MnulResult mnul_decomposition(const Singularity& x, const Int& k) {
  Int kk = mod(k, x.d());
  if (kk == 0) throw DomainError("M^nul needs k != 0 mod d");
  MnulResult out{greedy_decomposition(x, kk) + canonical_decomposition(x, Verify::off), std::nullopt};
  out.quotient = quotient_dimension(x, Int(kk + x.w()), product_generators(x, out.exponents));
  return out;
}

struct NewtonReport {
  Rational mu;
  Rational mu_class;
  RegionCount region;
  Int lattice_segments;   // r_N: segments of the chain between lattice points of L(k)
  std::size_t faces;      // maximal compact faces
  Int coins;              // ||k||_1
  NewtonPolygon polygon;
  NewtonPolygon class_hull;
};

/// mu = 2 I + ||k||_1 + r_N - 2 + mu_class, valid when the region is a single piece.
inline Rational newton_number_single_piece(const Int& interior, const Int& coins, const Int& segments,
                                           const Rational& muc) {
  return Rational(Int(2 * interior + coins + segments - 2)) + muc;
}

inline NewtonReport newton_report(const Singularity& x, const std::vector<LatticePoint>& support,
                                  Verify mode = Verify::check, CheckLog* log = nullptr) {
  if (support.empty()) throw InvalidInput("empty support");
  Int k = monomial_class(x, support.front());
  NewtonPolygon poly = hull_of_diagram(support, x, k);
  if (!poly.touches_y_axis()) throw InvalidInput("non-convenient diagram: no pure power of y");
  if (!poly.touches_x_axis()) throw InvalidInput("non-convenient diagram: no pure power of x");
  NewtonPolygon ch = hull_of_class(x, k, mode, log);
  ClassLattice lat(x, k);
  NewtonReport r{0, mu_class(x, k, mode, log), region_count(ch, poly, lat), lattice_segments(poly, lat),
                 poly.compact_faces(), norms(x, greedy_decomposition(x, k)).coins, poly, ch};
  Rational axis = make_rational(Int(r.region.axis_gap_x + r.region.axis_gap_y), x.d());
  r.mu = make_rational(r.region.area2, x.d()) - axis + r.mu_class;
  if (mode != Verify::off) {
    Rational pick = Rational(Int(r.region.boundary_incidences + 2 * r.region.interior - 2 * r.region.pieces)) - axis +
                    r.mu_class;
    agree(mode, "Newton number by area vs lattice count", r.mu, pick, log);
  }
  return r;
}

inline Rational newton_number(const Singularity& x, const std::vector<LatticePoint>& support,
                              Verify mode = Verify::check, CheckLog* log = nullptr) {
  return newton_report(x, support, mode, log).mu;
}

/// Recovers X from Delta(1) and Delta(2): d = 1/(1 - 2 Delta(1)), q = d Delta(2) + 1.
inline Singularity reconstruct(const Rational& delta1, const Rational& delta2) {
  Rational den = 1 - 2 * delta1;
  if (den <= 0) throw InvalidInput("Delta(1) must be below 1/2");
  Rational dr = 1 / den;
  if (!is_integer(dr)) throw InvalidInput("1/(1 - 2 Delta(1)) = " + to_string(dr) + " is not an integer");
  Int d = dr.get_num();
  Rational qr = dr * delta2 + 1;
  if (!is_integer(qr)) throw InvalidInput("d Delta(2) + 1 = " + to_string(qr) + " is not an integer");
  if (d == 1) {
    if (delta2 != 0) throw InvalidInput("Delta(2) must vanish on a smooth point");
    return Singularity();
  }
  Int q = qr.get_num();
  if (q <= 0 || q >= d || gcd(d, q) != 1)
    throw InvalidInput("q = " + to_string(q) + " is not a unit below d = " + to_string(d));
  return hj_expansion(d, q);
}

struct InvariantReport {
  Singularity x;
  Int k;
  Rational mu;
  Rational delta;
  Int kappa;
  Rational big_delta;
  Decomposition mnul;
  Decomposition greedy;
  std::vector<Rational> discrepancy;
  CheckLog checks;
};

/// All invariants of class k. The discrepancy can be passed in when tabulating a whole X.
inline InvariantReport build_report(const Singularity& x, const Int& k, Verify mode = Verify::check,
                                    const std::vector<Rational>* disc = nullptr) {
  InvariantReport r;
  r.x = x;
  r.k = mod(k, x.d());
  CheckLog* log = mode == Verify::report ? &r.checks : nullptr;
  Verify strict = mode == Verify::report ? Verify::report : mode;
  r.greedy = greedy_decomposition(x, r.k);
  r.mu = mu_class(x, r.k, strict, log);
  r.delta = delta_generic(x, r.k);
  r.kappa = kappa_generic(x, r.k, strict, log);
  r.big_delta = r.k == 0 ? Rational(0) : r.delta - Rational(r.kappa);
  Decomposition w = canonical_decomposition(x, strict, log);
  r.mnul = r.greedy + w;
  if (mode != Verify::off && r.k != 0) {
    agree(strict, "delta recursion vs curvette sum", r.delta, delta_curvette_sum(generic_germ(x, r.k)), log);
    agree(strict, "[k+w] closed form vs greedy", sum_with_canonical_closed(x, r.k), greedy_decomposition(x, Int(r.k + x.w())),
          log);
    std::optional<Int> quot = mnul_decomposition(x, r.k).quotient;
    Int qd = quot ? *quot : Int(-1);
    agree(strict, "M^nul quotient vs kappa", qd, r.kappa, log);
  }
  r.discrepancy = disc ? *disc : discrepancy(x, strict, log);
  return r;
}

/// Reports for k = 0..d-1, rows computed on up to `workers` threads and returned in order.
inline std::vector<InvariantReport> delta_table(const Singularity& x, Verify mode = Verify::check,
                                                unsigned workers = 1) {
  CheckLog head;
  std::vector<Rational> disc = discrepancy(x, mode, mode == Verify::report ? &head : nullptr);
  if (mode != Verify::off) q_matrix(x, mode, mode == Verify::report ? &head : nullptr);
  std::size_t rows = static_cast<std::size_t>(x.d().get_ui());
  std::vector<InvariantReport> out(rows);
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(rows);
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < rows;) {
      try {
        out[i] = build_report(x, to_int(i), mode, &disc);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned nt = workers == 0 ? 1 : workers;
  if (nt > rows) nt = static_cast<unsigned>(rows);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nt; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  if (!out.empty()) {
    CheckLog merged = head;
    merged.merge(out[0].checks);
    out[0].checks = merged;
  }
  return out;
}

}  // namespace cqs
