#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "checks.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "number.hpp"

namespace cqs {

/// One affine chart of a weighted blow-up. A monomial x^r y^s pulls back to
/// u^(m11 r + m12 s) v^(m21 r + m22 s); the exceptional divisor is {u = 0} or {v = 0}.
struct Chart {
  RawType type;
  Int m11, m12, m21, m22;
  bool exceptional_is_u;

  LatticePoint pull(const LatticePoint& p) const {
    return {Int(m11 * p.r + m12 * p.s), Int(m21 * p.r + m22 * p.s)};
  }
};

struct BlowupCharts {
  RawType ambient;
  Int p;
  Int qw;
  Int e;  // order of the stabiliser along the exceptional divisor
  Chart chart1;
  Chart chart2;
};

/// (p, qw)-weighted blow-up of the small action (d;a,b).
inline BlowupCharts blowup_charts(const RawType& ambient, const Int& p, const Int& qw) {
  if (p <= 0 || qw <= 0) throw InvalidInput("weights must be positive");
  if (gcd(p, qw) != 1) throw InvalidInput("weights must be coprime");
  const Int& d = ambient.d;
  if (d > 1 && (gcd(d, ambient.a) != 1 || gcd(d, ambient.b) != 1))
    throw InvalidInput("ambient action " + to_string(ambient) + " contains pseudo-reflections; normalize first");
  Int ai = *inverse_mod(ambient.a, d);
  Int bi = *inverse_mod(ambient.b, d);
  Int e = gcd(d, Int(p * ambient.b - qw * ambient.a));
  if (e == 0) e = d;
  Int n1 = -qw + ai * p * ambient.b;
  Int n2 = -p + bi * qw * ambient.a;
  if (mod(n1, e) != 0 || mod(n2, e) != 0) throw RouteMismatch("chart weights are not integral");
  Chart c1{RawType(Int(p * d / e), Int(1), Int(n1 / e)), p, qw, Int(0), Int(1), true};
  Chart c2{RawType(Int(qw * d / e), Int(n2 / e), Int(1)), Int(1), Int(0), p, qw, false};
  return {ambient, p, qw, e, c1, c2};
}

struct ResolutionChain {
  Singularity x;
  std::vector<BlowupCharts> stages;  // stage i (0-based) creates E_{i+1}
  Matrix intersection;               // n x n, E_i^2 = -c_i on the diagonal
};

/// Successive (1, q_i) blow-ups of X(q_{i-1};1,q_i); the second chart of each is X(q_i;1,q_{i+1}).
inline ResolutionChain hj_chain(const Singularity& x) {
  ResolutionChain ch{x, {}, {}};
  std::size_t n = x.n();
  for (std::size_t i = 1; i <= n; ++i) {
    RawType amb(x.q_at(i - 1), Int(1), x.q_at(i));
    BlowupCharts b = blowup_charts(amb, Int(1), x.q_at(i));
    Singularity next = normalize_type(b.chart2.type);
    if (!(next == hj_expansion(x.q_at(i), x.q_at(i + 1))))
      throw RouteMismatch("chart 2 of stage " + std::to_string(i) + " is " + next.name());
    ch.stages.push_back(b);
  }
  ch.intersection.assign(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) {
    ch.intersection[i][i] = -x.c_at(i + 1);
    if (i + 1 < n) ch.intersection[i][i + 1] = ch.intersection[i + 1][i] = 1;
  }
  return ch;
}

/// v_i(x^r y^s) = (r qbar_i + s q_i) / d, i = 1..n.
inline std::vector<Rational> valuations_closed(const Singularity& x, const LatticePoint& m) {
  std::vector<Rational> v;
  for (std::size_t i = 1; i <= x.n(); ++i)
    v.push_back(make_rational(Int(m.r * x.qbar_at(i) + m.s * x.q_at(i)), x.d()));
  return v;
}

/// Same valuations by pulling the monomial through the second chart of each stage. The divisor
/// exponent is divided by e because the chart coordinate along E_i is the e-th power. Exponents
/// are kept as integers over a shared denominator.
inline std::vector<Rational> valuations_by_charts(const ResolutionChain& ch, const LatticePoint& m) {
  std::vector<Rational> v;
  Int u = m.r, w = m.s, den = 1;
  for (const auto& st : ch.stages) {
    const Chart& c = st.chart2;
    Int ve = c.m21 * u + c.m22 * w;
    Int ue = c.m11 * u + c.m12 * w;
    ue *= st.e;
    den *= st.e;
    Int g = gcd(gcd(ue, ve), den);
    if (g > 1) {
      mpz_divexact(ue.get_mpz_t(), ue.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(ve.get_mpz_t(), ve.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
    }
    v.push_back(make_rational(ve, den));
    u = std::move(ue);
    w = std::move(ve);
  }
  return v;
}

inline std::vector<Rational> monomial_valuations(const Singularity& x, const Int& r, const Int& s,
                                                 Verify mode = Verify::check, CheckLog* log = nullptr) {
  if (r < 0 || s < 0) throw InvalidInput("negative exponent");
  LatticePoint m{r, s};
  std::vector<Rational> v = valuations_closed(x, m);
  if (mode != Verify::off) agree(mode, "valuations closed form vs charts", v, valuations_by_charts(hj_chain(x), m), log);
  return v;
}

/// min_{(r,s) in support} p r + qw s.
inline Int nu(const Int& p, const Int& qw, const std::vector<LatticePoint>& support) {
  if (support.empty()) throw InvalidInput("empty support");
  Int best = p * support.front().r + qw * support.front().s;
  for (const auto& m : support) {
    Int val = p * m.r + qw * m.s;
    if (val < best) best = val;
  }
  return best;
}

/// epsilon_i = (q_i + qbar_i)/d - 1.
inline std::vector<Rational> discrepancy_closed(const Singularity& x) {
  std::vector<Rational> e;
  for (std::size_t i = 1; i <= x.n(); ++i)
    e.push_back(make_rational(Int(x.q_at(i) + x.qbar_at(i)), x.d()) - 1);
  return e;
}

/// Adjunction K.E_i = -2 - E_i^2 with K = sum eps_j E_j gives the tridiagonal system M eps = c - 2.
inline std::vector<Rational> discrepancy_by_adjunction(const Singularity& x) {
  std::size_t n = x.n();
  if (n == 0) return {};
  std::vector<Rational> diag(n), rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    diag[i] = Rational(-x.c_at(i + 1));
    rhs[i] = Rational(x.c_at(i + 1) - 2);
  }
  // Thomas elimination with unit off-diagonals.
  for (std::size_t i = 1; i < n; ++i) {
    Rational f = 1 / diag[i - 1];
    diag[i] -= f;
    rhs[i] -= f * rhs[i - 1];
  }
  std::vector<Rational> eps(n);
  eps[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) eps[i] = (rhs[i] - eps[i + 1]) / diag[i];
  return eps;
}

inline std::vector<Rational> discrepancy(const Singularity& x, Verify mode = Verify::check, CheckLog* log = nullptr) {
  std::vector<Rational> e = discrepancy_closed(x);
  if (mode != Verify::off) agree(mode, "discrepancy closed form vs adjunction", e, discrepancy_by_adjunction(x), log);
  return e;
}

}  // namespace cqs
