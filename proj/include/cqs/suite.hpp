#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arith.hpp"
#include "checks.hpp"
#include "germs.hpp"
#include "invariants.hpp"
#include "lattice.hpp"
#include "number.hpp"
#include "resolution.hpp"

namespace cqs {

struct SuiteResult {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  bool ok() const { return failures.empty(); }
};

/// Identities among the q, qbar and c sequences of X and its sub-bamboos X_i = X(q_i;1,q_{i+1}).
inline void check_sequence_identities(const Singularity& x, SuiteResult& out) {
  const Int& d = x.d();
  std::size_t n = x.n();
  std::string tag = x.name() + " ";
  std::vector<Singularity> sub;
  for (std::size_t i = 0; i <= n; ++i) sub.push_back(hj_expansion(x.q_at(i), x.q_at(i + 1)));

  for (std::size_t i = 1; i <= n; ++i) {
    Rational sum = 0;
    for (std::size_t j = 0; j < i; ++j) sum += make_rational(Int(1), Int(x.q_at(j) * x.q_at(j + 1)));
    out.expect(Rational(x.qbar_at(i)) == Rational(d * x.q_at(i)) * sum, tag + "qbar as a sum, i=" + std::to_string(i));
  }
  for (std::size_t i = 2; i <= n + 1; ++i)
    out.expect(x.qbar_at(i) == x.c_at(i - 1) * x.qbar_at(i - 1) - x.qbar_at(i - 2),
               tag + "qbar recurrence, i=" + std::to_string(i));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n + 1; ++j)
      out.expect(x.qbar_at(j) * x.q_at(i) - x.q_at(j) * x.qbar_at(i) == d * sub[i].qbar_at(j - i),
                 tag + "minor identity, i=" + std::to_string(i) + " j=" + std::to_string(j));
  for (std::size_t i = 1; i <= n + 1; ++i)
    out.expect(x.q_at(i) == x.q() * x.qbar_at(i) - d * sub[1].qbar_at(i - 1),
               tag + "q from qbar, i=" + std::to_string(i));
  for (std::size_t i = 0; i <= n; ++i)
    out.expect(x.qbar_at(i + 1) * x.q_at(i) - x.q_at(i + 1) * x.qbar_at(i) == d,
               tag + "consecutive determinant, i=" + std::to_string(i));
  for (std::size_t i = 0; i + 1 <= n; ++i)
    for (std::size_t j = 1; j + i <= n; ++j)
      out.expect(sub[i].qbar_at(j) * sub[i + 1].qbar_at(j) - sub[i].qbar_at(j + 1) * sub[i + 1].qbar_at(j - 1) == 1,
                 tag + "sub-bamboo determinant, i=" + std::to_string(i) + " j=" + std::to_string(j));
}

/// Full cross-check of X: every dual route and identity the library knows.
inline SuiteResult run_suite(const Singularity& x) {
  SuiteResult out;
  std::string tag = x.name() + " ";
  auto guarded = [&](const std::string& what, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      out.expect(false, tag + what + ": " + e.what());
    }
  };
  if (x.n() >= 1) check_sequence_identities(x, out);
  guarded("Q matrix", [&] { out.expect(q_matrix_definition(x) == q_matrix_completion(x), tag + "Q matrix routes"); });
  guarded("canonical class", [&] {
    out.expect(canonical_decomposition(x, Verify::off) == greedy_decomposition(x, x.w()), tag + "[w] is greedy");
  });
  guarded("discrepancy", [&] {
    std::vector<Rational> e = discrepancy_closed(x);
    out.expect(e == discrepancy_by_adjunction(x), tag + "discrepancy routes");
    for (const auto& v : e) out.expect(v > -1 && v <= 0, tag + "discrepancy in (-1,0]");
  });
  guarded("resolution chain", [&] { hj_chain(x); });
  guarded("Delta(1)", [&] {
    out.expect(delta_cap(x, Int(1)) == make_rational(Int(x.d() - 1), Int(2 * x.d())), tag + "Delta(1) = (d-1)/2d");
  });
  guarded("reconstruct", [&] {
    out.expect(equivalent(reconstruct(delta_cap(x, Int(1)), delta_cap(x, Int(2))), x), tag + "reconstruction");
  });
  ResolutionChain chain = hj_chain(x);
  for (Int k = 0; k < x.d(); ++k) {
    std::string kt = "k=" + to_string(k) + " ";
    guarded(kt + "report", [&] {
      InvariantReport r = build_report(x, k, Verify::report);
      for (const auto& c : r.checks.entries())
        out.expect(c.ok, tag + kt + c.name + ": " + c.primary + " vs " + c.secondary);
      out.expect(r.delta - Rational(r.kappa) == delta_cap(x, k), tag + kt + "Delta");
      out.expect(r_blache(x, k) == -delta_cap(x, Int(-k)), tag + kt + "R_X");
      if (k != 0) out.expect(r.mu == 2 * r.delta - Rational(r.kappa), tag + kt + "mu_class = 2 delta - kappa");
    });
    guarded(kt + "class hull", [&] {
      NewtonPolygon h = hull_of_class_closed(x, k);
      out.expect(h == lower_hull(module_generators(x, k)), tag + kt + "class hull routes");
      Decomposition g = greedy_decomposition(x, k);
      NewtonPolygon sum = hull_of_class_closed(x, Int(0));
      for (std::size_t i = 1; i <= x.n(); ++i)
        for (Int t = 0; t < g[i]; ++t) sum = minkowski_sum(sum, hull_of_class_closed(x, x.q_at(i)));
      out.expect(sum == h, tag + kt + "class hull is the sum of curvette hulls");
    });
    guarded(kt + "generic germ", [&] {
      GenericGerm g = generic_germ(x, k);
      GermSupport s = germ_support(g, Verify::off);
      out.expect(hull_of_diagram(s.points, x, k) == hull_of_class(x, k, Verify::off), tag + kt + "germ polygon");
      ValuationVector vv = valuation_vector(x, s.points);
      out.expect(vv.alpha == greedy_decomposition(x, k), tag + kt + "intersection vector equals [k]");
      out.expect(newton_number(x, s.points, Verify::report) == mu_class(x, k, Verify::off), tag + kt + "generic mu");
      out.expect(*quotient_dimension(x, k, product_generators(x, greedy_decomposition(x, k))) == 0,
                 tag + kt + "curvette modules generate O(k)");
    });
    guarded(kt + "valuations", [&] {
      LatticePoint m{k, Int(0)};
      out.expect(valuations_closed(x, m) == valuations_by_charts(chain, m), tag + kt + "valuation routes x^k");
      LatticePoint m2{Int(0), k};
      out.expect(valuations_closed(x, m2) == valuations_by_charts(chain, m2), tag + kt + "valuation routes y^k");
    });
  }
  return out;
}

}  // namespace cqs
