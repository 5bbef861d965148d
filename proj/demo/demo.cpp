// Walk through X(14;1,11): resolution data, one class, and a germ in that class.

#include <iostream>

#include "cqs/io.hpp"

int main() {
  using namespace cqs;
  Singularity x = hj_expansion(Int(14), Int(11));
  std::cout << x.name() << "\n";
  std::cout << "  q    " << to_string(x.qseq()) << "\n";
  std::cout << "  c    " << to_string(x.cseq()) << "\n";
  std::cout << "  qbar " << to_string(x.qbarseq()) << "\n";

  InvariantReport r = build_report(x, Int(10));
  std::cout << "class 10: [k] = " << display(r.greedy) << ", mu = " << r.mu << ", delta = " << r.delta
            << ", kappa = " << r.kappa << ", Delta = " << r.big_delta << "\n";
  std::cout << "class hull " << to_string(hull_of_class(x, Int(10))) << "\n";

  ParsedGerm g = parse_germ("x^24 + x^13*y + x^3*y^7 + x*y^11 + y^20", x);
  NewtonReport nr = newton_report(x, g.support.points);
  std::cout << format_polynomial(g.polynomial) << "\n";
  std::cout << "  polygon " << to_string(nr.polygon) << "\n";
  std::cout << "  Newton number " << nr.mu << " (interior " << nr.region.interior << ", segments "
            << nr.lattice_segments << ")\n";

  GenericGerm gen = generic_germ(x, Int(10));
  std::cout << "generic germ " << format_polynomial(expand(gen)) << "\n";
  std::cout << "  Newton number " << newton_number(x, germ_support(gen).points) << "\n";
}
