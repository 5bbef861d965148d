// Command-line front end: invariants, tables, germs and Newton polygons of X(d;1,q).

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cqs/io.hpp"
#include "cqs/suite.hpp"

namespace {

using namespace cqs;

struct Options {
  std::string format;
  std::string verify = "assert";
  std::string output;
  bool raw = false;
  std::vector<std::string> args;
  std::string germ;
  std::string svg;
  long dmax = 0;
  unsigned workers = 0;
};

Int arg_int(const std::string& s, const char* what) {
  auto v = parse_rational(s);
  if (!v || v->get_den() != 1) throw InvalidInput(std::string(what) + " must be an integer, got '" + s + "'");
  return v->get_num();
}

Verify verify_level(const std::string& s) {
  if (s == "off") return Verify::off;
  if (s == "assert") return Verify::check;
  if (s == "report") return Verify::report;
  throw InvalidInput("unknown verification level '" + s + "', expected off, assert or report");
}

/// Reads X from the leading positionals and returns how many were consumed.
Singularity read_singularity(const Options& o, std::size_t& used) {
  std::size_t need = o.raw ? 3 : 2;
  if (o.args.size() < need) throw InvalidInput(o.raw ? "expected d a b" : "expected d q");
  used = need;
  Int d = arg_int(o.args[0], "d");
  if (o.raw) return normalize_type(RawType(d, arg_int(o.args[1], "a"), arg_int(o.args[2], "b")));
  if (d < 1) throw InvalidInput("d must be at least 1");
  Int q = arg_int(o.args[1], "q");
  if (d == 1) return Singularity();
  return hj_expansion(d, q);
}

const std::string& extra(const Options& o, std::size_t at, const char* what) {
  if (o.args.size() <= at) throw InvalidInput(std::string("missing ") + what);
  if (o.args.size() > at + 1) throw InvalidInput("unexpected argument '" + o.args[at + 1] + "'");
  return o.args[at];
}

void no_extra(const Options& o, std::size_t used) {
  if (o.args.size() > used) throw InvalidInput("unexpected argument '" + o.args[used] + "'");
}

std::string csv_value(const Json& v) {
  if (v.is_object() && v.contains("num") && v.contains("den"))
    return json_int(v["num"]).get_str() + "/" + json_int(v["den"]).get_str();
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += " ";
      out += csv_value(v[i]);
    }
    return out;
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

/// One header line and one row; nested arrays are space-joined with points as r:s.
std::string object_csv(const Json& j) {
  std::string head, row;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!head.empty()) {
      head += ",";
      row += ",";
    }
    head += csv_field(it.key());
    std::string v;
    if (it.value().is_array() && !it.value().empty() && it.value()[0].is_array()) {
      for (std::size_t i = 0; i < it.value().size(); ++i) {
        if (i) v += " ";
        v += csv_value(it.value()[i][0]) + ":" + csv_value(it.value()[i][1]);
      }
    } else {
      v = csv_value(it.value());
    }
    row += csv_field(v);
  }
  return head + "\n" + row + "\n";
}

std::string emit(const Json& j, Format f) { return f == Format::json ? j.dump(2) + "\n" : object_csv(j); }

Json matrix_json(const Matrix& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(ints_json(row));
  return a;
}

std::string cmd_info(const Options& o, Format f, Verify v) {
  std::size_t used;
  Singularity x = read_singularity(o, used);
  no_extra(o, used);
  Json j;
  j["d"] = int_json(x.d());
  j["q"] = int_json(x.q());
  j["n"] = static_cast<long>(x.n());
  j["qseq"] = ints_json(x.qseq());
  j["cseq"] = ints_json(x.cseq());
  j["qbarseq"] = ints_json(x.qbarseq());
  j["w"] = int_json(x.w());
  j["canonical"] = ints_json(canonical_decomposition(x, v == Verify::off ? Verify::off : Verify::check).entries());
  std::vector<Int> self;
  for (std::size_t i = 1; i <= x.n(); ++i) self.push_back(Int(-x.c_at(i)));
  j["self_intersections"] = ints_json(self);
  j["discrepancy"] = rationals_json(discrepancy(x, v == Verify::off ? Verify::off : Verify::check));
  if (f == Format::json) j["q_matrix"] = matrix_json(q_matrix(x, v == Verify::off ? Verify::off : Verify::check));
  return emit(j, f);
}

std::string cmd_table(const Options& o, Format f, Verify v, int& code) {
  std::size_t used;
  Singularity x = read_singularity(o, used);
  no_extra(o, used);
  unsigned w = o.workers ? o.workers : std::max(1u, std::thread::hardware_concurrency());
  std::vector<InvariantReport> rows = delta_table(x, v, w);
  for (const auto& r : rows)
    if (!r.checks.all_ok()) code = 2;
  return serialize_reports(rows, f, v == Verify::report);
}

std::string cmd_class(const Options& o, Format f, Verify v, int& code) {
  std::size_t used;
  Singularity x = read_singularity(o, used);
  Int k = arg_int(extra(o, used, "class k"), "k");
  InvariantReport r = build_report(x, k, v);
  if (!r.checks.all_ok()) code = 2;
  return serialize_report(r, f, v == Verify::report);
}

std::string cmd_germ(const Options& o, Format f, Verify v) {
  std::size_t used;
  Singularity x = read_singularity(o, used);
  ParsedGerm g = parse_germ(extra(o, used, "polynomial"), x);
  const auto& pts = g.support.points;
  NewtonPolygon poly = hull_of_diagram(pts, x, g.support.k);
  ValuationVector vv = valuation_vector(x, pts);
  Json j;
  j["d"] = int_json(x.d());
  j["q"] = int_json(x.q());
  j["k"] = int_json(g.support.k);
  j["polynomial"] = format_polynomial(g.polynomial);
  j["support"] = points_json(pts);
  j["polygon"] = points_json(poly.vertices());
  j["class_hull"] = points_json(hull_of_class(x, g.support.k, v).vertices());
  j["convenient"] = poly.convenient();
  j["generic"] = is_generic(x, pts);
  j["valuations"] = rationals_json(vv.v);
  j["alpha"] = ints_json(vv.alpha.entries());
  if (poly.convenient()) {
    NewtonReport nr = newton_report(x, pts, v);
    j["mu"] = rational_json(nr.mu);
    j["interior"] = int_json(nr.region.interior);
    j["lattice_segments"] = int_json(nr.lattice_segments);
  }
  return emit(j, f);
}

std::string cmd_newton(const Options& o, Format f, Verify v) {
  std::size_t used;
  Singularity x = read_singularity(o, used);
  Int k = arg_int(extra(o, used, "class k"), "k");
  ClassLattice lat(x, k);
  std::vector<SvgLayer> layers{{"class hull", hull_of_class(x, k, v), "#1f77b4"}};
  Json j;
  if (!o.germ.empty()) {
    ParsedGerm g = parse_germ(o.germ, x);
    if (g.support.k != lat.k())
      throw ClassMismatch("germ has class " + to_string(g.support.k) + ", expected " + to_string(lat.k()));
    NewtonReport nr = newton_report(x, g.support.points, v);
    layers.push_back({"germ", nr.polygon, "#d62728"});
    j = newton_json(x, nr);
  } else {
    j["d"] = int_json(x.d());
    j["q"] = int_json(x.q());
    j["k"] = int_json(lat.k());
    j["mu_class"] = rational_json(mu_class(x, k, v));
    j["class_hull"] = points_json(layers[0].polygon.vertices());
  }
  if (!o.svg.empty()) {
    render_svg(layers, lat, o.svg);
    j["svg"] = o.svg;
  }
  return emit(j, f);
}

std::string cmd_check(const Options& o, Format f, int& code) {
  std::vector<Singularity> xs;
  if (o.dmax > 0) {
    if (!o.args.empty()) throw InvalidInput("check --dmax takes no d q");
    for (long d = 1; d <= o.dmax; ++d)
      for (long q = d == 1 ? 0 : 1; q < (d == 1 ? 1 : d); ++q)
        if (d == 1 || gcd(Int(d), Int(q)) == 1) xs.push_back(hj_expansion(Int(d), Int(q)));
  } else {
    std::size_t used;
    xs.push_back(read_singularity(o, used));
    no_extra(o, used);
  }
  std::size_t checks = 0;
  std::vector<std::string> failures;
  for (const auto& x : xs) {
    SuiteResult r = run_suite(x);
    checks += r.checks;
    failures.insert(failures.end(), r.failures.begin(), r.failures.end());
  }
  Json j;
  j["singularities"] = static_cast<long>(xs.size());
  j["checks"] = static_cast<long>(checks);
  j["failures"] = failures;
  code = failures.empty() ? 0 : 2;
  return emit(j, f);
}

std::string cmd_reconstruct(const Options& o, Format f) {
  if (o.args.size() != 2) throw InvalidInput("expected Delta(1) Delta(2) as rationals");
  auto d1 = parse_rational(o.args[0]);
  auto d2 = parse_rational(o.args[1]);
  if (!d1 || !d2) throw InvalidInput("Delta values must be rationals like 3/5");
  Singularity x = reconstruct(*d1, *d2);
  Json j;
  j["d"] = int_json(x.d());
  j["q"] = int_json(x.q());
  return emit(j, f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of cyclic quotient surface singularities X(d;1,q)"};
  app.require_subcommand(1);
  Options o;
  const char* env = std::getenv("CQS_FORMAT");
  o.format = env && *env ? env : "json";
  app.add_option("--format", o.format, "Output format: json or csv (default from CQS_FORMAT)");
  app.add_option("--verify", o.verify, "Cross-check level: off, assert or report");
  app.add_option("-o,--output", o.output, "Write to a file instead of stdout");
  app.add_flag("--raw", o.raw, "Read the singularity as an unnormalized action d a b");

  auto add = [&](const char* name, const char* help, const char* args) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->add_option("args", o.args, args);
    return s;
  };
  add("info", "Resolution data of X", "d q");
  add("table", "Invariant table over all classes", "d q")->add_option("--workers", o.workers, "Worker threads");
  add("class", "Invariants of one class", "d q k");
  add("germ", "Support, polygon, valuations and Newton number of a germ", "d q POLY");
  CLI::App* newton = add("newton", "Class hull and optional germ polygon", "d q k");
  newton->add_option("--germ", o.germ, "Polynomial drawn over the class hull");
  newton->add_option("--svg", o.svg, "Write an SVG drawing to this path");
  add("check", "Run the identity and cross-route suite", "d q")->add_option("--dmax", o.dmax, "Check every X with d up to N");
  add("reconstruct", "Recover X from Delta(1) and Delta(2)", "D1 D2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    Format f = parse_format(o.format);
    Verify v = verify_level(o.verify);
    std::string name = app.get_subcommands().front()->get_name();
    std::string out;
    int code = 0;
    if (name == "info") out = cmd_info(o, f, v);
    else if (name == "table") out = cmd_table(o, f, v, code);
    else if (name == "class") out = cmd_class(o, f, v, code);
    else if (name == "germ") out = cmd_germ(o, f, v);
    else if (name == "newton") out = cmd_newton(o, f, v);
    else if (name == "check") out = cmd_check(o, f, code);
    else out = cmd_reconstruct(o, f);
    if (o.output.empty())
      std::cout << out;
    else
      write_text_file(o.output, out);
    return code;
  } catch (const RouteMismatch& e) {
    std::cerr << "route mismatch: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
