#pragma once

#include <cstddef>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "arith.hpp"
#include "error.hpp"
#include "germs.hpp"
#include "invariants.hpp"
#include "lattice.hpp"
#include "number.hpp"

namespace cqs {

using Json = nlohmann::ordered_json;

enum class Format { json, csv };

inline Format parse_format(std::string_view s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw InvalidInput("unknown format '" + std::string(s) + "', expected json or csv");
}

// ---------------------------------------------------------------------------
// Polynomial text

namespace detail {

class GermParser {
 public:
  explicit GermParser(std::string_view text) : t_(text) {}

  Polynomial parse() {
    Polynomial f = expr();
    skip();
    if (pos_ < t_.size()) fail(std::string("unexpected '") + t_[pos_] + "'");
    return f;
  }

 private:
  static constexpr long kMaxExponent = 100000;
  static constexpr long kMaxPower = 1000;

  std::string_view t_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < t_.size() && (t_[pos_] == ' ' || t_[pos_] == '\t' || t_[pos_] == '\n' || t_[pos_] == '\r')) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < t_.size() ? t_[pos_] : '\0';
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  Polynomial expr() {
    Rational sign = 1;
    char c = peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++pos_;
    }
    Polynomial f = scale(term(), sign);
    for (c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      char n = peek();
      if (n == '+' || n == '-') fail("repeated sign");
      Polynomial g = term();
      for (const auto& [m, co] : g) add_term(f, m, c == '-' ? Rational(-co) : co);
    }
    return f;
  }

  static Polynomial scale(Polynomial f, const Rational& s) {
    if (s != 1)
      for (auto& [m, c] : f) c *= s;
    return f;
  }

  Polynomial term() {
    Polynomial f = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        f = multiply(f, factor());
      } else if (is_digit(c) || c == 'x' || c == 'y' || c == '(') {
        f = multiply(f, factor());
      } else {
        return f;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    std::size_t start = pos_;
    if (pos_ >= t_.size() || !is_digit(t_[pos_])) fail("expected a non-negative integer exponent");
    while (pos_ < t_.size() && is_digit(t_[pos_])) ++pos_;
    std::string digits(t_.substr(start, pos_ - start));
    if (digits.size() > 9) fail("exponent too large");
    long e = std::stol(digits);
    bool monomial = base.size() == 1 && base.begin()->second == 1;
    if (e > (monomial ? kMaxExponent : kMaxPower)) fail("exponent too large");
    Polynomial out;
    add_term(out, {Int(0), Int(0)}, Rational(1));
    if (monomial) {
      const LatticePoint& m = base.begin()->first;
      out.clear();
      add_term(out, {Int(m.r * e), Int(m.s * e)}, Rational(1));
      return out;
    }
    for (long i = 0; i < e; ++i) out = multiply(out, base);
    return out;
  }

  Polynomial primary() {
    char c = peek();
    Polynomial f;
    if (c == 'x' || c == 'y') {
      ++pos_;
      add_term(f, c == 'x' ? LatticePoint{Int(1), Int(0)} : LatticePoint{Int(0), Int(1)}, Rational(1));
      return f;
    }
    if (c == '(') {
      ++pos_;
      f = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return f;
    }
    if (is_digit(c)) {
      std::size_t start = pos_;
      while (pos_ < t_.size() && is_digit(t_[pos_])) ++pos_;
      Int num(std::string(t_.substr(start, pos_ - start)));
      Int den = 1;
      if (pos_ < t_.size() && t_[pos_] == '/') {
        ++pos_;
        std::size_t ds = pos_;
        while (pos_ < t_.size() && is_digit(t_[pos_])) ++pos_;
        if (ds == pos_) fail("expected a denominator");
        den = Int(std::string(t_.substr(ds, pos_ - ds)));
        if (den == 0) fail("zero denominator");
      }
      add_term(f, {Int(0), Int(0)}, make_rational(num, den));
      if (f.empty()) f.emplace(LatticePoint{Int(0), Int(0)}, Rational(0));
      return f;
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }
};

}  // namespace detail

struct ParsedGerm {
  Polynomial polynomial;
  GermSupport support;
};

/// Parses a polynomial in x, y with rational coefficients, products, powers and parentheses.
inline Polynomial parse_polynomial(std::string_view text) {
  Polynomial f = detail::GermParser(text).parse();
  for (auto it = f.begin(); it != f.end();)
    it = it->second == 0 ? f.erase(it) : std::next(it);
  return f;
}

inline ParsedGerm parse_germ(std::string_view text, const Singularity& x) {
  Polynomial f = parse_polynomial(text);
  if (f.empty()) throw InvalidInput("the polynomial is zero");
  return {f, support_of(x, f)};
}

inline std::string format_monomial(const LatticePoint& m) {
  std::string out;
  if (m.r > 0) out += m.r == 1 ? "x" : "x^" + to_string(m.r);
  if (m.s > 0) {
    if (!out.empty()) out += "*";
    out += m.s == 1 ? "y" : "y^" + to_string(m.s);
  }
  return out;
}

/// Canonical text form; parse_polynomial(format_polynomial(f)) == f.
inline std::string format_polynomial(const Polynomial& f) {
  if (f.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f) {
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string coef = a.get_den() == 1 ? to_string(a.get_num()) : to_string(a);
    std::string mono = format_monomial(m);
    if (mono.empty())
      out += coef;
    else if (a == 1)
      out += mono;
    else
      out += coef + "*" + mono;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

inline Json int_json(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

inline Int json_int(const Json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto r = parse_rational(s);
    if (!r || r->get_den() != 1) throw InvalidInput("not an integer: " + s);
    return r->get_num();
  }
  throw InvalidInput("expected an integer, got " + j.dump());
}

inline Json rational_json(const Rational& r) {
  Json j;
  j["num"] = int_json(r.get_num());
  j["den"] = int_json(r.get_den());
  return j;
}

inline Rational json_rational(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw InvalidInput("expected {num, den}, got " + j.dump());
  Int den = json_int(j.at("den"));
  if (den == 0) throw InvalidInput("zero denominator");
  return make_rational(json_int(j.at("num")), den);
}

inline Json ints_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

inline std::vector<Int> json_ints(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array, got " + j.dump());
  std::vector<Int> v;
  for (const auto& e : j) v.push_back(json_int(e));
  return v;
}

inline Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

inline Json points_json(const std::vector<LatticePoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(Json::array({int_json(p.r), int_json(p.s)}));
  return a;
}

inline Json checks_json(const CheckLog& log) {
  Json a = Json::array();
  for (const auto& c : log.entries())
    a.push_back(Json{{"name", c.name}, {"primary", c.primary}, {"secondary", c.secondary}, {"ok", c.ok}});
  return a;
}

inline Json report_json(const InvariantReport& r, bool with_checks = false) {
  Json j;
  j["d"] = int_json(r.x.d());
  j["q"] = int_json(r.x.q());
  j["k"] = int_json(r.k);
  j["mu"] = rational_json(r.mu);
  j["delta"] = rational_json(r.delta);
  j["kappa"] = int_json(r.kappa);
  j["Delta"] = rational_json(r.big_delta);
  j["mnul"] = ints_json(r.mnul.entries());
  j["greedy"] = ints_json(r.greedy.entries());
  j["qseq"] = ints_json(r.x.qseq());
  j["cseq"] = ints_json(r.x.cseq());
  j["qbarseq"] = ints_json(r.x.qbarseq());
  j["discrepancy"] = rationals_json(r.discrepancy);
  if (with_checks) j["checks"] = checks_json(r.checks);
  return j;
}

/// Inverse of report_json. The HJ sequences are recomputed and must match.
inline InvariantReport report_from_json(const Json& j) {
  InvariantReport r;
  r.x = hj_expansion(json_int(j.at("d")), json_int(j.at("q")));
  r.k = json_int(j.at("k"));
  r.mu = json_rational(j.at("mu"));
  r.delta = json_rational(j.at("delta"));
  r.kappa = json_int(j.at("kappa"));
  r.big_delta = json_rational(j.at("Delta"));
  r.mnul = Decomposition(json_ints(j.at("mnul")));
  r.greedy = Decomposition(json_ints(j.at("greedy")));
  if (json_ints(j.at("qseq")) != r.x.qseq() || json_ints(j.at("cseq")) != r.x.cseq() ||
      json_ints(j.at("qbarseq")) != r.x.qbarseq())
    throw InvalidInput("sequences do not match " + r.x.name());
  for (const auto& e : j.at("discrepancy")) r.discrepancy.push_back(json_rational(e));
  return r;
}

inline const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols{"d",    "q",      "k",    "mu",   "delta",   "kappa",      "Delta",
                                             "mnul", "greedy", "qseq", "cseq", "qbarseq", "discrepancy"};
  return cols;
}

/// RFC 4180 quoting.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw InvalidInput("unterminated quote in CSV");
  out.push_back(cur);
  return out;
}

template <class T>
std::string join_space(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += to_string(v[i]);
  }
  return out;
}

inline std::string report_csv_row(const InvariantReport& r) {
  std::vector<std::string> f{to_string(r.x.d()),         to_string(r.x.q()),           to_string(r.k),
                             to_string(r.mu),            to_string(r.delta),           to_string(r.kappa),
                             to_string(r.big_delta),     join_space(r.mnul.entries()), join_space(r.greedy.entries()),
                             join_space(r.x.qseq()),     join_space(r.x.cseq()),       join_space(r.x.qbarseq()),
                             join_space(r.discrepancy)};
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ",";
    out += csv_field(f[i]);
  }
  return out;
}

inline std::string csv_header() {
  std::string out;
  for (std::size_t i = 0; i < csv_columns().size(); ++i) {
    if (i) out += ",";
    out += csv_columns()[i];
  }
  return out;
}

inline std::string serialize_reports(const std::vector<InvariantReport>& rs, Format fmt, bool with_checks = false) {
  if (fmt == Format::json) {
    Json a = Json::array();
    for (const auto& r : rs) a.push_back(report_json(r, with_checks));
    return a.dump(2) + "\n";
  }
  std::string out = csv_header() + "\n";
  for (const auto& r : rs) out += report_csv_row(r) + "\n";
  return out;
}

inline std::string serialize_report(const InvariantReport& r, Format fmt, bool with_checks = false) {
  if (fmt == Format::json) return report_json(r, with_checks).dump(2) + "\n";
  return csv_header() + "\n" + report_csv_row(r) + "\n";
}

namespace detail {

inline Int field_int(const std::string& s) {
  auto v = parse_rational(s);
  if (!v || v->get_den() != 1) throw InvalidInput("not an integer: '" + s + "'");
  return v->get_num();
}

inline Rational field_rational(const std::string& s) {
  auto v = parse_rational(s);
  if (!v) throw InvalidInput("not a rational: '" + s + "'");
  return *v;
}

template <class F>
auto field_list(const std::string& s, F conv) {
  std::vector<decltype(conv(std::string()))> out;
  std::istringstream in(s);
  for (std::string tok; in >> tok;) out.push_back(conv(tok));
  return out;
}

}  // namespace detail

/// Inverse of serialize_reports for either format.
inline std::vector<InvariantReport> parse_reports(const std::string& text, Format fmt) {
  std::vector<InvariantReport> out;
  if (fmt == Format::json) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    if (j.is_array())
      for (const auto& e : j) out.push_back(report_from_json(e));
    else
      out.push_back(report_from_json(j));
    return out;
  }
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || split_csv_line(line) != csv_columns()) throw InvalidInput("missing or wrong CSV header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split_csv_line(line);
    if (f.size() != csv_columns().size()) throw InvalidInput("wrong number of CSV fields");
    InvariantReport r;
    r.x = hj_expansion(detail::field_int(f[0]), detail::field_int(f[1]));
    r.k = detail::field_int(f[2]);
    r.mu = detail::field_rational(f[3]);
    r.delta = detail::field_rational(f[4]);
    r.kappa = detail::field_int(f[5]);
    r.big_delta = detail::field_rational(f[6]);
    r.mnul = Decomposition(detail::field_list(f[7], detail::field_int));
    r.greedy = Decomposition(detail::field_list(f[8], detail::field_int));
    if (detail::field_list(f[9], detail::field_int) != r.x.qseq() ||
        detail::field_list(f[10], detail::field_int) != r.x.cseq() ||
        detail::field_list(f[11], detail::field_int) != r.x.qbarseq())
      throw InvalidInput("sequences do not match " + r.x.name());
    r.discrepancy = detail::field_list(f[12], detail::field_rational);
    out.push_back(std::move(r));
  }
  return out;
}

/// Field-by-field equality of the serialized content.
inline bool same_content(const InvariantReport& a, const InvariantReport& b) {
  return a.x == b.x && a.k == b.k && a.mu == b.mu && a.delta == b.delta && a.kappa == b.kappa &&
         a.big_delta == b.big_delta && a.mnul == b.mnul && a.greedy == b.greedy && a.discrepancy == b.discrepancy;
}

inline Json newton_json(const Singularity& x, const NewtonReport& r) {
  Json j;
  j["d"] = int_json(x.d());
  j["q"] = int_json(x.q());
  j["k"] = int_json(monomial_class(x, r.polygon.front()));
  j["mu"] = rational_json(r.mu);
  j["mu_class"] = rational_json(r.mu_class);
  j["interior"] = int_json(r.region.interior);
  j["boundary"] = int_json(r.region.boundary);
  j["pieces"] = int_json(r.region.pieces);
  j["area2"] = int_json(r.region.area2);
  j["lattice_segments"] = int_json(r.lattice_segments);
  j["faces"] = static_cast<long>(r.faces);
  j["polygon"] = points_json(r.polygon.vertices());
  j["class_hull"] = points_json(r.class_hull.vertices());
  return j;
}

// ---------------------------------------------------------------------------
// SVG

struct SvgLayer {
  std::string label;
  NewtonPolygon polygon;
  std::string color;
};

namespace detail {

inline std::string fmt3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

inline double to_double(const Int& v) { return v.get_d(); }

}  // namespace detail

/// Deterministic drawing of one or more Newton polygons over the lattice points of L(k).
inline std::string svg_document(const std::vector<SvgLayer>& layers, const ClassLattice& lat) {
  using detail::fmt3;
  Int rmax = 1, smax = 1;
  for (const auto& l : layers)
    for (const auto& v : l.polygon.vertices()) {
      if (v.r > rmax) rmax = v.r;
      if (v.s > smax) smax = v.s;
    }
  rmax += 1;
  smax += 1;
  const double size = 480.0, margin = 40.0;
  double unit = size / detail::to_double(rmax > smax ? rmax : smax);
  double width = margin * 2 + unit * detail::to_double(rmax);
  double height = margin * 2 + unit * detail::to_double(smax);
  auto px = [&](const Int& r) { return fmt3(margin + unit * detail::to_double(r)); };
  auto py = [&](const Int& s) { return fmt3(height - margin - unit * detail::to_double(s)); };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt3(width) << "\" height=\"" << fmt3(height)
    << "\" viewBox=\"0 0 " << fmt3(width) << " " << fmt3(height) << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(rmax) << "\" y2=\"" << py(0)
    << "\" stroke=\"black\"/>\n";
  o << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\"" << py(smax)
    << "\" stroke=\"black\"/>\n";
  Int npts = (rmax + 1) * (smax + 1) / lat.d();
  if (npts <= 20000) {
    o << "<g fill=\"#888888\">\n";
    for (Int r = 0; r <= rmax; ++r)
      for (Int s = lat.s_residue(r); s <= smax; s += lat.d())
        o << "<circle cx=\"" << px(r) << "\" cy=\"" << py(s) << "\" r=\"2.000\"/>\n";
    o << "</g>\n";
  }
  for (std::size_t li = 0; li < layers.size(); ++li) {
    const auto& l = layers[li];
    const auto& v = l.polygon.vertices();
    o << "<polyline fill=\"none\" stroke=\"" << l.color << "\" stroke-width=\"2.000\" points=\"";
    o << px(v.front().r) << "," << py(smax);
    for (const auto& p : v) o << " " << px(p.r) << "," << py(p.s);
    o << " " << px(rmax) << "," << py(v.back().s) << "\"/>\n";
    for (const auto& p : v)
      o << "<circle cx=\"" << px(p.r) << "\" cy=\"" << py(p.s) << "\" r=\"3.500\" fill=\"" << l.color << "\"/>\n";
    o << "<text x=\"" << fmt3(width - margin) << "\" y=\"" << fmt3(margin + 16.0 * static_cast<double>(li))
      << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"12\" fill=\"" << l.color << "\">" << l.label
      << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write " + path);
  f << text;
  if (!f) throw InvalidInput("write failed for " + path);
}

inline void render_svg(const std::vector<SvgLayer>& layers, const ClassLattice& lat, const std::string& path) {
  write_text_file(path, svg_document(layers, lat));
}

}  // namespace cqs
