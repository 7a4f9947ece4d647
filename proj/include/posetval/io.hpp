#pragma once

#include <cctype>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "posetval/errors.hpp"
#include "posetval/geom.hpp"
#include "posetval/linden.hpp"
#include "posetval/planar.hpp"
#include "posetval/poset.hpp"

namespace posetval {

namespace detail {

struct Token {
  std::string text;
  int column;  // 1-based
};

// Whitespace-separated tokens with their column positions; '#' starts a
// comment running to end of line.
inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '#')
      ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

inline long long parse_int(const Token& t, int lineno) {
  long long v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size()) {
    std::ostringstream msg;
    msg << "line " << lineno << ", column " << t.column << ": expected integer, got '"
        << t.text << "'";
    throw input_error(msg.str());
  }
  return v;
}

[[noreturn]] inline void fail_line(int lineno, int column, const std::string& what) {
  std::ostringstream msg;
  msg << "line " << lineno << ", column " << column << ": " << what;
  throw input_error(msg.str());
}

}  // namespace detail

struct PosetFile {
  Poset poset;
  std::optional<PlanarEmbedding> embedding;
  std::vector<CoverEdge> dropped;  // transitively redundant input edges
};

// Text format: first an element count n, then one cover pair "i j" per line,
// then optionally a line "embedding" followed by per-vertex clockwise
// neighbor cycles "v n1 n2 ..." for the diagram extended by bottom 0 and top
// n+1. Blank lines and '#' comments are allowed anywhere.
inline PosetFile parse_poset_file(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_n = false;
  int n = 0;
  bool in_embedding = false;
  std::vector<CoverEdge> edges;
  PlanarEmbedding emb;

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::tokenize(line);
    if (toks.empty()) continue;

    if (!have_n) {
      if (toks.size() != 1)
        detail::fail_line(lineno, toks[1].column, "expected just the element count");
      long long v = detail::parse_int(toks[0], lineno);
      if (v < 1 || v > 64)
        detail::fail_line(lineno, toks[0].column, "element count must be in 1..64");
      n = static_cast<int>(v);
      have_n = true;
      continue;
    }

    if (!in_embedding && toks[0].text == "embedding") {
      if (toks.size() != 1)
        detail::fail_line(lineno, toks[1].column, "unexpected token after 'embedding'");
      in_embedding = true;
      continue;
    }

    if (!in_embedding) {
      if (toks.size() != 2)
        detail::fail_line(lineno, toks[0].column, "expected a cover pair 'i j'");
      long long i = detail::parse_int(toks[0], lineno);
      long long j = detail::parse_int(toks[1], lineno);
      if (i < 1 || i > n)
        detail::fail_line(lineno, toks[0].column, "element out of range 1..n");
      if (j < 1 || j > n)
        detail::fail_line(lineno, toks[1].column, "element out of range 1..n");
      if (i == j)
        detail::fail_line(lineno, toks[0].column, "cover pair relates an element to itself");
      edges.push_back({static_cast<int>(i), static_cast<int>(j)});
      continue;
    }

    long long v = detail::parse_int(toks[0], lineno);
    if (v < 0 || v > n + 1)
      detail::fail_line(lineno, toks[0].column, "vertex out of range 0..n+1");
    if (emb.rotation.count(static_cast<int>(v)))
      detail::fail_line(lineno, toks[0].column, "duplicate rotation line for a vertex");
    std::vector<int> cyc;
    for (std::size_t k = 1; k < toks.size(); ++k) {
      long long u = detail::parse_int(toks[k], lineno);
      if (u < 0 || u > n + 1)
        detail::fail_line(lineno, toks[k].column, "neighbor out of range 0..n+1");
      cyc.push_back(static_cast<int>(u));
    }
    if (cyc.empty())
      detail::fail_line(lineno, toks[0].column, "rotation line lists no neighbors");
    emb.rotation[static_cast<int>(v)] = std::move(cyc);
  }

  if (!have_n) throw input_error("line 1, column 1: missing element count");

  PosetFile out;
  auto built = Poset::from_covers(n, edges);
  out.poset = std::move(built.poset);
  out.dropped = std::move(built.dropped);
  if (in_embedding) {
    if (emb.rotation.empty()) throw input_error("embedding section is empty");
    out.embedding = std::move(emb);
  }
  return out;
}

inline PosetFile parse_poset_text(const std::string& text) {
  std::istringstream in(text);
  return parse_poset_file(in);
}

// ---------------------------------------------------------------------------
// text rendering

// Variable naming for the text renderers: indices below y_split render as
// prefix1, prefix2, ...; from y_split on (when y_split > 0) as y1, y2, ...
// The split form is used for skew diagrams, whose variables are x_1..x_r
// followed by y_1..y_c.
struct VarNamer {
  std::string prefix = "x";
  int y_split = 0;
  bool bare = false;  // single-variable contexts: no index suffix

  std::string operator()(std::size_t i) const {
    if (bare) return prefix;
    if (y_split > 0 && static_cast<int>(i) >= y_split)
      return "y" + std::to_string(i - y_split + 1);
    return prefix + std::to_string(i + 1);
  }
};

namespace detail {

// One monomial such as "2*x1^2*x3"; returns the sign separately so callers
// can join terms with '+'/'-'. An empty exponent support renders as the bare
// coefficient.
inline std::pair<bool, std::string> render_monomial(const Exponents& e,
                                                    const Rational& c,
                                                    const VarNamer& name) {
  Rational a = c < 0 ? Rational(-c) : c;
  std::ostringstream s;
  bool coeff_one = a == 1;
  bool any = false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (any || !coeff_one) s << "*";
    s << name(i);
    if (e[i] != 1) s << "^" << e[i];
    any = true;
  }
  std::string body = s.str();
  if (!coeff_one || !any) body = to_string(a) + body;
  return {c < 0, body};
}

inline std::string render_terms(
    const std::vector<std::pair<Exponents, Rational>>& terms, const VarNamer& name) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    auto [neg, body] = render_monomial(e, c, name);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? "-" : "+";
    }
    out += body;
  }
  return out;
}

// Descending lexicographic order of exponent vectors.
inline std::string render_polynomial(const Polynomial& p, const VarNamer& name) {
  std::vector<std::pair<Exponents, Rational>> terms(p.terms().rbegin(),
                                                    p.terms().rend());
  return render_terms(terms, name);
}

// Ascending degree; the natural reading order for q-polynomials.
inline std::string render_polynomial_ascending(const Polynomial& p,
                                               const VarNamer& name) {
  std::vector<std::pair<Exponents, Rational>> terms(p.terms().begin(),
                                                    p.terms().end());
  return render_terms(terms, name);
}

}  // namespace detail

inline std::string render_qpoly(const Polynomial& p) {
  return detail::render_polynomial_ascending(p, VarNamer{"q", 0, true});
}

// "x1-x2", "x1+2*x2-x3", ... for an integer linear form.
inline std::string render_linear_form(const LinearForm& f, const VarNamer& name = {}) {
  Polynomial p(static_cast<int>(f.a.size()));
  for (std::size_t i = 0; i < f.a.size(); ++i)
    if (f.a[i] != 0) p += Polynomial::variable(static_cast<int>(f.a.size()),
                                               static_cast<int>(i), Rational(f.a[i]));
  return detail::render_polynomial(p, name);
}

// Integer vectors as signed combinations of unit vectors: "e1-e2", "e1+e2+e3".
inline std::string render_unit_combination(const std::vector<long long>& v) {
  std::ostringstream s;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    long long a = v[i];
    if (first) {
      if (a < 0) s << "-";
      first = false;
    } else {
      s << (a < 0 ? "-" : "+");
    }
    if (a != 1 && a != -1) s << (a < 0 ? -a : a) << "*";
    s << "e" << (i + 1);
  }
  if (first) return "0";
  return s.str();
}

inline std::string render_linden(const LinDenRat& v, const VarNamer& name = {}) {
  if (v.is_zero()) return "0";
  if (v.denominator().empty()) {
    Polynomial p = v.numerator() * Rational(v.sign());
    return detail::render_polynomial(p, name);
  }
  std::string num = detail::render_polynomial(v.numerator(), name);
  if (v.numerator().terms().size() > 1) num = "(" + num + ")";
  if (v.sign() < 0) num = "-" + num;

  std::vector<std::string> parts;
  for (const auto& [f, m] : v.denominator()) {
    int support = 0;
    for (long long a : f.a)
      if (a != 0) ++support;
    std::string fs = render_linear_form(f, name);
    if (support > 1) fs = "(" + fs + ")";
    if (m > 1) fs += "^" + std::to_string(m);
    parts.push_back(std::move(fs));
  }
  std::string den;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) den += "*";
    den += parts[i];
  }
  if (parts.size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

inline std::string render_geom_factor(const GeomFactor& u) {
  std::ostringstream s;
  s << "(1-";
  bool any = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (any) s << "*";
    s << "X" << (i + 1);
    if (u[i] != 1) s << "^" << u[i];
    any = true;
  }
  s << ")";
  return s.str();
}

// Hilbert numerators read constant-first, so terms are joined in ascending
// exponent order, unlike the descending order used for linear-form numerators.
inline std::string render_geom(const GeomRat& v) {
  const VarNamer name{"X", 0};
  if (v.is_zero()) return "0";
  if (v.denominator().empty())
    return detail::render_polynomial_ascending(v.numerator(), name);
  std::string num = detail::render_polynomial_ascending(v.numerator(), name);
  if (v.numerator().terms().size() > 1) num = "(" + num + ")";

  std::vector<std::string> parts;
  for (const auto& [u, m] : v.denominator()) {
    std::string fs = render_geom_factor(u);
    if (m > 1) fs += "^" + std::to_string(m);
    parts.push_back(std::move(fs));
  }
  std::string den;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) den += "*";
    den += parts[i];
  }
  if (parts.size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

// ---------------------------------------------------------------------------
// structured (line-oriented) output: lossless term/factor records

inline void emit_structured(std::ostream& out, const LinDenRat& v) {
  out << "type linden\n";
  out << "nvars " << v.nvars() << "\n";
  out << "sign " << v.sign() << "\n";
  for (const auto& [e, c] : v.numerator().terms()) {
    out << "numterm " << to_string(c);
    for (int x : e) out << " " << x;
    out << "\n";
  }
  for (const auto& [f, m] : v.denominator()) {
    out << "denfactor " << m;
    for (long long a : f.a) out << " " << a;
    out << "\n";
  }
  out << "end\n";
}

inline void emit_structured(std::ostream& out, const GeomRat& v) {
  out << "type geom\n";
  out << "nvars " << v.nvars() << "\n";
  for (const auto& [e, c] : v.numerator().terms()) {
    out << "numterm " << to_string(c);
    for (int x : e) out << " " << x;
    out << "\n";
  }
  for (const auto& [u, m] : v.denominator()) {
    out << "denfactor " << m;
    for (int a : u) out << " " << a;
    out << "\n";
  }
  out << "end\n";
}

inline void emit_structured_qpoly(std::ostream& out, const Polynomial& p) {
  out << "type qpoly\n";
  out << "nvars 1\n";
  for (const auto& [e, c] : p.terms()) {
    out << "numterm " << to_string(c);
    for (int x : e) out << " " << x;
    out << "\n";
  }
  out << "end\n";
}

namespace detail {

inline Rational parse_rational_token(const Token& t, int lineno) {
  auto slash = t.text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(t.text));
    return Rational(Int(t.text.substr(0, slash)), Int(t.text.substr(slash + 1)));
  } catch (const std::exception&) {
    fail_line(lineno, t.column, "expected rational number, got '" + t.text + "'");
  }
}

struct StructuredBody {
  int nvars = -1;
  int sign = 1;
  bool saw_sign = false;
  std::vector<std::pair<Rational, std::vector<long long>>> numterms;
  std::vector<std::pair<int, std::vector<long long>>> denfactors;
};

inline StructuredBody parse_structured_body(std::istream& in, int& lineno) {
  StructuredBody b;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0].text;
    if (key == "end") return b;
    if (key == "nvars") {
      if (toks.size() != 2) fail_line(lineno, toks[0].column, "nvars takes one value");
      b.nvars = static_cast<int>(parse_int(toks[1], lineno));
      continue;
    }
    if (key == "sign") {
      if (toks.size() != 2) fail_line(lineno, toks[0].column, "sign takes one value");
      b.sign = static_cast<int>(parse_int(toks[1], lineno));
      b.saw_sign = true;
      continue;
    }
    if (key == "numterm") {
      if (b.nvars < 0) fail_line(lineno, toks[0].column, "numterm before nvars");
      if (static_cast<int>(toks.size()) != 2 + b.nvars)
        fail_line(lineno, toks[0].column, "numterm arity does not match nvars");
      Rational c = parse_rational_token(toks[1], lineno);
      std::vector<long long> e;
      for (int k = 0; k < b.nvars; ++k)
        e.push_back(parse_int(toks[2 + k], lineno));
      b.numterms.emplace_back(std::move(c), std::move(e));
      continue;
    }
    if (key == "denfactor") {
      if (b.nvars < 0) fail_line(lineno, toks[0].column, "denfactor before nvars");
      if (static_cast<int>(toks.size()) != 2 + b.nvars)
        fail_line(lineno, toks[0].column, "denfactor arity does not match nvars");
      int m = static_cast<int>(parse_int(toks[1], lineno));
      if (m < 1) fail_line(lineno, toks[1].column, "multiplicity must be positive");
      std::vector<long long> u;
      for (int k = 0; k < b.nvars; ++k)
        u.push_back(parse_int(toks[2 + k], lineno));
      b.denfactors.emplace_back(m, std::move(u));
      continue;
    }
    fail_line(lineno, toks[0].column, "unknown record '" + key + "'");
  }
  throw input_error("structured value is missing its 'end' line");
}

inline std::string expect_type(std::istream& in, int& lineno) {
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0].text != "type" || toks.size() != 2)
      fail_line(lineno, toks[0].column, "expected a 'type' line");
    return toks[1].text;
  }
  throw input_error("empty structured input");
}

}  // namespace detail

inline LinDenRat parse_structured_linden(std::istream& in) {
  int lineno = 0;
  auto kind = detail::expect_type(in, lineno);
  if (kind != "linden") throw input_error("expected type linden, got " + kind);
  auto b = detail::parse_structured_body(in, lineno);
  if (b.nvars < 0) throw input_error("structured value is missing nvars");
  Polynomial num(b.nvars);
  for (const auto& [c, e] : b.numterms)
    num.add_term(Exponents(e.begin(), e.end()), c);
  num *= Rational(b.sign);
  std::vector<std::vector<long long>> den;
  for (const auto& [m, u] : b.denfactors)
    for (int k = 0; k < m; ++k) den.push_back(u);
  return LinDenRat::from_parts(std::move(num), den);
}

inline GeomRat parse_structured_geom(std::istream& in) {
  int lineno = 0;
  auto kind = detail::expect_type(in, lineno);
  if (kind != "geom") throw input_error("expected type geom, got " + kind);
  auto b = detail::parse_structured_body(in, lineno);
  if (b.nvars < 0) throw input_error("structured value is missing nvars");
  Polynomial num(b.nvars);
  for (const auto& [c, e] : b.numterms)
    num.add_term(Exponents(e.begin(), e.end()), c);
  std::vector<GeomFactor> den;
  for (const auto& [m, u] : b.denfactors)
    for (int k = 0; k < m; ++k) den.push_back(GeomFactor(u.begin(), u.end()));
  return GeomRat::from_parts(std::move(num), den);
}

inline Polynomial parse_structured_qpoly(std::istream& in) {
  int lineno = 0;
  auto kind = detail::expect_type(in, lineno);
  if (kind != "qpoly") throw input_error("expected type qpoly, got " + kind);
  auto b = detail::parse_structured_body(in, lineno);
  if (b.nvars != 1) throw input_error("qpoly must have nvars 1");
  Polynomial num(1);
  for (const auto& [c, e] : b.numterms)
    num.add_term(Exponents(e.begin(), e.end()), c);
  return num;
}

}  // namespace posetval
