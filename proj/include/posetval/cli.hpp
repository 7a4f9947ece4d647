#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "posetval/cone.hpp"
#include "posetval/errors.hpp"
#include "posetval/io.hpp"
#include "posetval/notch.hpp"
#include "posetval/planar.hpp"
#include "posetval/poset.hpp"
#include "posetval/poset_cycles.hpp"
#include "posetval/skew.hpp"
#include "posetval/valuations.hpp"

namespace posetval {
namespace cli {

namespace detail {

inline PosetFile load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open file: " + path);
  return parse_poset_file(f);
}

inline std::vector<int> parse_parts(const std::string& s) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i <= s.size()) {
    std::size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    int v = 0;
    auto [p, ec] = std::from_chars(s.data() + i, s.data() + j, v);
    if (ec != std::errc() || p != s.data() + j)
      throw input_error("malformed partition '" + s + "'");
    out.push_back(v);
    i = j + 1;
    if (j == s.size()) break;
  }
  return out;
}

inline std::string render_binomial(const CircuitBinomial& b) {
  std::string s;
  for (std::size_t t = 0; t < b.with_edges.size(); ++t) {
    if (t) s += "*";
    s += "U(" + std::to_string(b.with_edges[t].first) + "," +
         std::to_string(b.with_edges[t].second) + ")";
  }
  s += "-";
  for (std::size_t t = 0; t < b.against_edges.size(); ++t) {
    if (t) s += "*";
    s += "U(" + std::to_string(b.against_edges[t].first) + "," +
         std::to_string(b.against_edges[t].second) + ")";
  }
  return s;
}

// Deterministic rational sample points; raw generator arithmetic keeps the
// stream identical across standard libraries.
inline std::vector<std::vector<Rational>> sample_points(int dim, int count,
                                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Rational>> pts;
  for (int s = 0; s < count; ++s) {
    std::vector<Rational> p;
    for (int i = 0; i < dim; ++i) {
      long long num = static_cast<long long>(rng() % 19) - 9;
      long long den = static_cast<long long>(rng() % 4) + 1;
      p.emplace_back(num, den);
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

// Front end; returns the process exit status (0 computed/verified,
// 1 verification failed, 2 bad input).
inline int run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"linear-extension sums and cone valuations of finite posets"};
  app.require_subcommand(1);

  std::string file, cone_sel, format = "text", mode, lambda_s, mu_s;
  int samples = 100;
  std::uint64_t seed = 12345;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  auto* c_psi = app.add_subcommand("psi", "sum of 1/prod(x_i - x_j) over linear extensions");
  c_psi->add_option("file", file, "poset file")->required();
  add_format(c_psi);

  auto* c_phi = app.add_subcommand("phi", "sum of 1/prod(prefix sums) over linear extensions");
  c_phi->add_option("file", file, "poset file")->required();
  add_format(c_phi);

  auto* c_hilb = app.add_subcommand("hilbert", "Hilbert series of a poset cone");
  c_hilb->add_option("--cone", cone_sel, "root | wt | strict")
      ->required()
      ->check(CLI::IsMember({"root", "wt", "strict"}));
  c_hilb->add_option("file", file, "poset file")->required();
  add_format(c_hilb);

  auto* c_rays = app.add_subcommand("rays", "extreme rays of a poset cone");
  c_rays->add_option("--cone", cone_sel, "root | wt")
      ->required()
      ->check(CLI::IsMember({"root", "wt"}));
  c_rays->add_option("file", file, "poset file")->required();

  auto* c_info = app.add_subcommand("info", "structural facts about the poset");
  c_info->add_option("file", file, "poset file")->required();

  auto* c_skew = app.add_subcommand("skew", "lattice-path sum of a skew diagram");
  c_skew->add_option("--lambda", lambda_s, "outer shape, comma separated")->required();
  c_skew->add_option("--mu", mu_s, "inner shape, comma separated");
  add_format(c_skew);

  auto* c_qhook = app.add_subcommand("qhook", "major-index q-hook polynomial of a forest");
  c_qhook->add_option("file", file, "poset file")->required();
  add_format(c_qhook);

  auto* c_verify = app.add_subcommand("verify", "check a structure identity");
  c_verify->add_option("mode", mode, "notch | biconnected | planar | unicyclic | skew | maintrans | residue | cyclic")
      ->required()
      ->check(CLI::IsMember({"notch", "biconnected", "planar", "unicyclic",
                             "skew", "maintrans", "residue", "cyclic"}));
  c_verify->add_option("file", file, "poset file");
  c_verify->add_option("--samples", samples, "sample point count");
  c_verify->add_option("--seed", seed, "sample seed");
  c_verify->add_option("--lambda", lambda_s, "outer shape (skew mode)");
  c_verify->add_option("--mu", mu_s, "inner shape (skew mode)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (c_psi->parsed()) {
      auto pf = detail::load(file);
      auto v = psi_direct(pf.poset);
      if (format == "structured") emit_structured(out, v);
      else out << render_linden(v) << "\n";
      return 0;
    }

    if (c_phi->parsed()) {
      auto pf = detail::load(file);
      auto v = phi_direct(pf.poset);
      if (format == "structured") emit_structured(out, v);
      else out << render_linden(v) << "\n";
      return 0;
    }

    if (c_hilb->parsed()) {
      auto pf = detail::load(file);
      GeomRat v = cone_sel == "root"  ? hilb_root(pf.poset)
                  : cone_sel == "wt"  ? hilb_wt(pf.poset)
                                      : hilb_strict(pf.poset);
      if (format == "structured") emit_structured(out, v);
      else out << render_geom(v) << "\n";
      return 0;
    }

    if (c_rays->parsed()) {
      auto pf = detail::load(file);
      Cone k = cone_sel == "root" ? root_cone(pf.poset) : wt_cone(pf.poset);
      for (const auto& r : k.rays) out << render_unit_combination(r) << "\n";
      return 0;
    }

    if (c_info->parsed()) {
      auto pf = detail::load(file);
      const Poset& p = pf.poset;
      out << "n " << p.n() << "\n";
      out << "covers";
      for (const auto& [i, j] : p.covers()) out << " (" << i << "," << j << ")";
      out << "\n";
      out << "connected " << detail::yes_no(p.is_connected()) << "\n";
      out << "forest " << detail::yes_no(p.is_forest()) << "\n";
      auto bins = circuit_binomials(p);
      out << "circuits " << bins.size() << "\n";
      for (const auto& b : bins)
        out << "circuit " << detail::render_binomial(b) << "\n";
      auto rs = is_simplicial(root_cone(p));
      out << "root_cone simplicial=" << detail::yes_no(rs.simplicial);
      if (rs.simplicial) out << " unimodular=" << detail::yes_no(rs.unimodular);
      out << "\n";
      try {
        auto ws = is_simplicial(wt_cone(p));
        out << "wt_cone simplicial=" << detail::yes_no(ws.simplicial);
        if (ws.simplicial) out << " unimodular=" << detail::yes_no(ws.unimodular);
        out << "\n";
      } catch (const shape_error&) {
        out << "wt_cone skipped (too many elements to enumerate ideals)\n";
      }
      return 0;
    }

    if (c_skew->parsed()) {
      SkewDiagram d(detail::parse_parts(lambda_s),
                    mu_s.empty() ? std::vector<int>{} : detail::parse_parts(mu_s));
      auto v = psi_skew(d);
      if (format == "structured") emit_structured(out, v);
      else out << render_linden(v, VarNamer{"x", d.rows()}) << "\n";
      return 0;
    }

    if (c_qhook->parsed()) {
      auto pf = detail::load(file);
      auto q = qhook_check(pf.poset);
      if (!q.equal) {
        out << "FAIL q-hook mismatch\n";
        out << "direct  " << render_qpoly(q.direct) << "\n";
        out << "formula " << render_qpoly(q.formula) << "\n";
        return 1;
      }
      if (format == "structured") emit_structured_qpoly(out, q.direct);
      else out << render_qpoly(q.direct) << "\n";
      return 0;
    }

    // verify
    auto need_file = [&]() -> PosetFile {
      if (file.empty()) throw input_error("verify " + mode + " needs a poset file");
      return detail::load(file);
    };

    if (mode == "notch") {
      auto pf = need_file();
      auto notches = find_notches(pf.poset);
      if (notches.empty()) {
        out << "no notches found\n";
        return 0;
      }
      for (const auto& nt : notches) {
        auto [lhs, rhs] = notch_identity_sides(pf.poset, nt);
        if (lhs != rhs) {
          out << "FAIL notch shape=" << (nt.shape == NotchShape::vee ? "vee" : "wedge")
              << " a=" << nt.a << " b=" << nt.b << " c=" << nt.c << "\n";
          out << "closed " << render_linden(lhs) << "\n";
          out << "transformed " << render_linden(rhs) << "\n";
          return 1;
        }
      }
      out << notches.size() << (notches.size() == 1 ? " notch" : " notches")
          << " checked, identity holds\n";
      return 0;
    }

    if (mode == "biconnected") {
      auto pf = need_file();
      auto factors = factor_biconnected(pf.poset);
      LinDenRat prod = LinDenRat::from_polynomial(
          Polynomial::constant(pf.poset.n(), 1));
      for (const auto& f : factors) prod = prod * f.factor;
      auto direct = psi_direct(pf.poset);
      if (prod != direct) {
        out << "FAIL biconnected factorization\n";
        out << "product " << render_linden(prod) << "\n";
        out << "direct " << render_linden(direct) << "\n";
        return 1;
      }
      out << factors.size() << (factors.size() == 1 ? " block" : " blocks")
          << ", product matches\n";
      return 0;
    }

    if (mode == "planar") {
      auto pf = need_file();
      if (!pf.embedding)
        throw input_error("verify planar needs an embedding section in the file");
      auto regions = bounded_regions(pf.poset, *pf.embedding);
      auto closed = psi_planar(pf.poset, *pf.embedding);
      auto direct = psi_direct(pf.poset);
      if (closed != direct) {
        out << "FAIL region product formula\n";
        out << "regions " << render_linden(closed) << "\n";
        out << "direct " << render_linden(direct) << "\n";
        return 1;
      }
      out << regions.size() << (regions.size() == 1 ? " region" : " regions")
          << ", formula matches\n";
      return 0;
    }

    if (mode == "unicyclic") {
      auto pf = need_file();
      auto closed = psi_unicyclic(pf.poset);
      auto direct = psi_direct(pf.poset);
      if (closed != direct) {
        out << "FAIL unicyclic formula\n";
        out << "closed " << render_linden(closed) << "\n";
        out << "direct " << render_linden(direct) << "\n";
        return 1;
      }
      out << "circuit found, formula matches\n";
      return 0;
    }

    if (mode == "skew") {
      if (lambda_s.empty()) throw input_error("verify skew needs --lambda");
      SkewDiagram d(detail::parse_parts(lambda_s),
                    mu_s.empty() ? std::vector<int>{} : detail::parse_parts(mu_s));
      auto paths = lattice_paths(d);
      auto by_paths = psi_skew(d);
      auto direct = psi_direct(skew_poset(d));
      if (by_paths != direct) {
        out << "FAIL lattice-path sum\n";
        out << "paths " << render_linden(by_paths, VarNamer{"x", d.rows()}) << "\n";
        out << "direct " << render_linden(direct, VarNamer{"x", d.rows()}) << "\n";
        return 1;
      }
      out << paths.size() << (paths.size() == 1 ? " path" : " paths")
          << ", sum matches the bipartite poset\n";
      return 0;
    }

    if (mode == "maintrans") {
      auto pf = need_file();
      auto cs = circuits(pf.poset);
      if (cs.empty()) throw input_error("poset has no circuit");
      for (const auto& c : cs) {
        auto sum = main_transformation_sum(pf.poset, c);
        if (!sum.is_zero()) {
          out << "FAIL alternating deletion sum on circuit";
          for (int v : c.vertices) out << " " << v;
          out << "\n";
          out << "sum " << render_linden(sum) << "\n";
          return 1;
        }
      }
      out << cs.size() << (cs.size() == 1 ? " circuit" : " circuits")
          << " checked, identity holds\n";
      return 0;
    }

    if (mode == "residue") {
      auto pf = need_file();
      const Poset& p = pf.poset;
      bool connected = p.is_connected();
      if (connected) {
        if (!total_residue_check(p, ConeKind::root)) {
          out << "FAIL root-cone residue\n";
          out << "residue " << render_linden(total_residue(hilb_root(p), p.n() - 1)) << "\n";
          out << "direct " << render_linden(psi_direct(p)) << "\n";
          return 1;
        }
        out << "root identity holds\n";
      } else {
        out << "root skipped (disconnected)\n";
      }
      if (!total_residue_check(p, ConeKind::wt)) {
        out << "FAIL wt-cone residue\n";
        out << "residue " << render_linden(total_residue(hilb_wt(p), p.n())) << "\n";
        out << "direct " << render_linden(phi_direct(p)) << "\n";
        return 1;
      }
      out << "wt identity holds\n";
      return 0;
    }

    // mode == "cyclic"
    {
      auto pf = need_file();
      const Poset& p = pf.poset;
      auto cs = circuits(p);
      if (cs.empty()) throw input_error("poset has no circuit");
      auto pts = detail::sample_points(p.n(), samples, seed);
      for (const auto& c : cs) {
        std::vector<std::vector<long long>> W, V;
        auto with = c.with_edges();
        for (const auto& [i, j] : with)
          W.push_back(posetval::detail::cover_vector(p.n(), i, j));
        for (const auto& [i, j] : p.covers()) {
          bool in_w = false;
          for (const auto& e : with)
            if (e.first == i && e.second == j) in_w = true;
          if (!in_w) V.push_back(posetval::detail::cover_vector(p.n(), i, j));
        }
        for (const auto& pt : pts) {
          if (!alternating_chi_check(p.n(), W, V, {pt})) {
            out << "FAIL signed membership sum on circuit";
            for (int v : c.vertices) out << " " << v;
            out << " at point";
            for (const auto& x : pt) out << " " << to_string(x);
            out << "\n";
            return 1;
          }
        }
      }
      out << cs.size() << (cs.size() == 1 ? " circuit" : " circuits") << ", "
          << samples << (samples == 1 ? " sample" : " samples")
          << " each, identity holds\n";
      return 0;
    }
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cli
}  // namespace posetval
