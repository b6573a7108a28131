// gfr: construct the groups A(f, q0), search admissible parameters, build the
// Cayley graphs Gamma_u, and machine-check that their full automorphism
// groups act as Frobenius groups.
//
// Exit codes: 0 every check passed, 1 a check failed, 2 usage or
// precondition error. JSON goes to stdout, diagnostics to stderr.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gfr/arith.hpp"
#include "gfr/graph_io.hpp"
#include "gfr/verify.hpp"

using nlohmann::ordered_json;

namespace {

gfr::Field make_field(int f, const std::string& poly_hex) {
  std::uint32_t poly = 0;
  if (!poly_hex.empty()) poly = static_cast<std::uint32_t>(std::stoul(poly_hex, nullptr, 16));
  return gfr::Field(f, poly);
}

gfr::Higman make_ctx(int f, int f0, const std::string& poly_hex) {
  return gfr::Higman(make_field(f, poly_hex), f0);
}

int cmd_verify(int f, int f0, const std::string& u_hex, const std::string& poly_hex) {
  gfr::Higman H = make_ctx(f, f0, poly_hex);
  std::vector<gfr::VerificationReport> reports;
  if (!u_hex.empty()) {
    reports.push_back(gfr::verify_one(H, H.field().parse_hex(u_hex)));
  } else {
    reports = gfr::verify_all(H);
  }
  ordered_json out = ordered_json::array();
  bool all_pass = !reports.empty();
  for (auto& r : reports) {
    out.push_back(gfr::report_to_json(r));
    all_pass = all_pass && r.pass();
  }
  std::cout << out.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

int cmd_find_u(int f, int f0, const std::string& poly_hex) {
  gfr::Higman H = make_ctx(f, f0, poly_hex);
  gfr::USetCounts counts;
  auto set = gfr::enumerate_u_set(H, &counts);
  for (auto& t : set) std::cout << gfr::Field::hex(t.u) << "\n";
  ordered_json summary;
  summary["q"] = H.q();
  summary["q0"] = H.q0();
  summary["count_u1"] = counts.count_u1;
  summary["count_u2"] = counts.count_u2;
  summary["count_both"] = counts.count_both;
  std::cout << summary.dump() << "\n";
  return set.empty() ? 1 : 0;
}

int cmd_build(int f, int f0, const std::string& u_hex, const std::string& poly_hex,
              const std::string& out_path, const std::string& format) {
  gfr::Higman H = make_ctx(f, f0, poly_hex);
  gfr::CayleyGraph cg = gfr::build_cayley(H, H.field().parse_hex(u_hex));
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file " + out_path);
  if (format == "g6")
    out << gfr::to_graph6(cg.graph) << "\n";
  else if (format == "edges")
    out << gfr::to_edge_list(cg.graph);
  else
    throw std::invalid_argument("unknown format '" + format + "' (expected g6 or edges)");
  std::cerr << "wrote " << cg.graph.n() << " vertices, " << cg.graph.edge_count() << " edges to "
            << out_path << "\n";
  return 0;
}

int cmd_gpg_check(int f, int f0, const std::string& u_hex, const std::string& poly_hex) {
  gfr::Higman H = make_ctx(f, f0, poly_hex);
  gfr::Fe u = H.field().parse_hex(u_hex);
  gfr::ParamTriple triple{u, gfr::eta_from_u(H, u), -1};
  ordered_json out;
  bool iso = false;
  long k = -1;
  try {
    auto witness = gfr::neighborhood_iso(H, triple);
    iso = witness.verified;
    k = witness.k;
  } catch (const std::domain_error& e) {
    std::cerr << "witness failed: " << e.what() << "\n";
  }
  out["k"] = k;
  out["iso"] = iso;
  if (iso) {
    gfr::Graph gpg = gfr::gpg_build(static_cast<int>(H.q()) - 1, static_cast<int>(k));
    out["aut_order_neighborhood"] = gfr::aut_group(gpg).order();
  } else {
    out["aut_order_neighborhood"] = nullptr;
  }
  std::cout << out.dump(2) << "\n";
  return iso ? 0 : 1;
}

int cmd_aut(const std::string& path, bool json_report) {
  gfr::Graph g = gfr::load_graph(path);
  gfr::PermGroup aut = gfr::aut_group(g);
  gfr::FrobeniusReport fr = gfr::frobenius_report(aut);
  ordered_json out;
  out["order"] = aut.order();
  out["num_generators"] = aut.generators.size();
  ordered_json gens = ordered_json::array();
  for (const gfr::Perm& p : aut.generators) gens.push_back(p.img);
  out["generators"] = gens;
  ordered_json fj;
  fj["transitive"] = fr.transitive;
  fj["regular"] = fr.regular;
  fj["max_fixed_points_nonidentity"] = fr.max_fixed_points_nonidentity;
  fj["stabilizer_order"] = fr.stabilizer_order;
  fj["is_frobenius"] = fr.is_frobenius;
  out["frobenius"] = fj;
  ordered_json blocks = ordered_json::array();
  if (fr.transitive) {
    for (auto& sys : gfr::block_systems(aut, 0)) {
      ordered_json sj;
      sj["block_of_base"] = sys.block_of_base;
      sj["num_blocks"] = sys.blocks.size();
      blocks.push_back(sj);
    }
  }
  out["blocks"] = blocks;
  if (json_report) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "order: " << aut.order() << "\n"
              << "generators: " << aut.generators.size() << "\n"
              << "frobenius: " << (fr.is_frobenius ? "yes" : "no") << "\n"
              << "blocks: " << blocks.size() << " nontrivial minimal system(s)\n";
  }
  return 0;
}

int cmd_density(int max_n, std::uint64_t series_bound) {
  namespace arith = gfr::arith;
  ordered_json table = ordered_json::array();
  for (int n = 5; n <= max_n; n += 2) {
    auto fac = arith::factorize((1ull << n) - 1);
    auto ratio = arith::phi_ratio(n);
    ordered_json row;
    row["n"] = n;
    ordered_json factors = ordered_json::array();
    for (auto [p, e] : fac.factors) factors.push_back({{"p", p}, {"e", e}});
    row["factors"] = factors;
    row["phi_ratio"] = ratio.str();
    row["qualifies"] = ratio.greater_than(arith::Rational(1, 3));
    table.push_back(row);
  }
  ordered_json out;
  out["table"] = table;
  out["D"] = series_bound;
  out["partial_sum"] = arith::mu_partial_sum(series_bound);
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higman group Cayley graphs and their Frobenius automorphism groups"};
  app.require_subcommand(1);

  int f = 5, f0 = 1, max_n = 13;
  std::string u_hex, poly_hex, out_path, format = "g6", graph_path, report_mode;
  std::uint64_t series_bound = 100000;

  auto add_field_opts = [&](CLI::App* cmd, bool need_u) {
    cmd->add_option("--f", f, "field exponent, q = 2^f")->required();
    cmd->add_option("--f0", f0, "subfield exponent, q0 = 2^f0")->required();
    auto* uopt = cmd->add_option("--u", u_hex, "element u as hex");
    if (need_u) uopt->required();
    cmd->add_option("--poly", poly_hex, "defining polynomial as hex (default: smallest irreducible)");
  };

  CLI::App* verify = app.add_subcommand("verify", "run the full verification pipeline");
  add_field_opts(verify, false);
  verify->add_flag("--report", json_report, "ignored; output is always JSON");

  CLI::App* findu = app.add_subcommand("find-u", "enumerate admissible u");
  add_field_opts(findu, false);

  CLI::App* build = app.add_subcommand("build", "build Gamma_u and write it out");
  add_field_opts(build, true);
  build->add_option("--out", out_path, "output path")->required();
  build->add_option("--format", format, "g6 or edges");

  CLI::App* gpgc = app.add_subcommand("gpg-check", "verify the Petersen-graph neighborhood witness");
  add_field_opts(gpgc, true);

  CLI::App* aut = app.add_subcommand("aut", "automorphism group of a graph file");
  aut->add_option("--graph", graph_path, "graph file (graph6 or edge list)")->required();
  aut->add_flag("--report", json_report, "emit JSON");

  CLI::App* density = app.add_subcommand("density", "phi ratios of Mersenne numbers and the mu series");
  density->add_option("--max-n", max_n, "largest exponent");
  density->add_option("--series-bound", series_bound, "mu series cutoff D");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(f, f0, u_hex, poly_hex);
    if (findu->parsed()) return cmd_find_u(f, f0, poly_hex);
    if (build->parsed()) return cmd_build(f, f0, u_hex, poly_hex, out_path, format);
    if (gpgc->parsed()) return cmd_gpg_check(f, f0, u_hex, poly_hex);
    if (aut->parsed()) return cmd_aut(graph_path, json_report);
    if (density->parsed()) return cmd_density(max_n, series_bound);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
