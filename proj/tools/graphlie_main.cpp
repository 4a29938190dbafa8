// Command line front end: build graph Lie algebras, print their invariants,
// decide isomorphism with certificates, enumerate dimension catalogs, and
// self-check the construction. Exit codes: 0 success (and "isomorphic" for
// iso), 1 not_isomorphic, 2 parse/usage errors, 3 verify violation.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "graphlie/algebra.hpp"
#include "graphlie/canonical.hpp"
#include "graphlie/catalog.hpp"
#include "graphlie/errors.hpp"
#include "graphlie/graph.hpp"
#include "graphlie/graph_enumeration.hpp"
#include "graphlie/invariants.hpp"
#include "graphlie/morphisms.hpp"
#include "graphlie/serialize.hpp"

using namespace graphlie;

namespace {

struct GraphInputs {
  std::vector<std::string> graph6_args;
  std::vector<std::string> edge_files;
};

void add_graph_inputs(CLI::App* cmd, GraphInputs& in, const char* label) {
  cmd->add_option("graphs", in.graph6_args, label);
  cmd->add_option("--edges", in.edge_files,
                  "Edge-list file: first line the vertex count, then one "
                  "'u v' pair per line ('#' comments). Repeatable.")
      ->check(CLI::ExistingFile);
}

// Positional graph6 strings first, then --edges files, all parsed before
// any computation runs.
std::vector<Graph> load_graphs(const GraphInputs& in) {
  std::vector<Graph> gs;
  for (const std::string& s : in.graph6_args) gs.push_back(parse_graph6(s));
  for (const std::string& path : in.edge_files) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open edge list file '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    try {
      gs.push_back(parse_edge_list(buf.str()));
    } catch (const Error& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  return gs;
}

std::string format_multiset(const std::vector<int>& xs) {
  std::string s = "[";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(xs[i]);
  }
  return s + "]";
}

void emit_json_docs(std::vector<nlohmann::json> docs) {
  if (docs.size() == 1)
    std::cout << docs.front().dump(2) << "\n";
  else
    std::cout << nlohmann::json(std::move(docs)).dump(2) << "\n";
}

void print_algebra_table(const GraphLieAlgebra& a) {
  const Graph& g = a.source_graph();
  std::cout << "graph: " << to_graph6(g) << "  (" << g.n_vertices()
            << " vertices, " << g.n_edges() << " edges)\n";
  std::cout << "dim: " << a.dimension() << "\n";
  std::cout << "basis:";
  for (const BasisLabel& label : a.basis()) std::cout << " " << label.to_string();
  std::cout << "\n";
  if (a.structure_constants().empty()) {
    std::cout << "brackets: all zero (abelian)\n";
    return;
  }
  std::cout << "brackets:\n";
  for (const auto& [pair, terms] : a.structure_constants()) {
    std::cout << "  [" << a.basis()[pair.first].to_string() << ", "
              << a.basis()[pair.second].to_string() << "] =";
    for (const auto& [c, q] : terms) {
      std::cout << " ";
      if (q == 1)
        std::cout << a.basis()[c].to_string();
      else if (q == -1)
        std::cout << "-" << a.basis()[c].to_string();
      else
        std::cout << to_string(q) << "*" << a.basis()[c].to_string();
    }
    std::cout << "\n";
  }
}

void print_invariants_table(const Graph& g, const InvariantVector& iv) {
  std::cout << "graph: " << to_graph6(g) << "\n"
            << "dim: " << iv.dim << "\n"
            << "dim_derived: " << iv.dim_derived << "\n"
            << "dim_center: " << iv.dim_center << "\n"
            << "nilpotency_class: " << iv.nilpotency_class << "\n"
            << "ad_rank_multiset: " << format_multiset(iv.ad_rank_multiset)
            << "\n";
}

void print_certificate_table(const IsoCertificate& cert) {
  if (cert.verdict == IsoVerdict::kIsomorphic) {
    std::cout << "verdict: isomorphic\n";
    std::cout << "sigma: " << format_multiset(*cert.sigma) << "\n";
    std::cout << "tau:\n";
    for (int r = 0; r < cert.tau->rows(); ++r) {
      std::cout << "  [";
      for (int c = 0; c < cert.tau->cols(); ++c) {
        if (c) std::cout << ", ";
        std::cout << to_string((*cert.tau)(r, c));
      }
      std::cout << "]\n";
    }
    return;
  }
  std::cout << "verdict: not_isomorphic\n";
  std::cout << "separator: " << cert.separator->invariant << "\n";
  std::cout << "left: " << cert.separator->left_value << "\n";
  std::cout << "right: " << cert.separator->right_value << "\n";
}

void print_catalog_table(const DimensionCatalog& cat) {
  std::cout << "dimension: " << cat.dimension << "  (" << cat.entries.size()
            << (cat.entries.size() == 1 ? " class" : " classes") << ", abelian "
            << (cat.include_abelian ? "included" : "excluded") << ")\n";
  std::cout << std::left << std::setw(10) << "graph6" << std::setw(10)
            << "vertices" << std::setw(7) << "edges" << std::setw(13)
            << "dim_derived" << std::setw(12) << "dim_center" << std::setw(7)
            << "class"
            << "ad_ranks\n";
  for (const CatalogEntry& entry : cat.entries) {
    const InvariantVector& iv = entry.invariants;
    std::cout << std::left << std::setw(10) << to_graph6(entry.canonical_graph)
              << std::setw(10) << entry.canonical_graph.n_vertices()
              << std::setw(7) << entry.canonical_graph.n_edges()
              << std::setw(13) << iv.dim_derived << std::setw(12)
              << iv.dim_center << std::setw(7) << iv.nilpotency_class
              << format_multiset(iv.ad_rank_multiset) << "\n";
  }
}

struct VerifyOutcome {
  bool dimension_ok = false;
  bool derived_ok = false;
  bool centrality_ok = false;
  bool ad_ranks_ok = false;
  bool jacobi_ok = false;
  long basis_triples = 0;
  int random_triples = 0;

  bool all_ok() const {
    return dimension_ok && derived_ok && centrality_ok && ad_ranks_ok &&
           jacobi_ok;
  }
};

// Full invariant suite for one graph: dimension formulas, centrality of the
// edge generators, the ad-rank/degree law, and the Jacobi identity on every
// distinct basis triple plus seeded random rational triples.
VerifyOutcome run_verify(const Graph& g) {
  GraphLieAlgebra a = build_algebra(g);
  VerifyOutcome out;
  int v = g.n_vertices(), e = g.n_edges(), dim = a.dimension();

  out.dimension_ok = dim == v + e;
  out.derived_ok = derived_subalgebra_dim(a) == e;

  out.centrality_ok = true;
  for (const Edge& ed : g.edges())
    if (ad_rank(a, BasisLabel::edge_wedge(ed.u, ed.v)) != 0)
      out.centrality_ok = false;

  out.ad_ranks_ok = true;
  for (int i = 0; i < v; ++i)
    if (ad_rank(a, BasisLabel::vertex(i)) != g.degree(i))
      out.ad_ranks_ok = false;

  out.jacobi_ok = true;
  // The defect is trilinear and alternating, so distinct triples suffice.
  for (int i = 0; i < dim && out.jacobi_ok; ++i)
    for (int j = i + 1; j < dim && out.jacobi_ok; ++j)
      for (int k = j + 1; k < dim; ++k) {
        ++out.basis_triples;
        if (!jacobi_defect(a.basis_element(a.basis()[i]),
                           a.basis_element(a.basis()[j]),
                           a.basis_element(a.basis()[k]))
                 .is_zero()) {
          out.jacobi_ok = false;
          break;
        }
      }
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  auto random_element = [&] {
    std::map<int, Rational> coords;
    for (int k = 0; k < dim; ++k)
      coords[k] = make_rational(num(rng), den(rng));
    return a.element_from_coords(std::move(coords));
  };
  for (int t = 0; t < 50 && out.jacobi_ok; ++t) {
    ++out.random_triples;
    if (!jacobi_defect(random_element(), random_element(), random_element())
             .is_zero())
      out.jacobi_ok = false;
  }
  return out;
}

const char* ok_str(bool b) { return b ? "ok" : "FAIL"; }

void print_verify_table(const Graph& g, const VerifyOutcome& r) {
  std::cout << "graph: " << to_graph6(g) << "\n"
            << "dimension: " << ok_str(r.dimension_ok) << "\n"
            << "derived_dimension: " << ok_str(r.derived_ok) << "\n"
            << "centrality: " << ok_str(r.centrality_ok) << "\n"
            << "ad_ranks: " << ok_str(r.ad_ranks_ok) << "\n"
            << "jacobi: " << ok_str(r.jacobi_ok) << " (" << r.basis_triples
            << " basis triples, " << r.random_triples << " random triples)\n"
            << "result: " << (r.all_ok() ? "ok" : "FAIL") << "\n";
}

nlohmann::json verify_to_json(const Graph& g, const VerifyOutcome& r) {
  return nlohmann::json{
      {"graph", to_graph6(g)},
      {"checks",
       {{"dimension", r.dimension_ok},
        {"derived_dimension", r.derived_ok},
        {"centrality", r.centrality_ok},
        {"ad_ranks", r.ad_ranks_ok},
        {"jacobi", r.jacobi_ok}}},
      {"basis_triples", r.basis_triples},
      {"random_triples", r.random_triples},
      {"ok", r.all_ok()}};
}

// Bound precedence: --max-vertices flag, then GRAPHLIE_MAX_VERTICES, then 8.
int resolve_max_vertices(const CLI::Option* flag, int flag_value) {
  if (flag->count() > 0) return flag_value;
  if (const char* env = std::getenv("GRAPHLIE_MAX_VERTICES")) {
    try {
      size_t used = 0;
      int v = std::stoi(env, &used);
      if (used != std::string(env).size())
        throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw ParseError("GRAPHLIE_MAX_VERTICES is not an integer: '" +
                       std::string(env) + "'");
    }
  }
  return kDefaultMaxVertices;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Graph Lie algebra toolkit: the 2-step nilpotent Lie algebra of a "
      "finite simple graph, its invariants, isomorphism certificates, and "
      "per-dimension catalogs. Graphs are given as graph6 strings or "
      "--edges files."};
  app.require_subcommand(1);

  std::string format = "table";

  GraphInputs build_in;
  CLI::App* build_cmd =
      app.add_subcommand("build", "Construct algebras and print bracket tables");
  add_graph_inputs(build_cmd, build_in, "Graphs in graph6 form");
  build_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  GraphInputs inv_in;
  CLI::App* inv_cmd =
      app.add_subcommand("invariants", "Print isomorphism invariants");
  add_graph_inputs(inv_cmd, inv_in, "Graphs in graph6 form");
  inv_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  GraphInputs iso_in;
  CLI::App* iso_cmd = app.add_subcommand(
      "iso", "Decide isomorphism of two graph algebras; exit 0 iff isomorphic");
  add_graph_inputs(iso_cmd, iso_in, "The two graphs in graph6 form");
  iso_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  CLI::App* enum_cmd = app.add_subcommand(
      "enumerate", "List all algebra classes of one dimension");
  int dim = 0;
  bool no_abelian = false;
  int jobs = 1;
  int max_vertices = kDefaultMaxVertices;
  enum_cmd->add_option("--dim", dim, "Algebra dimension")->required();
  enum_cmd->add_flag("--no-abelian", no_abelian,
                     "Exclude the abelian (edgeless) class");
  enum_cmd->add_option("--jobs", jobs, "Worker threads for enumeration");
  CLI::Option* maxv_opt = enum_cmd->add_option(
      "--max-vertices", max_vertices,
      "Vertex bound for enumeration (overrides GRAPHLIE_MAX_VERTICES; "
      "default 8)");
  enum_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json", "graph6"}));

  GraphInputs verify_in;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify",
      "Run the full invariant suite on each graph; exit 3 on any violation");
  add_graph_inputs(verify_cmd, verify_in, "Graphs in graph6 form");
  verify_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);

    if (build_cmd->parsed()) {
      std::vector<Graph> gs = load_graphs(build_in);
      if (gs.empty()) throw ParseError("build needs at least one graph");
      std::vector<nlohmann::json> docs;
      for (const Graph& g : gs) {
        GraphLieAlgebra a = build_algebra(g);
        if (format == "json")
          docs.push_back(algebra_to_json(a));
        else
          print_algebra_table(a);
      }
      if (format == "json") emit_json_docs(std::move(docs));
      return 0;
    }

    if (inv_cmd->parsed()) {
      std::vector<Graph> gs = load_graphs(inv_in);
      if (gs.empty()) throw ParseError("invariants needs at least one graph");
      std::vector<nlohmann::json> docs;
      for (const Graph& g : gs) {
        InvariantVector iv = invariant_vector(build_algebra(g));
        if (format == "json")
          docs.push_back(invariant_vector_to_json(iv));
        else
          print_invariants_table(g, iv);
      }
      if (format == "json") emit_json_docs(std::move(docs));
      return 0;
    }

    if (iso_cmd->parsed()) {
      std::vector<Graph> gs = load_graphs(iso_in);
      if (gs.size() != 2)
        throw ParseError("iso needs exactly two graphs, got " +
                         std::to_string(gs.size()));
      IsoCertificate cert =
          algebras_isomorphic(build_algebra(gs[0]), build_algebra(gs[1]));
      if (format == "json")
        std::cout << certificate_to_json(cert).dump(2) << "\n";
      else
        print_certificate_table(cert);
      return cert.verdict == IsoVerdict::kIsomorphic ? 0 : 1;
    }

    if (enum_cmd->parsed()) {
      EnumerationOptions opts;
      opts.max_vertices = resolve_max_vertices(maxv_opt, max_vertices);
      opts.jobs = jobs;
      DimensionCatalog cat = classify_dimension(dim, !no_abelian, opts);
      if (format == "json")
        std::cout << catalog_to_json(cat).dump(2) << "\n";
      else if (format == "graph6")
        for (const CatalogEntry& entry : cat.entries)
          std::cout << to_graph6(entry.canonical_graph) << "\n";
      else
        print_catalog_table(cat);
      return 0;
    }

    // verify
    std::vector<Graph> gs = load_graphs(verify_in);
    if (gs.empty()) throw ParseError("verify needs at least one graph");
    bool all_ok = true;
    std::vector<nlohmann::json> docs;
    for (const Graph& g : gs) {
      VerifyOutcome r = run_verify(g);
      all_ok = all_ok && r.all_ok();
      if (format == "json")
        docs.push_back(verify_to_json(g, r));
      else
        print_verify_table(g, r);
    }
    if (format == "json") emit_json_docs(std::move(docs));
    return all_ok ? 0 : 3;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
