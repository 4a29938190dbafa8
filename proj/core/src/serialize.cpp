#include "graphlie/serialize.hpp"

#include <string>
#include <utility>
#include <vector>

#include "graphlie/errors.hpp"
#include "graphlie/graph.hpp"
#include "graphlie/rational.hpp"

namespace graphlie {

namespace {

using nlohmann::json;

// j.at() and get<>() throw nlohmann exceptions on missing keys and type
// mismatches; decode rethrows them as ParseError so callers see one error
// family.
template <typename F>
auto decode(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON document: ") + e.what());
  }
}

json brackets_to_json(const GraphLieAlgebra& a) {
  json rows = json::array();
  for (const auto& [pair, terms] : a.structure_constants())
    for (const auto& [c, q] : terms)
      rows.push_back(json::array({pair.first, pair.second, c, to_string(q)}));
  return rows;
}

}  // namespace

json algebra_to_json(const GraphLieAlgebra& a) {
  json basis = json::array();
  for (const BasisLabel& label : a.basis()) basis.push_back(label.to_string());
  return json{{"basis", std::move(basis)},
              {"brackets", brackets_to_json(a)},
              {"dim", a.dimension()},
              {"graph", to_graph6(a.source_graph())}};
}

GraphLieAlgebra algebra_from_json(const json& j) {
  return decode([&] {
    Graph g = parse_graph6(j.at("graph").get<std::string>());
    GraphLieAlgebra a = build_algebra(g);
    // The graph determines everything else; the remaining fields must agree
    // with the rebuilt algebra or the document is lying about something.
    if (j.at("dim").get<int>() != a.dimension())
      throw ParseError("algebra dim " + j.at("dim").dump() +
                       " does not match its graph (expected " +
                       std::to_string(a.dimension()) + ")");
    json expected = json::array();
    for (const BasisLabel& label : a.basis())
      expected.push_back(label.to_string());
    if (j.at("basis") != expected)
      throw ParseError("algebra basis does not match its graph");
    if (j.at("brackets") != brackets_to_json(a))
      throw ParseError("algebra brackets do not match its graph");
    return a;
  });
}

json invariant_vector_to_json(const InvariantVector& iv) {
  return json{{"ad_rank_multiset", iv.ad_rank_multiset},
              {"dim", iv.dim},
              {"dim_center", iv.dim_center},
              {"dim_derived", iv.dim_derived},
              {"nilpotency_class", iv.nilpotency_class}};
}

InvariantVector invariant_vector_from_json(const json& j) {
  return decode([&] {
    InvariantVector iv;
    iv.dim = j.at("dim").get<int>();
    iv.dim_derived = j.at("dim_derived").get<int>();
    iv.dim_center = j.at("dim_center").get<int>();
    iv.nilpotency_class = j.at("nilpotency_class").get<int>();
    iv.ad_rank_multiset = j.at("ad_rank_multiset").get<std::vector<int>>();
    return iv;
  });
}

json certificate_to_json(const IsoCertificate& cert) {
  json j;
  j["verdict"] = cert.verdict == IsoVerdict::kIsomorphic ? "isomorphic"
                                                         : "not_isomorphic";
  if (cert.sigma.has_value()) j["sigma"] = *cert.sigma;
  if (cert.tau.has_value()) {
    json rows = json::array();
    for (int r = 0; r < cert.tau->rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < cert.tau->cols(); ++c)
        row.push_back(to_string((*cert.tau)(r, c)));
      rows.push_back(std::move(row));
    }
    j["tau"] = std::move(rows);
  }
  if (cert.separator.has_value())
    j["separator"] = json{{"invariant", cert.separator->invariant},
                          {"left", cert.separator->left_value},
                          {"right", cert.separator->right_value}};
  return j;
}

IsoCertificate certificate_from_json(const json& j, const GraphLieAlgebra& left,
                                     const GraphLieAlgebra& right) {
  return decode([&] {
    IsoCertificate cert;
    std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "isomorphic") {
      cert.verdict = IsoVerdict::kIsomorphic;
      cert.sigma = j.at("sigma").get<std::vector<int>>();
      if (int(cert.sigma->size()) != left.source_graph().n_vertices())
        throw ParseError("sigma length does not match the left graph");
      const json& rows = j.at("tau");
      QMatrix tau(right.dimension(), left.dimension());
      if (int(rows.size()) != tau.rows())
        throw ParseError("tau row count does not match the right algebra");
      for (int r = 0; r < tau.rows(); ++r) {
        const json& row = rows.at(r);
        if (int(row.size()) != tau.cols())
          throw ParseError("tau column count does not match the left algebra");
        for (int c = 0; c < tau.cols(); ++c)
          tau(r, c) = parse_rational(row.at(c).get<std::string>());
      }
      cert.tau = std::move(tau);
    } else if (verdict == "not_isomorphic") {
      cert.verdict = IsoVerdict::kNotIsomorphic;
      const json& sep = j.at("separator");
      cert.separator = Separator{sep.at("invariant").get<std::string>(),
                                 sep.at("left").get<std::string>(),
                                 sep.at("right").get<std::string>()};
    } else {
      throw ParseError("unknown verdict '" + verdict + "'");
    }
    return cert;
  });
}

json catalog_to_json(const DimensionCatalog& c) {
  json entries = json::array();
  for (const CatalogEntry& entry : c.entries)
    entries.push_back(json{{"algebra", algebra_to_json(entry.algebra)},
                           {"graph6", to_graph6(entry.canonical_graph)},
                           {"invariants",
                            invariant_vector_to_json(entry.invariants)}});
  return json{{"dimension", c.dimension},
              {"entries", std::move(entries)},
              {"include_abelian", c.include_abelian}};
}

DimensionCatalog catalog_from_json(const json& j) {
  return decode([&] {
    DimensionCatalog cat;
    cat.dimension = j.at("dimension").get<int>();
    cat.include_abelian = j.at("include_abelian").get<bool>();
    for (const json& entry : j.at("entries")) {
      Graph g = parse_graph6(entry.at("graph6").get<std::string>());
      GraphLieAlgebra a = algebra_from_json(entry.at("algebra"));
      if (!(a.source_graph() == g))
        throw ParseError("catalog entry algebra disagrees with its graph6");
      InvariantVector iv = invariant_vector_from_json(entry.at("invariants"));
      if (!(iv == invariant_vector(a)))
        throw ParseError("catalog entry invariants disagree with its algebra");
      cat.entries.push_back({std::move(g), std::move(a), std::move(iv)});
    }
    return cat;
  });
}

}  // namespace graphlie
