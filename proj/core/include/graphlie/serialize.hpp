#ifndef GRAPHLIE_SERIALIZE_HPP
#define GRAPHLIE_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "graphlie/algebra.hpp"
#include "graphlie/catalog.hpp"
#include "graphlie/invariants.hpp"
#include "graphlie/morphisms.hpp"

namespace graphlie {

// All encoders emit objects with sorted keys and exact rational scalars as
// strings, so equal inputs serialize byte-identically.

nlohmann::json algebra_to_json(const GraphLieAlgebra& a);
/// Rebuilds the algebra from the embedded graph and cross-checks the listed
/// basis and brackets against it; throws ParseError on missing fields or
/// mismatches (malformed embedded values raise their own Error subclasses,
/// e.g. MalformedGraph6Error).
GraphLieAlgebra algebra_from_json(const nlohmann::json& j);

nlohmann::json invariant_vector_to_json(const InvariantVector& iv);
InvariantVector invariant_vector_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const IsoCertificate& cert);
/// Certificates do not embed their algebras, so decoding needs the pair the
/// certificate talks about.
IsoCertificate certificate_from_json(const nlohmann::json& j,
                                     const GraphLieAlgebra& left,
                                     const GraphLieAlgebra& right);

nlohmann::json catalog_to_json(const DimensionCatalog& c);
DimensionCatalog catalog_from_json(const nlohmann::json& j);

}  // namespace graphlie

#endif
