#pragma once

#include <string>

#include "json.hpp"
#include "toric/dichar.hpp"
#include "toric/face_ring.hpp"
#include "toric/polytope.hpp"

namespace toric {

using Json = nlohmann::json;

Json to_json(const SimplePolytope& p);
SimplePolytope polytope_from_json(const Json& doc);

Json to_json(const CharacteristicPair& pair);
CharacteristicPair pair_from_json(const Json& doc);

/// Parses either document kind; "type" discriminates.
bool is_pair_document(const Json& doc);

Json to_json(const ValidationReport& rep);
Json to_json(const KernelBasis& k);
Json to_json(const GradedClass& cls, const SimplePolytope& base);
Json to_json(const BettiReport& rep);

std::string rational_string(const Rational& r);

/// One node per face labeled by its facet-name set, one edge per covering
/// relation (toward higher codimension).
std::string face_lattice_dot(const SimplePolytope& p);

}  // namespace toric
