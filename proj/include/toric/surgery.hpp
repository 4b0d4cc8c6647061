#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/dichar.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// Distinguished vertex plus an ordering of its facets, one side of a
/// connected sum. An empty vertex means "lexicographically least vertex";
/// an empty order means "facet-list order of the vertex's facets".
struct SumSide {
    std::vector<std::string> vertex;
    std::vector<std::string> order;
};

struct ConnSumSpec {
    SimplePolytope left;
    SumSide at_left;
    SimplePolytope right;
    SumSide at_right;
};

/// Glues the two polytopes at the distinguished vertices: the r-th facets of
/// the two orderings merge into a new facet G<r>; the remaining facets keep
/// their names under "L." / "R." prefixes. Requires dim >= 2.
SimplePolytope connected_sum(const ConnSumSpec& spec);

struct PruneSpec {
    SimplePolytope polytope;
    std::vector<std::string> face;  // proper face, not a facet (codim >= 2)
};

/// Truncates the given face: one new facet appears; vertices of the face are
/// replaced by one vertex per (vertex, facet-of-face) pair.
SimplePolytope prune(const PruneSpec& spec);

/// Face descriptors (facet-name sets of the running polytope) such that
/// successively pruning the n-simplex yields a polytope equivalent to the
/// product of simplices of the given dimensions. Empty when fewer than two
/// parts.
std::vector<std::vector<std::string>> pruning_sequence_for(const std::vector<int>& simplex_dims);

/// Connected sum of dicharacteristics: both sides are normalized at their
/// distinguished vertices, the glued facets receive the standard basis
/// columns, and the remaining facets keep their normalized columns.
/// Dimension 1 is rejected: the columns at the removed vertices would be
/// discarded, so no dicharacteristic on the resulting segment can retain
/// them.
CharacteristicPair dichar_connected_sum(const CharacteristicPair& a, const SumSide& at_a,
                                        const CharacteristicPair& b, const SumSide& at_b);

/// Resolves defaults: the vertex facet-name set and ordering actually used.
std::pair<std::vector<int>, std::vector<int>> resolve_sum_side(const SimplePolytope& p,
                                                               const SumSide& side);

}  // namespace toric
