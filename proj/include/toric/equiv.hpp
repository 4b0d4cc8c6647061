#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

/// Facet bijection witnessing a combinatorial equivalence: to_q[i] is the
/// image in q of facet i of p. It induces a bijection of vertices preserving
/// incidence.
struct FacetBijection {
    std::vector<int> to_q;

    FacetBijection inverted() const;
    /// this : p -> q composed with next : q -> r.
    FacetBijection then(const FacetBijection& next) const;
};

/// Enumerates all equivalence witnesses in a fixed deterministic order
/// (facets of p in index order, candidate images in index order). The visitor
/// returns true to keep enumerating, false to stop.
void for_each_equivalence(const SimplePolytope& p, const SimplePolytope& q,
                          const std::function<bool(const FacetBijection&)>& visit);

/// First witness in the deterministic order, or nothing. On identical inputs
/// the identity bijection is found first.
std::optional<FacetBijection> is_equivalent(const SimplePolytope& p, const SimplePolytope& q);

bool check_equivalence(const SimplePolytope& p, const SimplePolytope& q, const FacetBijection& phi);

}  // namespace toric
