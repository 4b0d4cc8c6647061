#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/dichar.hpp"
#include "toric/surgery.hpp"

namespace toric {

/// Specification of one omnioriented manifold from the built-in families.
///   cpn(n, l | lprime)   projective space over the n-simplex
///   bn(n)                bounded flag manifold over the n-cube
///   bij(i, j)            projective bundle over bounded flags, over I^i x Δ^{j-1}
///   product(spec, ...)   product, folded left to right
struct FamilySpec {
    enum class Kind { CPn, Bn, Bij, Product };
    Kind kind = Kind::CPn;
    int n = 0;                   // CPn, Bn
    bool variant_lprime = false;  // CPn: true = all-positive last column
    int i = 0, j = 0;            // Bij
    std::vector<FamilySpec> factors;

    std::string to_string() const;
};

/// Grammar: cpn(2,l) | cpn(2,lprime) | bn(3) | bij(1,2) | product(a,b,...)
FamilySpec parse_family_spec(const std::string& text);

CharacteristicPair build(const FamilySpec& spec);

/// Product of two pairs: product polytope, block-diagonal columns.
CharacteristicPair pair_product(const CharacteristicPair& a, const CharacteristicPair& b);

/// One summand of a connected-sum representative; the choice applies to this
/// summand when it enters the fold.
struct ConnSummand {
    FamilySpec spec;
    SumSide side;
};

/// Folds the summands with dicharacteristic connected sums, left to right.
CharacteristicPair representative(const std::vector<ConnSummand>& summands);

}  // namespace toric
