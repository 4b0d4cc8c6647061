#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/equiv.hpp"
#include "toric/intmat.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// Integer matrix with one primitive column per facet of the base polytope
/// (column j belongs to facet j). Encodes an omniorientation: negating a
/// column is a legitimate reorientation, any other entry change is not.
struct Dicharacteristic {
    SimplePolytope base;
    IntMat columns;  // base.dim rows, base.facet_count() columns

    std::vector<Int> column(int facet) const { return columns.col(facet); }
    std::vector<Int> column(const std::string& facet) const { return columns.col(base.facet_index(facet)); }

    bool operator==(const Dicharacteristic& o) const = default;
};

/// Invertible integer change of coordinates on the target lattice.
struct LatticeMap {
    IntMat m;

    bool operator==(const LatticeMap& o) const = default;
};

/// Basis of the kernel lattice of a dicharacteristic matrix, one row per
/// basis vector, indexed by facets.
struct KernelBasis {
    IntMat rows;
};

struct CharacteristicPair {
    Dicharacteristic dichar;
    bool directed = true;

    const SimplePolytope& base() const { return dichar.base; }
    bool operator==(const CharacteristicPair& o) const = default;
};

/// Throws on a shape mismatch between the matrix and the base polytope;
/// content checks live in validate().
Dicharacteristic make_dicharacteristic(SimplePolytope base, IntMat columns);

/// Checks every column is primitive and every vertex's column matrix has
/// determinant ±1; the report names each offending facet and vertex.
ValidationReport validate(const Dicharacteristic& d);
ValidationReport validate(const CharacteristicPair& p);

/// Kernel lattice basis; rank is m - n and the span is saturated (verified
/// via invariant factors; violation is an internal error).
KernelBasis kernel_basis(const Dicharacteristic& d);

/// Columns become theta * column. Kernel is unchanged; validity is preserved.
Dicharacteristic translate(const LatticeMap& theta, const Dicharacteristic& d);

/// Negates the column of one facet (reverses that facial orientation).
Dicharacteristic flip(const Dicharacteristic& d, const std::string& facet);

/// Lattice map carrying the columns at the given vertex, in the given facet
/// order, onto the standard basis vectors e_1..e_n, plus the translated
/// dicharacteristic.
std::pair<LatticeMap, Dicharacteristic> normalize_at_vertex(const Dicharacteristic& d,
                                                            const std::vector<std::string>& vertex,
                                                            const std::vector<std::string>& ordering);

/// Restriction to a proper face G (given by its facet-name set): the base
/// becomes G as a simple polytope over the facets meeting it properly, and
/// columns are the images in the quotient lattice Z^n / span{columns of G's
/// facets}, in the basis fixed by Hermite/Smith reduction.
CharacteristicPair restrict_to_face(const CharacteristicPair& pair,
                                    const std::vector<std::string>& face);

struct PairWitness {
    FacetBijection phi;    // facets of a -> facets of b
    LatticeMap theta;      // theta * col_a(F) = sign(F) * col_b(phi F)
    std::vector<int> signs;  // per facet of a; all +1 in the directed case
};

/// Searches facet bijections (deterministic order) and solves for a
/// unimodular theta matching the columns — exactly in the directed case, up
/// to per-facet signs otherwise. Returns the first witness found.
std::optional<PairWitness> pairs_equivalent(const CharacteristicPair& a,
                                            const CharacteristicPair& b, bool directed);

}  // namespace toric
