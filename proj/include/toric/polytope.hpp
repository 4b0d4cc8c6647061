#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/error.hpp"
#include "toric/intmat.hpp"

namespace toric {

/// Combinatorial simple n-polytope: named facets plus the list of vertices,
/// each recorded as the set of the n facets through it (sorted facet indices).
/// Vertices are kept sorted lexicographically, so equal polytopes compare
/// equal structurally.
struct SimplePolytope {
    int dim = 0;
    std::vector<std::string> facets;
    std::vector<std::vector<int>> vertices;

    int facet_count() const { return static_cast<int>(facets.size()); }
    int vertex_count() const { return static_cast<int>(vertices.size()); }

    int facet_index(const std::string& name) const;            // throws unknown-facet
    std::optional<int> find_facet(const std::string& name) const;
    int vertex_index(const std::vector<int>& facet_set) const;  // throws bad-face

    bool operator==(const SimplePolytope& o) const = default;
};

/// Normalizes (sorts vertex sets and the vertex list) and checks structural
/// sanity: facet names unique and nonempty, indices in range, vertex sets of
/// size dim, no duplicate vertices. Throws Error("invalid-polytope").
SimplePolytope make_polytope(int dim, std::vector<std::string> facets,
                             std::vector<std::vector<int>> vertices);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> problems;

    void fail(const std::string& p) {
        ok = false;
        problems.push_back(p);
    }
};

/// Necessary conditions for a combinatorial simple polytope: simplicity,
/// facet irredundancy, no duplicate vertices, m > n (n >= 1), the Euler
/// relation and h-vector symmetry. Full polytopality is deliberately not
/// decided; constructor outputs always pass.
ValidationReport validate(const SimplePolytope& p);

struct Face {
    std::vector<int> facet_set;  // sorted; empty set = the polytope itself
    int dim = 0;
};

/// All faces, graded by codimension: exactly the facet subsets contained in
/// some vertex's facet set. The empty subset (the whole polytope) is
/// included; there is no bottom "empty face" element.
struct FaceLattice {
    int polytope_dim = 0;
    std::vector<Face> faces;  // ordered by (codim, lexicographic facet set)

    int size() const { return static_cast<int>(faces.size()); }
    bool contains(const std::vector<int>& facet_set) const;
    std::vector<Int> f_vector() const;  // f[d] = number of faces of dimension d
    /// Covering pairs (a, b): face b's facet set extends face a's by one facet.
    std::vector<std::pair<int, int>> covering_edges() const;
};

FaceLattice face_lattice(const SimplePolytope& p);

struct CountVectors {
    std::vector<Int> f;  // by dimension, f[n] = 1
    std::vector<Int> h;  // h[i], same length
};

/// f-vector and its h-transform (coefficients of sum_i f_i (t-1)^i).
CountVectors count_vectors(const SimplePolytope& p);

SimplePolytope make_simplex(int n);  // facets D_1..D_{n+1}
SimplePolytope make_cube(int n);     // facets C_1^0, C_1^1, .., C_n^0, C_n^1

/// Product polytope; facets of p keep their names under an "L." prefix,
/// facets of q under "R.".
SimplePolytope product(const SimplePolytope& p, const SimplePolytope& q);

/// Renames facet i to new_names[i]; names must stay unique.
SimplePolytope rename_facets(const SimplePolytope& p, const std::vector<std::string>& new_names);

std::vector<int> facet_indices(const SimplePolytope& p, const std::vector<std::string>& names);
std::vector<std::string> facet_names(const SimplePolytope& p, const std::vector<int>& indices);

/// Lexicographically least vertex (by sorted facet indices) — the default
/// distinguished vertex for surgery.
int least_vertex(const SimplePolytope& p);

}  // namespace toric
