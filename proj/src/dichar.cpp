#include "toric/dichar.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace toric {

namespace {

std::string set_string(const SimplePolytope& p, const std::vector<int>& idx) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << p.facets[static_cast<size_t>(idx[i])];
    os << "}";
    return os.str();
}

IntMat columns_at(const Dicharacteristic& d, const std::vector<int>& facet_idx) {
    IntMat m(d.base.dim, static_cast<int>(facet_idx.size()));
    for (size_t j = 0; j < facet_idx.size(); ++j) m.set_col(static_cast<int>(j), d.columns.col(facet_idx[j]));
    return m;
}

Int vec_gcd(const std::vector<Int>& v) {
    Int g = 0;
    for (Int x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

}  // namespace

Dicharacteristic make_dicharacteristic(SimplePolytope base, IntMat columns) {
    if (columns.rows() != base.dim || columns.cols() != base.facet_count())
        throw Error("dimension-mismatch",
                    "matrix must have dim rows and one column per facet",
                    "expected " + std::to_string(base.dim) + "x" + std::to_string(base.facet_count()) +
                        ", got " + std::to_string(columns.rows()) + "x" + std::to_string(columns.cols()));
    return Dicharacteristic{std::move(base), std::move(columns)};
}

ValidationReport validate(const Dicharacteristic& d) {
    ValidationReport rep = validate(d.base);
    if (!rep.ok) return rep;
    if (d.columns.rows() != d.base.dim || d.columns.cols() != d.base.facet_count()) {
        rep.fail("matrix shape does not match the base polytope");
        return rep;
    }
    for (int f = 0; f < d.base.facet_count(); ++f)
        if (d.base.dim > 0 && vec_gcd(d.columns.col(f)) != 1)
            rep.fail("column of facet '" + d.base.facets[static_cast<size_t>(f)] + "' is not primitive");
    for (const auto& v : d.base.vertices) {
        Int dv = det(columns_at(d, v));
        if (dv != 1 && dv != -1)
            rep.fail("vertex " + set_string(d.base, v) + " has determinant " + std::to_string(dv));
    }
    return rep;
}

ValidationReport validate(const CharacteristicPair& p) { return validate(p.dichar); }

KernelBasis kernel_basis(const Dicharacteristic& d) {
    IntMat k = kernel_rows(d.columns);
    int expected = d.base.facet_count() - d.base.dim;
    if (k.rows() != expected)
        throw Error("invalid-pair", "kernel rank is " + std::to_string(k.rows()) +
                                        ", expected " + std::to_string(expected));
    if (k.rows() > 0)
        for (Int f : smith_invariant_factors(k))
            if (f != 1) throw Error("internal", "kernel basis does not span a saturated sublattice");
    return KernelBasis{std::move(k)};
}

Dicharacteristic translate(const LatticeMap& theta, const Dicharacteristic& d) {
    if (!is_unimodular(theta.m)) throw Error("not-unimodular", "lattice map must have determinant ±1");
    return Dicharacteristic{d.base, mat_mul(theta.m, d.columns)};
}

Dicharacteristic flip(const Dicharacteristic& d, const std::string& facet) {
    int f = d.base.facet_index(facet);
    Dicharacteristic out = d;
    for (int r = 0; r < out.columns.rows(); ++r) out.columns.at(r, f) = checked_sub(0, out.columns.at(r, f));
    return out;
}

std::pair<LatticeMap, Dicharacteristic> normalize_at_vertex(const Dicharacteristic& d,
                                                            const std::vector<std::string>& vertex,
                                                            const std::vector<std::string>& ordering) {
    std::vector<int> vset = facet_indices(d.base, vertex);
    int vi = d.base.vertex_index(vset);
    std::vector<int> order_idx = facet_indices(d.base, ordering);
    std::vector<int> sorted = order_idx;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != d.base.vertices[static_cast<size_t>(vi)])
        throw Error("bad-spec", "ordering is not a permutation of the vertex's facets");
    IntMat a = columns_at(d, order_idx);
    LatticeMap theta{unimodular_inverse(a)};
    Dicharacteristic nd = translate(theta, d);
    return {std::move(theta), std::move(nd)};
}

CharacteristicPair restrict_to_face(const CharacteristicPair& pair, const std::vector<std::string>& face) {
    const SimplePolytope& p = pair.base();
    std::vector<int> s = facet_indices(p, face);
    std::sort(s.begin(), s.end());
    if (s.empty()) throw Error("bad-face", "restriction needs a proper face");
    int n = p.dim;
    int k = static_cast<int>(s.size());

    auto contains_all = [&](const std::vector<int>& v) {
        return std::includes(v.begin(), v.end(), s.begin(), s.end());
    };
    std::vector<std::vector<int>> face_vertices;
    for (const auto& v : p.vertices)
        if (contains_all(v)) face_vertices.push_back(v);
    if (face_vertices.empty()) throw Error("bad-face", "facet set " + set_string(p, s) + " is not a face");

    // Facets meeting the face properly: those sharing a vertex with it, minus
    // the face's own facet set.
    std::vector<int> meeting;
    {
        std::vector<bool> seen(static_cast<size_t>(p.facet_count()), false);
        for (const auto& v : face_vertices)
            for (int f : v) seen[static_cast<size_t>(f)] = true;
        for (int f : s) seen[static_cast<size_t>(f)] = false;
        for (int f = 0; f < p.facet_count(); ++f)
            if (seen[static_cast<size_t>(f)]) meeting.push_back(f);
    }

    std::vector<std::string> new_facets = facet_names(p, meeting);
    std::vector<int> where(static_cast<size_t>(p.facet_count()), -1);
    for (size_t j = 0; j < meeting.size(); ++j) where[static_cast<size_t>(meeting[j])] = static_cast<int>(j);
    std::vector<std::vector<int>> new_vertices;
    for (const auto& v : face_vertices) {
        std::vector<int> nv;
        for (int f : v)
            if (where[static_cast<size_t>(f)] >= 0) nv.push_back(where[static_cast<size_t>(f)]);
        new_vertices.push_back(std::move(nv));
    }
    SimplePolytope base = make_polytope(n - k, std::move(new_facets), std::move(new_vertices));

    // Quotient coordinates: p_transform * (column of a face facet) = e_i, and
    // the last n-k rows of p_transform express the quotient lattice.
    IntMat span(n, k);
    for (int j = 0; j < k; ++j) span.set_col(j, pair.dichar.columns.col(s[static_cast<size_t>(j)]));
    IntMat p_transform = unit_column_transform(span);
    IntMat cols(n - k, static_cast<int>(meeting.size()));
    for (size_t j = 0; j < meeting.size(); ++j) {
        std::vector<Int> img = mat_vec(p_transform, pair.dichar.columns.col(meeting[j]));
        for (int r = k; r < n; ++r) cols.at(r - k, static_cast<int>(j)) = img[static_cast<size_t>(r)];
    }
    CharacteristicPair out{make_dicharacteristic(std::move(base), std::move(cols)), pair.directed};
    ValidationReport rep = validate(out);
    if (!rep.ok) throw Error("internal", "restriction produced an invalid pair", rep.problems.front());
    return out;
}

namespace {

// Solve for theta at one vertex and check it on all facets. Sign patterns
// over the vertex's facets are enumerated in the undirected case.
std::optional<PairWitness> solve_theta(const CharacteristicPair& a, const CharacteristicPair& b,
                                       const FacetBijection& phi, bool directed) {
    const SimplePolytope& pa = a.base();
    int n = pa.dim;
    int m = pa.facet_count();
    if (n == 0) return PairWitness{phi, LatticeMap{IntMat(0, 0)}, {}};
    const std::vector<int>& v = pa.vertices[0];
    IntMat av(n, n), bv(n, n);
    for (int j = 0; j < n; ++j) {
        av.set_col(j, a.dichar.columns.col(v[static_cast<size_t>(j)]));
        bv.set_col(j, b.dichar.columns.col(phi.to_q[static_cast<size_t>(v[static_cast<size_t>(j)])]));
    }
    IntMat av_inv = unimodular_inverse(av);
    unsigned patterns = directed ? 1u : (1u << n);
    for (unsigned mask = 0; mask < patterns; ++mask) {
        IntMat signed_bv = bv;
        for (int j = 0; j < n; ++j)
            if (mask & (1u << j))
                for (int r = 0; r < n; ++r) signed_bv.at(r, j) = checked_sub(0, signed_bv.at(r, j));
        IntMat theta = mat_mul(signed_bv, av_inv);
        std::vector<int> signs(static_cast<size_t>(m), 1);
        bool ok = true;
        for (int f = 0; f < m && ok; ++f) {
            std::vector<Int> lhs = mat_vec(theta, a.dichar.columns.col(f));
            std::vector<Int> rhs = b.dichar.columns.col(phi.to_q[static_cast<size_t>(f)]);
            if (lhs == rhs) continue;
            if (!directed) {
                bool neg = true;
                for (int r = 0; r < n; ++r)
                    if (lhs[static_cast<size_t>(r)] != -rhs[static_cast<size_t>(r)]) {
                        neg = false;
                        break;
                    }
                if (neg) {
                    signs[static_cast<size_t>(f)] = -1;
                    continue;
                }
            }
            ok = false;
        }
        if (ok) return PairWitness{phi, LatticeMap{std::move(theta)}, std::move(signs)};
    }
    return std::nullopt;
}

}  // namespace

std::optional<PairWitness> pairs_equivalent(const CharacteristicPair& a, const CharacteristicPair& b,
                                            bool directed) {
    std::optional<PairWitness> found;
    for_each_equivalence(a.base(), b.base(), [&](const FacetBijection& phi) {
        auto w = solve_theta(a, b, phi, directed);
        if (w) {
            found = std::move(w);
            return false;
        }
        return true;
    });
    return found;
}

}  // namespace toric
