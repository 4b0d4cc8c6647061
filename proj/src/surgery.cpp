#include "toric/surgery.hpp"

#include <algorithm>
#include <set>

namespace toric {

std::pair<std::vector<int>, std::vector<int>> resolve_sum_side(const SimplePolytope& p,
                                                               const SumSide& side) {
    std::vector<int> vset;
    if (side.vertex.empty()) {
        vset = p.vertices[static_cast<size_t>(least_vertex(p))];
    } else {
        vset = facet_indices(p, side.vertex);
        std::sort(vset.begin(), vset.end());
        p.vertex_index(vset);  // throws if not a vertex
    }
    std::vector<int> order;
    if (side.order.empty()) {
        order = vset;  // facet-list order
    } else {
        order = facet_indices(p, side.order);
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != vset)
            throw Error("bad-spec", "ordering is not a permutation of the distinguished vertex's facets");
    }
    return {std::move(vset), std::move(order)};
}

namespace {

struct GluePlan {
    // Facet index in the source polytope -> facet index in the sum.
    std::vector<int> map;
};

// Facet layout of the sum: the left complement (prefixed "L."), the n glued
// facets G1..Gn, then the right complement ("R.").
struct SumLayout {
    std::vector<std::string> facets;
    GluePlan left, right;
    int vertex_left, vertex_right;
};

SumLayout layout_sum(const SimplePolytope& p, const std::vector<int>& vp, const std::vector<int>& op,
                     const SimplePolytope& q, const std::vector<int>& vq, const std::vector<int>& oq) {
    int n = p.dim;
    SumLayout lay;
    lay.left.map.assign(static_cast<size_t>(p.facet_count()), -1);
    lay.right.map.assign(static_cast<size_t>(q.facet_count()), -1);
    std::set<int> in_vp(vp.begin(), vp.end()), in_vq(vq.begin(), vq.end());
    for (int f = 0; f < p.facet_count(); ++f)
        if (!in_vp.count(f)) {
            lay.left.map[static_cast<size_t>(f)] = static_cast<int>(lay.facets.size());
            lay.facets.push_back("L." + p.facets[static_cast<size_t>(f)]);
        }
    for (int r = 0; r < n; ++r) {
        int g = static_cast<int>(lay.facets.size());
        lay.left.map[static_cast<size_t>(op[static_cast<size_t>(r)])] = g;
        lay.right.map[static_cast<size_t>(oq[static_cast<size_t>(r)])] = g;
        lay.facets.push_back("G" + std::to_string(r + 1));
    }
    for (int f = 0; f < q.facet_count(); ++f)
        if (!in_vq.count(f)) {
            lay.right.map[static_cast<size_t>(f)] = static_cast<int>(lay.facets.size());
            lay.facets.push_back("R." + q.facets[static_cast<size_t>(f)]);
        }
    lay.vertex_left = p.vertex_index(vp);
    lay.vertex_right = q.vertex_index(vq);
    return lay;
}

}  // namespace

SimplePolytope connected_sum(const ConnSumSpec& spec) {
    const SimplePolytope& p = spec.left;
    const SimplePolytope& q = spec.right;
    if (p.dim != q.dim)
        throw Error("dimension-mismatch", "connected sum needs equal dimensions",
                    std::to_string(p.dim) + " vs " + std::to_string(q.dim));
    if (p.dim <= 1)
        throw Error("degenerate-dim-1", "connected sum is not defined in dimension " +
                                            std::to_string(p.dim) +
                                            "; it needs dimension at least 2");
    auto [vp, op] = resolve_sum_side(p, spec.at_left);
    auto [vq, oq] = resolve_sum_side(q, spec.at_right);
    SumLayout lay = layout_sum(p, vp, op, q, vq, oq);

    std::vector<std::vector<int>> vertices;
    auto add_vertices = [&vertices](const SimplePolytope& src, const GluePlan& plan, int skip) {
        for (int i = 0; i < src.vertex_count(); ++i) {
            if (i == skip) continue;
            std::vector<int> v;
            v.reserve(src.vertices[static_cast<size_t>(i)].size());
            for (int f : src.vertices[static_cast<size_t>(i)]) v.push_back(plan.map[static_cast<size_t>(f)]);
            vertices.push_back(std::move(v));
        }
    };
    add_vertices(p, lay.left, lay.vertex_left);
    add_vertices(q, lay.right, lay.vertex_right);
    SimplePolytope out = make_polytope(p.dim, std::move(lay.facets), std::move(vertices));
    ValidationReport rep = validate(out);
    if (!rep.ok) throw Error("internal", "connected sum produced an invalid polytope", rep.problems.front());
    return out;
}

SimplePolytope prune(const PruneSpec& spec) {
    const SimplePolytope& p = spec.polytope;
    int n = p.dim;
    std::vector<int> s = facet_indices(p, spec.face);
    std::sort(s.begin(), s.end());
    int k = static_cast<int>(s.size());
    if (k == 0) throw Error("bad-face", "cannot prune the whole polytope");
    if (k == 1) throw Error("bad-face", "cannot prune a facet");
    auto contains_all = [&s](const std::vector<int>& v) {
        return std::includes(v.begin(), v.end(), s.begin(), s.end());
    };
    bool is_face = std::any_of(p.vertices.begin(), p.vertices.end(), contains_all);
    if (!is_face) throw Error("bad-face", "the given facet set is not a face");

    std::vector<std::string> facets = p.facets;
    std::string cut_name = "T";
    for (int i : s) cut_name += "." + p.facets[static_cast<size_t>(i)];
    while (p.find_facet(cut_name)) cut_name += "'";
    int cut = static_cast<int>(facets.size());
    facets.push_back(cut_name);

    std::vector<std::vector<int>> vertices;
    for (const auto& v : p.vertices) {
        if (!contains_all(v)) {
            vertices.push_back(v);
            continue;
        }
        // Each vertex of the face splits into one vertex per facet of the face:
        // drop that facet, pick up the cut facet.
        for (int f : s) {
            std::vector<int> nv;
            nv.reserve(v.size());
            for (int g : v)
                if (g != f) nv.push_back(g);
            nv.push_back(cut);
            vertices.push_back(std::move(nv));
        }
    }
    SimplePolytope out = make_polytope(n, std::move(facets), std::move(vertices));
    ValidationReport rep = validate(out);
    if (!rep.ok) throw Error("internal", "pruning produced an invalid polytope", rep.problems.front());
    return out;
}

std::vector<std::vector<std::string>> pruning_sequence_for(const std::vector<int>& simplex_dims) {
    for (int m : simplex_dims)
        if (m < 1) throw Error("bad-spec", "simplex dimensions must be positive");
    if (simplex_dims.size() < 2) return {};
    int n = 0;
    for (int m : simplex_dims) n += m;

    // Cutting the simplex at the face with facet set S detaches it into
    // (simplex on  complement + cut facet) x (simplex on S); the second factor
    // is the one the remaining parts keep subdividing, so the descriptors are
    // nested subsets of the original facet names.
    std::vector<std::string> avail;
    for (int r = 1; r <= n + 1; ++r) avail.push_back("D_" + std::to_string(r));
    int remaining = n;
    std::vector<std::vector<std::string>> cuts;
    for (size_t step = 0; step + 1 < simplex_dims.size(); ++step) {
        int part = simplex_dims[step];
        int keep = remaining - part + 1;  // facets of the trailing simplex factor
        std::vector<std::string> s(avail.begin(), avail.begin() + keep);
        cuts.push_back(s);
        avail = std::move(s);
        remaining -= part;
    }
    return cuts;
}

CharacteristicPair dichar_connected_sum(const CharacteristicPair& a, const SumSide& at_a,
                                        const CharacteristicPair& b, const SumSide& at_b) {
    const SimplePolytope& p = a.base();
    const SimplePolytope& q = b.base();
    if (p.dim != q.dim)
        throw Error("dimension-mismatch", "connected sum needs equal dimensions",
                    std::to_string(p.dim) + " vs " + std::to_string(q.dim));
    if (p.dim <= 1)
        throw Error("degenerate-dim-1",
                    "no dicharacteristic connected sum in dimension " + std::to_string(p.dim) +
                        ": the facets through the removed vertices disappear, and their columns "
                        "cannot be carried by the result");
    int n = p.dim;
    auto [vp, op] = resolve_sum_side(p, at_a);
    auto [vq, oq] = resolve_sum_side(q, at_b);

    auto norm_a = normalize_at_vertex(a.dichar, facet_names(p, vp), facet_names(p, op));
    auto norm_b = normalize_at_vertex(b.dichar, facet_names(q, vq), facet_names(q, oq));

    ConnSumSpec cs{p, SumSide{facet_names(p, vp), facet_names(p, op)},
                   q, SumSide{facet_names(q, vq), facet_names(q, oq)}};
    SimplePolytope base = connected_sum(cs);
    SumLayout lay = layout_sum(p, vp, op, q, vq, oq);

    IntMat cols(n, base.facet_count());
    for (int f = 0; f < p.facet_count(); ++f)
        cols.set_col(lay.left.map[static_cast<size_t>(f)], norm_a.second.columns.col(f));
    for (int f = 0; f < q.facet_count(); ++f)
        cols.set_col(lay.right.map[static_cast<size_t>(f)], norm_b.second.columns.col(f));
    // Both normalizations put e_r on the r-th ordered facet, so the glued
    // columns agree from either side.
    CharacteristicPair out{make_dicharacteristic(std::move(base), std::move(cols)),
                           a.directed && b.directed};
    ValidationReport rep = validate(out);
    if (!rep.ok) throw Error("internal", "dicharacteristic connected sum is invalid", rep.problems.front());
    return out;
}

}  // namespace toric
