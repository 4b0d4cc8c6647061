#include "toric/equiv.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

FacetBijection FacetBijection::inverted() const {
    FacetBijection inv;
    inv.to_q.assign(to_q.size(), -1);
    for (size_t i = 0; i < to_q.size(); ++i) inv.to_q[static_cast<size_t>(to_q[i])] = static_cast<int>(i);
    return inv;
}

FacetBijection FacetBijection::then(const FacetBijection& next) const {
    FacetBijection comp;
    comp.to_q.reserve(to_q.size());
    for (int img : to_q) comp.to_q.push_back(next.to_q[static_cast<size_t>(img)]);
    return comp;
}

bool check_equivalence(const SimplePolytope& p, const SimplePolytope& q, const FacetBijection& phi) {
    if (p.dim != q.dim || p.facet_count() != q.facet_count() || p.vertex_count() != q.vertex_count())
        return false;
    if (static_cast<int>(phi.to_q.size()) != p.facet_count()) return false;
    std::set<std::vector<int>> q_vertices(q.vertices.begin(), q.vertices.end());
    std::set<std::vector<int>> images;
    for (const auto& v : p.vertices) {
        std::vector<int> img;
        img.reserve(v.size());
        for (int f : v) img.push_back(phi.to_q[static_cast<size_t>(f)]);
        std::sort(img.begin(), img.end());
        if (!q_vertices.count(img)) return false;
        if (!images.insert(std::move(img)).second) return false;
    }
    return true;
}

namespace {

// Joint colour refinement on the facet/vertex incidence structure of both
// polytopes, so colour classes are comparable across them.
struct Refinement {
    std::vector<int> facet_colour_p, facet_colour_q;
    bool histograms_match = false;
};

Refinement refine(const SimplePolytope& p, const SimplePolytope& q) {
    Refinement res;
    int mp = p.facet_count(), mq = q.facet_count();
    std::vector<int> fp(mp, 0), fq(mq, 0);
    std::vector<int> vp(p.vertex_count(), 0), vq(q.vertex_count(), 0);
    int colours = 1;
    for (int round = 0; round < mp + 2; ++round) {
        std::map<std::vector<int>, int> dict;
        auto vertex_sig = [&](const SimplePolytope& poly, const std::vector<int>& fcol, int vi) {
            std::vector<int> sig;
            for (int f : poly.vertices[vi]) sig.push_back(fcol[static_cast<size_t>(f)]);
            std::sort(sig.begin(), sig.end());
            return sig;
        };
        std::vector<int> nvp(vp.size()), nvq(vq.size());
        for (size_t i = 0; i < vp.size(); ++i) {
            auto sig = vertex_sig(p, fp, static_cast<int>(i));
            sig.push_back(vp[i]);
            nvp[i] = dict.emplace(sig, static_cast<int>(dict.size())).first->second;
        }
        for (size_t i = 0; i < vq.size(); ++i) {
            auto sig = vertex_sig(q, fq, static_cast<int>(i));
            sig.push_back(vq[i]);
            nvq[i] = dict.emplace(sig, static_cast<int>(dict.size())).first->second;
        }
        std::map<std::vector<int>, int> fdict;
        auto facet_sig = [&](const SimplePolytope& poly, const std::vector<int>& vcol,
                             const std::vector<int>& fcol, int fi) {
            std::vector<int> sig;
            for (int vi = 0; vi < poly.vertex_count(); ++vi)
                if (std::binary_search(poly.vertices[vi].begin(), poly.vertices[vi].end(), fi))
                    sig.push_back(vcol[static_cast<size_t>(vi)]);
            std::sort(sig.begin(), sig.end());
            sig.push_back(fcol[static_cast<size_t>(fi)]);
            return sig;
        };
        std::vector<int> nfp(fp.size()), nfq(fq.size());
        for (int f = 0; f < mp; ++f) nfp[f] = fdict.emplace(facet_sig(p, nvp, fp, f), static_cast<int>(fdict.size())).first->second;
        for (int f = 0; f < mq; ++f) nfq[f] = fdict.emplace(facet_sig(q, nvq, fq, f), static_cast<int>(fdict.size())).first->second;
        int next_colours = static_cast<int>(fdict.size());
        fp = std::move(nfp);
        fq = std::move(nfq);
        vp = std::move(nvp);
        vq = std::move(nvq);
        if (next_colours == colours) break;
        colours = next_colours;
    }
    std::multiset<int> hp(fp.begin(), fp.end()), hq(fq.begin(), fq.end());
    res.histograms_match = (hp == hq);
    res.facet_colour_p = std::move(fp);
    res.facet_colour_q = std::move(fq);
    return res;
}

struct Searcher {
    const SimplePolytope& p;
    const SimplePolytope& q;
    const std::function<bool(const FacetBijection&)>& visit;
    std::vector<int> colour_p, colour_q;
    std::vector<std::vector<int>> pair_p, pair_q;  // #vertices containing both facets
    std::vector<int> assign;
    std::vector<bool> used;
    bool stopped = false;

    bool consistent(int i, int img) const {
        if (colour_p[static_cast<size_t>(i)] != colour_q[static_cast<size_t>(img)]) return false;
        for (int j = 0; j < i; ++j)
            if (pair_p[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                pair_q[static_cast<size_t>(img)][static_cast<size_t>(assign[static_cast<size_t>(j)])])
                return false;
        return true;
    }

    void search(int i) {
        if (stopped) return;
        int m = p.facet_count();
        if (i == m) {
            FacetBijection phi{assign};
            if (check_equivalence(p, q, phi))
                if (!visit(phi)) stopped = true;
            return;
        }
        for (int img = 0; img < m && !stopped; ++img) {
            if (used[static_cast<size_t>(img)] || !consistent(i, img)) continue;
            used[static_cast<size_t>(img)] = true;
            assign[static_cast<size_t>(i)] = img;
            search(i + 1);
            used[static_cast<size_t>(img)] = false;
        }
    }
};

std::vector<std::vector<int>> pair_counts(const SimplePolytope& p) {
    int m = p.facet_count();
    std::vector<std::vector<int>> c(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m), 0));
    for (const auto& v : p.vertices)
        for (size_t a = 0; a < v.size(); ++a)
            for (size_t b = 0; b < v.size(); ++b)
                ++c[static_cast<size_t>(v[a])][static_cast<size_t>(v[b])];
    return c;
}

}  // namespace

void for_each_equivalence(const SimplePolytope& p, const SimplePolytope& q,
                          const std::function<bool(const FacetBijection&)>& visit) {
    if (p.dim != q.dim || p.facet_count() != q.facet_count() || p.vertex_count() != q.vertex_count())
        return;
    if (p.facet_count() == 0) {  // two points
        visit(FacetBijection{});
        return;
    }
    Refinement ref = refine(p, q);
    if (!ref.histograms_match) return;
    Searcher s{p,
               q,
               visit,
               std::move(ref.facet_colour_p),
               std::move(ref.facet_colour_q),
               pair_counts(p),
               pair_counts(q),
               std::vector<int>(static_cast<size_t>(p.facet_count()), -1),
               std::vector<bool>(static_cast<size_t>(p.facet_count()), false)};
    s.search(0);
}

std::optional<FacetBijection> is_equivalent(const SimplePolytope& p, const SimplePolytope& q) {
    std::optional<FacetBijection> found;
    for_each_equivalence(p, q, [&](const FacetBijection& phi) {
        found = phi;
        return false;
    });
    return found;
}

}  // namespace toric
