#include "toric/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace toric {

namespace {

std::string join_names(const std::vector<std::string>& names) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << names[i];
    os << "}";
    return os.str();
}

}  // namespace

int SimplePolytope::facet_index(const std::string& name) const {
    auto idx = find_facet(name);
    if (!idx) throw Error("unknown-facet", "no facet named '" + name + "'");
    return *idx;
}

std::optional<int> SimplePolytope::find_facet(const std::string& name) const {
    for (int i = 0; i < facet_count(); ++i)
        if (facets[i] == name) return i;
    return std::nullopt;
}

int SimplePolytope::vertex_index(const std::vector<int>& facet_set) const {
    std::vector<int> s = facet_set;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < vertex_count(); ++i)
        if (vertices[i] == s) return i;
    throw Error("bad-face", "facet set " + join_names(facet_names(*this, s)) + " is not a vertex");
}

SimplePolytope make_polytope(int dim, std::vector<std::string> facets,
                             std::vector<std::vector<int>> vertices) {
    if (dim < 0) throw Error("invalid-polytope", "dimension must be nonnegative");
    std::set<std::string> seen;
    for (const auto& name : facets) {
        if (name.empty()) throw Error("invalid-polytope", "empty facet name");
        if (!seen.insert(name).second)
            throw Error("invalid-polytope", "duplicate facet name '" + name + "'");
    }
    for (auto& v : vertices) {
        std::sort(v.begin(), v.end());
        if (std::adjacent_find(v.begin(), v.end()) != v.end())
            throw Error("invalid-polytope", "vertex lists a facet twice");
        if (static_cast<int>(v.size()) != dim)
            throw Error("invalid-polytope", "vertex does not lie on exactly dim facets");
        for (int idx : v)
            if (idx < 0 || idx >= static_cast<int>(facets.size()))
                throw Error("invalid-polytope", "facet index out of range");
    }
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw Error("invalid-polytope", "duplicate vertex");
    if (vertices.empty()) throw Error("invalid-polytope", "polytope has no vertices");
    return SimplePolytope{dim, std::move(facets), std::move(vertices)};
}

ValidationReport validate(const SimplePolytope& p) {
    ValidationReport rep;
    int n = p.dim, m = p.facet_count();
    if (n < 0) {
        rep.fail("negative dimension");
        return rep;
    }
    if (n == 0) {
        if (m != 0 || p.vertices != std::vector<std::vector<int>>{{}})
            rep.fail("a 0-polytope is a single vertex with no facets");
        return rep;
    }
    if (m <= n) rep.fail("needs more facets than its dimension (m > n)");
    if (p.vertices.empty()) rep.fail("no vertices");

    std::vector<int> degree(m, 0);
    std::set<std::vector<int>> distinct;
    for (const auto& v : p.vertices) {
        if (static_cast<int>(v.size()) != n)
            rep.fail("vertex " + join_names(facet_names(p, v)) + " lies on " +
                     std::to_string(v.size()) + " facets, expected " + std::to_string(n));
        for (int f : v) {
            if (f < 0 || f >= m) {
                rep.fail("facet index out of range in a vertex");
                return rep;
            }
            ++degree[f];
        }
        if (!distinct.insert(v).second)
            rep.fail("duplicate vertex " + join_names(facet_names(p, v)));
    }
    for (int f = 0; f < m; ++f)
        if (degree[f] == 0) rep.fail("facet '" + p.facets[f] + "' lies on no vertex");
    if (!rep.ok) return rep;

    CountVectors cv = count_vectors(p);
    Int euler = 0;
    for (int i = 0; i <= n; ++i) euler = checked_add(euler, (i % 2 ? -cv.f[i] : cv.f[i]));
    if (euler != 1) rep.fail("Euler relation fails: alternating face-count sum is " + std::to_string(euler));
    for (int i = 0; i <= n; ++i)
        if (cv.h[i] != cv.h[n - i]) {
            rep.fail("h-vector is not symmetric");
            break;
        }
    return rep;
}

bool FaceLattice::contains(const std::vector<int>& facet_set) const {
    std::vector<int> s = facet_set;
    std::sort(s.begin(), s.end());
    for (const auto& f : faces)
        if (f.facet_set == s) return true;
    return false;
}

std::vector<Int> FaceLattice::f_vector() const {
    std::vector<Int> f(static_cast<size_t>(polytope_dim) + 1, 0);
    for (const auto& face : faces) ++f[static_cast<size_t>(face.dim)];
    return f;
}

std::vector<std::pair<int, int>> FaceLattice::covering_edges() const {
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < size(); ++i) index[faces[i].facet_set] = i;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < size(); ++i) {
        const auto& s = faces[i].facet_set;
        // Extend by one facet; any extension that is again a face is covered by this one.
        for (const auto& [t, j] : index) {
            if (static_cast<int>(t.size()) != static_cast<int>(s.size()) + 1) continue;
            if (std::includes(t.begin(), t.end(), s.begin(), s.end())) edges.emplace_back(i, j);
        }
    }
    return edges;
}

FaceLattice face_lattice(const SimplePolytope& p) {
    if (p.dim > 25) throw Error("invalid-polytope", "face enumeration limited to dimension 25");
    std::set<std::vector<int>> seen;
    for (const auto& v : p.vertices) {
        int n = static_cast<int>(v.size());
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> s;
            for (int b = 0; b < n; ++b)
                if (mask & (1u << b)) s.push_back(v[b]);
            seen.insert(std::move(s));
        }
    }
    FaceLattice lat;
    lat.polytope_dim = p.dim;
    std::vector<Face> faces;
    faces.reserve(seen.size());
    for (const auto& s : seen) faces.push_back(Face{s, p.dim - static_cast<int>(s.size())});
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.facet_set.size() != b.facet_set.size()) return a.facet_set.size() < b.facet_set.size();
        return a.facet_set < b.facet_set;
    });
    lat.faces = std::move(faces);
    return lat;
}

CountVectors count_vectors(const SimplePolytope& p) {
    FaceLattice lat = face_lattice(p);
    CountVectors cv;
    cv.f = lat.f_vector();
    int n = p.dim;
    // h(t) = sum_i f_i (t-1)^i, accumulated coefficient-wise.
    std::vector<Int> h(static_cast<size_t>(n) + 1, 0);
    std::vector<Int> pow{1};  // coefficients of (t-1)^i
    for (int i = 0; i <= n; ++i) {
        for (size_t k = 0; k < pow.size(); ++k)
            h[k] = checked_add(h[k], checked_mul(cv.f[i], pow[k]));
        if (i < n) {
            std::vector<Int> next(pow.size() + 1, 0);
            for (size_t k = 0; k < pow.size(); ++k) {
                next[k + 1] = checked_add(next[k + 1], pow[k]);
                next[k] = checked_sub(next[k], pow[k]);
            }
            pow = std::move(next);
        }
    }
    cv.h = std::move(h);
    return cv;
}

SimplePolytope make_simplex(int n) {
    if (n < 1) throw Error("bad-spec", "simplex dimension must be positive");
    std::vector<std::string> facets;
    for (int r = 1; r <= n + 1; ++r) facets.push_back("D_" + std::to_string(r));
    std::vector<std::vector<int>> vertices;
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<int> v;
        for (int f = 0; f <= n; ++f)
            if (f != skip) v.push_back(f);
        vertices.push_back(std::move(v));
    }
    return make_polytope(n, std::move(facets), std::move(vertices));
}

SimplePolytope make_cube(int n) {
    if (n < 1) throw Error("bad-spec", "cube dimension must be positive");
    if (n > 25) throw Error("bad-spec", "cube dimension limited to 25");
    std::vector<std::string> facets;
    for (int r = 1; r <= n; ++r) {
        facets.push_back("C_" + std::to_string(r) + "^0");
        facets.push_back("C_" + std::to_string(r) + "^1");
    }
    std::vector<std::vector<int>> vertices;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> v;
        for (int r = 0; r < n; ++r) v.push_back(2 * r + ((mask >> r) & 1u));
        vertices.push_back(std::move(v));
    }
    return make_polytope(n, std::move(facets), std::move(vertices));
}

SimplePolytope product(const SimplePolytope& p, const SimplePolytope& q) {
    std::vector<std::string> facets;
    facets.reserve(p.facets.size() + q.facets.size());
    for (const auto& name : p.facets) facets.push_back("L." + name);
    for (const auto& name : q.facets) facets.push_back("R." + name);
    int offset = p.facet_count();
    std::vector<std::vector<int>> vertices;
    vertices.reserve(static_cast<size_t>(p.vertex_count()) * q.vertex_count());
    for (const auto& vp : p.vertices)
        for (const auto& vq : q.vertices) {
            std::vector<int> v = vp;
            for (int f : vq) v.push_back(f + offset);
            vertices.push_back(std::move(v));
        }
    return make_polytope(p.dim + q.dim, std::move(facets), std::move(vertices));
}

SimplePolytope rename_facets(const SimplePolytope& p, const std::vector<std::string>& new_names) {
    if (static_cast<int>(new_names.size()) != p.facet_count())
        throw Error("bad-spec", "rename list length does not match facet count");
    return make_polytope(p.dim, new_names, p.vertices);
}

std::vector<int> facet_indices(const SimplePolytope& p, const std::vector<std::string>& names) {
    std::vector<int> idx;
    idx.reserve(names.size());
    for (const auto& name : names) idx.push_back(p.facet_index(name));
    return idx;
}

std::vector<std::string> facet_names(const SimplePolytope& p, const std::vector<int>& indices) {
    std::vector<std::string> names;
    names.reserve(indices.size());
    for (int i : indices) {
        if (i < 0 || i >= p.facet_count()) throw Error("internal", "facet index out of range");
        names.push_back(p.facets[i]);
    }
    return names;
}

int least_vertex(const SimplePolytope& p) {
    if (p.vertices.empty()) throw Error("invalid-polytope", "polytope has no vertices");
    return 0;  // vertices are kept lexicographically sorted
}

}  // namespace toric
