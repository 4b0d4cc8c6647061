#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "toric/polytope.hpp"

using namespace toric;

namespace {

// Independent face oracle: a facet subset is a face iff some vertex contains
// it. Counts all subsets of the facet list directly, without face_lattice.
long brute_face_count(const SimplePolytope& p) {
    int m = p.facet_count();
    long count = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> s;
        for (int f = 0; f < m; ++f)
            if (mask & (1u << f)) s.push_back(f);
        for (const auto& v : p.vertices)
            if (std::includes(v.begin(), v.end(), s.begin(), s.end())) {
                ++count;
                break;
            }
    }
    return count;
}

std::vector<Int> brute_f_vector(const SimplePolytope& p) {
    int m = p.facet_count();
    std::vector<Int> f(static_cast<size_t>(p.dim) + 1, 0);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> s;
        for (int fi = 0; fi < m; ++fi)
            if (mask & (1u << fi)) s.push_back(fi);
        if (static_cast<int>(s.size()) > p.dim) continue;
        for (const auto& v : p.vertices)
            if (std::includes(v.begin(), v.end(), s.begin(), s.end())) {
                ++f[static_cast<size_t>(p.dim - static_cast<int>(s.size()))];
                break;
            }
    }
    return f;
}

// Hand oracle for the h-vector: expand sum_i f_i (t-1)^i term by term.
std::vector<Int> h_from_f(const std::vector<Int>& f) {
    size_t n = f.size() - 1;
    std::vector<Int> h(n + 1, 0);
    for (size_t i = 0; i <= n; ++i) {
        // (t-1)^i
        std::vector<Int> pw{1};
        for (size_t k = 0; k < i; ++k) {
            std::vector<Int> nx(pw.size() + 1, 0);
            for (size_t a = 0; a < pw.size(); ++a) {
                nx[a + 1] += pw[a];
                nx[a] -= pw[a];
            }
            pw = std::move(nx);
        }
        for (size_t a = 0; a < pw.size(); ++a) h[a] += f[i] * pw[a];
    }
    return h;
}

Int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void check_polytope_invariants(const SimplePolytope& p) {
    auto rep = validate(p);
    CAPTURE(p.facets);
    for (const auto& prob : rep.problems) CAPTURE(prob);
    CHECK(rep.ok);
    for (const auto& v : p.vertices) CHECK(static_cast<int>(v.size()) == p.dim);
    CountVectors cv = count_vectors(p);
    Int total = 0;
    for (Int hi : cv.h) total += hi;
    CHECK(total == p.vertex_count());
    for (size_t i = 0; i < cv.h.size(); ++i) CHECK(cv.h[i] == cv.h[cv.h.size() - 1 - i]);
}

}  // namespace

TEST_CASE("simplices") {
    SimplePolytope s2 = make_simplex(2);
    CHECK(s2.facet_count() == 3);
    CHECK(s2.vertex_count() == 3);
    CHECK(count_vectors(s2).f == std::vector<Int>{3, 3, 1});

    SimplePolytope s1 = make_simplex(1);
    CHECK(s1.facet_count() == 2);
    CHECK(s1.vertex_count() == 2);

    SimplePolytope s3 = make_simplex(3);
    CHECK(face_lattice(s3).size() == brute_face_count(s3));
    CHECK(face_lattice(s3).size() == 15);

    CHECK_THROWS_AS(make_simplex(0), Error);
    for (int n = 1; n <= 4; ++n) check_polytope_invariants(make_simplex(n));
}

TEST_CASE("cubes") {
    SimplePolytope c3 = make_cube(3);
    // Count convention: the polytope itself is a face, the empty face is not.
    CHECK(face_lattice(c3).size() == 27);
    CHECK(face_lattice(c3).size() == brute_face_count(c3));

    SimplePolytope c2 = make_cube(2);
    CountVectors cv = count_vectors(c2);
    CHECK(cv.f == std::vector<Int>{4, 4, 1});
    CHECK(cv.h == h_from_f(cv.f));
    CHECK(cv.h == std::vector<Int>{1, 2, 1});

    // Opposite facets share no vertex.
    for (const auto& v : c3.vertices)
        for (int r = 0; r < 3; ++r) {
            bool both = std::binary_search(v.begin(), v.end(), 2 * r) &&
                        std::binary_search(v.begin(), v.end(), 2 * r + 1);
            CHECK_FALSE(both);
        }

    CHECK_THROWS_AS(make_cube(0), Error);
    for (int n = 1; n <= 4; ++n) check_polytope_invariants(make_cube(n));
}

TEST_CASE("h-vectors of the standard families") {
    for (int n = 1; n <= 4; ++n) {
        CountVectors s = count_vectors(make_simplex(n));
        CHECK(s.h == h_from_f(brute_f_vector(make_simplex(n))));
        CHECK(s.h == std::vector<Int>(static_cast<size_t>(n) + 1, 1));
        CountVectors c = count_vectors(make_cube(n));
        CHECK(c.h == h_from_f(brute_f_vector(make_cube(n))));
        for (int i = 0; i <= n; ++i) CHECK(c.h[static_cast<size_t>(i)] == binom(n, i));
    }
}

TEST_CASE("products") {
    SimplePolytope p = product(make_cube(2), make_simplex(2));
    CHECK(p.facet_count() == 7);
    CHECK(p.vertex_count() == 12);
    CHECK(p.dim == 4);
    check_polytope_invariants(p);

    SimplePolytope doubled = product(make_simplex(2), make_simplex(1));
    CHECK(doubled.vertex_count() == 2 * make_simplex(2).vertex_count());

    SimplePolytope prism = product(make_simplex(1), make_simplex(2));
    CHECK(face_lattice(prism).f_vector() == std::vector<Int>{6, 9, 5, 1});
    CHECK(brute_f_vector(prism) == std::vector<Int>{6, 9, 5, 1});
    CHECK(count_vectors(prism).h == std::vector<Int>{1, 2, 2, 1});

    // h-polynomials multiply under products.
    SimplePolytope a = make_cube(2), b = make_simplex(2);
    CountVectors ha = count_vectors(a), hb = count_vectors(b), hp = count_vectors(p);
    for (size_t d = 0; d < hp.h.size(); ++d) {
        Int conv = 0;
        for (size_t e = 0; e < ha.h.size(); ++e)
            if (d >= e && d - e < hb.h.size()) conv += ha.h[e] * hb.h[d - e];
        CHECK(hp.h[d] == conv);
    }
}

TEST_CASE("face lattice boundary grades") {
    SimplePolytope p = product(make_simplex(1), make_simplex(2));
    FaceLattice lat = face_lattice(p);
    std::set<std::vector<int>> codim1, codimn;
    for (const auto& f : lat.faces) {
        if (f.facet_set.size() == 1) codim1.insert(f.facet_set);
        if (static_cast<int>(f.facet_set.size()) == p.dim) codimn.insert(f.facet_set);
    }
    CHECK(static_cast<int>(codim1.size()) == p.facet_count());
    std::set<std::vector<int>> vertices(p.vertices.begin(), p.vertices.end());
    CHECK(codimn == vertices);
}

TEST_CASE("validate rejects broken inputs") {
    // Non-simple: a vertex on 4 facets of a 3-polytope (octahedron-style corner).
    CHECK_THROWS_AS(make_polytope(3, {"a", "b", "c", "d", "e"}, {{0, 1, 2, 3}, {0, 1, 2}}), Error);

    // Unused facet.
    SimplePolytope p = make_simplex(2);
    p.facets.push_back("unused");
    auto rep = validate(p);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.problems.size() == 1);
    CHECK(rep.problems[0].find("unused") != std::string::npos);

    // Incidence that cannot close up: Euler sum is 2-gon-like.
    SimplePolytope bad = make_polytope(2, {"a", "b", "c", "d"}, {{0, 1}, {2, 3}});
    CHECK_FALSE(validate(bad).ok);
}

TEST_CASE("zero-dimensional point is a valid value") {
    SimplePolytope pt = make_polytope(0, {}, {{}});
    CHECK(validate(pt).ok);
    CHECK(face_lattice(pt).size() == 1);
    SimplePolytope seg = product(pt, make_simplex(1));
    CHECK(seg.vertex_count() == 2);
}

TEST_CASE("rename keeps structure") {
    SimplePolytope p = rename_facets(make_simplex(2), {"a", "b", "c"});
    CHECK(p.facets == std::vector<std::string>{"a", "b", "c"});
    CHECK(p.vertices == make_simplex(2).vertices);
    CHECK_THROWS_AS(rename_facets(make_simplex(2), {"a", "a", "c"}), Error);
}
