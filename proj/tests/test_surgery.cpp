#include <random>

#include "doctest.h"
#include "toric/equiv.hpp"
#include "toric/families.hpp"
#include "toric/surgery.hpp"

using namespace toric;

namespace {

CharacteristicPair cpn(int n, bool lprime) {
    return build(FamilySpec{FamilySpec::Kind::CPn, n, lprime, 0, 0, {}});
}
CharacteristicPair bn(int n) { return build(FamilySpec{FamilySpec::Kind::Bn, n, false, 0, 0, {}}); }

SimplePolytope poly_connsum(const SimplePolytope& p, const SimplePolytope& q) {
    return connected_sum(ConnSumSpec{p, {}, q, {}});
}

}  // namespace

TEST_CASE("connected sums of simplices") {
    SimplePolytope s = poly_connsum(make_simplex(2), make_simplex(2));
    CHECK(s.facet_count() == 4);
    CHECK(s.vertex_count() == 4);
    CHECK(is_equivalent(s, make_cube(2)));

    SimplePolytope t = poly_connsum(make_simplex(3), make_simplex(3));
    CHECK(t.facet_count() == 5);
    CHECK(t.vertex_count() == 6);
    CHECK(is_equivalent(t, product(make_simplex(1), make_simplex(2))));
    CHECK(validate(t).ok);
}

TEST_CASE("count identities under random choices") {
    std::mt19937 rng(5);
    std::vector<SimplePolytope> zoo = {make_simplex(2), make_cube(2),
                                       product(make_simplex(1), make_simplex(1))};
    std::vector<SimplePolytope> zoo3 = {make_simplex(3), make_cube(3),
                                        product(make_simplex(1), make_simplex(2))};
    auto random_side = [&rng](const SimplePolytope& p) {
        std::uniform_int_distribution<int> pick(0, p.vertex_count() - 1);
        std::vector<int> v = p.vertices[static_cast<size_t>(pick(rng))];
        std::vector<int> order = v;
        std::shuffle(order.begin(), order.end(), rng);
        return SumSide{facet_names(p, v), facet_names(p, order)};
    };
    for (int trial = 0; trial < 12; ++trial) {
        const auto& pool = (trial % 2 == 0) ? zoo : zoo3;
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        const SimplePolytope& p = pool[pick(rng)];
        const SimplePolytope& q = pool[pick(rng)];
        SimplePolytope s = connected_sum(ConnSumSpec{p, random_side(p), q, random_side(q)});
        CHECK(s.facet_count() == p.facet_count() + q.facet_count() - p.dim);
        CHECK(s.vertex_count() == p.vertex_count() + q.vertex_count() - 2);
        CHECK(validate(s).ok);
    }
}

TEST_CASE("dimension restrictions") {
    CHECK_THROWS_AS(poly_connsum(make_simplex(1), make_simplex(1)), Error);
    CHECK_THROWS_AS(poly_connsum(make_simplex(2), make_simplex(3)), Error);
    try {
        poly_connsum(make_simplex(1), make_simplex(1));
    } catch (const Error& e) {
        CHECK(e.code() == "degenerate-dim-1");
    }
}

TEST_CASE("bad surgery specs") {
    SimplePolytope s = make_simplex(2);
    // Ordering must permute the distinguished vertex's facets.
    SumSide bad{{"D_1", "D_2"}, {"D_1", "D_3"}};
    CHECK_THROWS_AS(connected_sum(ConnSumSpec{s, bad, s, {}}), Error);
    // The distinguished set must be a vertex.
    SumSide not_vertex{{"D_1"}, {}};
    CHECK_THROWS_AS(connected_sum(ConnSumSpec{s, not_vertex, s, {}}), Error);
    CHECK_THROWS_AS(pruning_sequence_for({2, 0}), Error);
}

TEST_CASE("pruning a vertex matches the simplex connected sum") {
    for (const SimplePolytope& q : {make_cube(2), product(make_simplex(1), make_simplex(2)),
                                    make_cube(3)}) {
        SimplePolytope simplex = make_simplex(q.dim);
        for (const auto& w : q.vertices) {
            SumSide at_w{facet_names(q, w), {}};
            SimplePolytope via_sum = connected_sum(ConnSumSpec{simplex, {}, q, at_w});
            SimplePolytope via_prune = prune(PruneSpec{q, facet_names(q, w)});
            CHECK(is_equivalent(via_sum, via_prune));
        }
    }
}

TEST_CASE("pruning fixtures") {
    SimplePolytope s3 = make_simplex(3);
    SimplePolytope vcut = prune(PruneSpec{s3, {"D_1", "D_2", "D_3"}});
    CHECK(vcut.facet_count() == 5);
    CHECK(vcut.vertex_count() == 6);
    CHECK(is_equivalent(vcut, product(make_simplex(1), make_simplex(2))));

    SimplePolytope ecut = prune(PruneSpec{s3, {"D_1", "D_2"}});
    CHECK(ecut.facet_count() == 5);
    CHECK(ecut.vertex_count() == 6);
    CHECK(is_equivalent(ecut, product(make_simplex(2), make_simplex(1))));

    // One new facet, and the vertex count follows the splitting rule.
    SimplePolytope c3 = make_cube(3);
    SimplePolytope cut = prune(PruneSpec{c3, {"C_1^0", "C_2^0"}});
    CHECK(cut.facet_count() == c3.facet_count() + 1);
    CHECK(cut.vertex_count() == c3.vertex_count() - 2 + 2 * 2);
    CHECK(validate(cut).ok);

    CHECK_THROWS_AS(prune(PruneSpec{s3, {"D_1"}}), Error);             // facet
    CHECK_THROWS_AS(prune(PruneSpec{s3, {}}), Error);                  // whole polytope
    CHECK_THROWS_AS(prune(PruneSpec{s3, {"D_1", "D_2", "D_3", "D_4"}}), Error);  // not a face
}

TEST_CASE("pruning commutes with products") {
    SimplePolytope p = make_simplex(2), q = make_simplex(1);
    std::vector<std::string> vertex_of_p = facet_names(p, p.vertices[0]);
    SimplePolytope lhs = product(prune(PruneSpec{p, vertex_of_p}), q);
    std::vector<std::string> lifted;
    for (const auto& name : vertex_of_p) lifted.push_back("L." + name);
    SimplePolytope rhs = prune(PruneSpec{product(p, q), lifted});
    CHECK(is_equivalent(lhs, rhs));
}

TEST_CASE("pruning sequences rebuild products of simplices") {
    CHECK(pruning_sequence_for({3}).empty());

    for (const std::vector<int>& parts :
         {std::vector<int>{1, 1}, {1, 2}, {2, 1}, {1, 1, 1}, {1, 3}, {3, 1}, {2, 2},
          {1, 1, 2}, {1, 2, 1}, {2, 1, 1}, {1, 1, 1, 1}}) {
        int n = 0;
        for (int m : parts) n += m;
        auto cuts = pruning_sequence_for(parts);
        REQUIRE(cuts.size() == parts.size() - 1);
        SimplePolytope running = make_simplex(n);
        for (const auto& face : cuts) running = prune(PruneSpec{running, face});
        SimplePolytope target = make_simplex(parts[0]);
        for (size_t k = 1; k < parts.size(); ++k) target = product(target, make_simplex(parts[k]));
        CAPTURE(parts);
        CHECK(is_equivalent(running, target));
    }
}

TEST_CASE("dicharacteristic connected sums") {
    CharacteristicPair s = dichar_connected_sum(cpn(2, false), {}, cpn(2, false), {});
    CHECK(validate(s).ok);
    CHECK(s.base().vertex_count() == 4);
    CHECK(s.base().facet_count() == 4);
    CHECK(is_equivalent(s.base(), make_cube(2)));

    CharacteristicPair t = dichar_connected_sum(bn(2), {}, cpn(2, false), {});
    CHECK(validate(t).ok);
    CHECK(t.base().facet_count() == 4 + 3 - 2);

    CHECK_THROWS_AS(dichar_connected_sum(cpn(1, false), {}, cpn(1, false), {}), Error);
    try {
        dichar_connected_sum(cpn(1, false), {}, cpn(1, false), {});
    } catch (const Error& e) {
        CHECK(e.code() == "degenerate-dim-1");
    }
}

TEST_CASE("sum output counts are additive at the vertex level") {
    // f_0 additivity, the Euler-characteristic shadow of gluing.
    SimplePolytope p = make_cube(2), q = product(make_simplex(1), make_simplex(1));
    SimplePolytope s = poly_connsum(p, q);
    CHECK(count_vectors(s).f[0] == count_vectors(p).f[0] + count_vectors(q).f[0] - 2);
}
