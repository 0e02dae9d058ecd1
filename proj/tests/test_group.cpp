#include "catch2/catch_amalgamated.hpp"

#include "gog/fixtures.hpp"
#include "gog/group.hpp"

using namespace gog;

TEST_CASE("letter permutations close to the expected group orders") {
    HalfEdgeGraph k4 = make_k4();
    REQUIRE(letter_action(k4, {"(ab)"}).order() == 2);
    REQUIRE(letter_action(k4, {"(abc)"}).order() == 3);
    REQUIRE(letter_action(k4, {"(ab)", "(cd)"}).order() == 4);
    REQUIRE(letter_action(k4, {"(ab)", "(abc)"}).order() == 6);
    REQUIRE(letter_action(k4, {"(abcd)", "(ab)"}).order() == 24);

    HalfEdgeGraph p = make_petersen();
    REQUIRE(letter_action(p, {"(ab)(cd)", "(ac)(bd)"}).order() == 4);
    REQUIRE(letter_action(p, {"(abcd)", "(ac)"}).order() == 8);
    REQUIRE(letter_action(p, {"(abcde)", "(ab)"}).order() == 120);
}

TEST_CASE("identity is element 0 and group algebra is consistent") {
    GraphAction a = letter_action(make_k4(), {"(ab)", "(cd)"});
    for (int v = 0; v < a.graph().nv(); ++v) REQUIRE(a.act_vertex(0, v) == v);
    for (int e = 0; e < a.order(); ++e) {
        REQUIRE(a.mul(e, a.inverse(e)) == 0);
        REQUIRE(a.mul(a.inverse(e), e) == 0);
        REQUIRE(a.mul(0, e) == e);
        REQUIRE(a.mul(e, 0) == e);
    }
    // Klein four group: every element is its own inverse.
    for (int e = 0; e < a.order(); ++e) REQUIRE(a.inverse(e) == e);
}

TEST_CASE("stabilizers and orbits") {
    HalfEdgeGraph k4 = make_k4();
    GraphAction v4 = letter_action(k4, {"(ab)", "(cd)"});
    int va = k4.vertex_index("a");
    REQUIRE(v4.vertex_stabilizer(va).size() == 2);  // identity and (cd)
    REQUIRE(v4.vertex_orbit(va).size() == 2);       // {a, b}

    GraphAction c3 = letter_action(k4, {"(abc)"});
    REQUIRE(c3.vertex_orbit(va).size() == 3);
    REQUIRE(c3.vertex_stabilizer(k4.vertex_index("d")).size() == 3);

    // Orbit-stabilizer: |orbit| * |stabilizer| = |G|.
    for (int v = 0; v < k4.nv(); ++v)
        REQUIRE(static_cast<int>(v4.vertex_orbit(v).size() * v4.vertex_stabilizer(v).size()) ==
                v4.order());
    for (int h = 0; h < k4.nh(); ++h)
        REQUIRE(static_cast<int>(v4.halfedge_orbit(h).size() * v4.halfedge_stabilizer(h).size()) ==
                v4.order());
}

TEST_CASE("non-equivariant data is rejected") {
    HalfEdgeGraph k4 = make_k4();
    // A vertex permutation with the identity on half-edges cannot commute
    // with the root map.
    ActionElement bad = letter_perm(k4, "(ab)");
    for (std::size_t h = 0; h < bad.hperm.size(); ++h) bad.hperm[h] = static_cast<int>(h);
    REQUIRE_THROWS_AS(GraphAction(k4, {bad}), NotAnAction);

    // Mismatched permutation sizes.
    ActionElement wrong_size;
    wrong_size.vperm = {0, 1};
    wrong_size.hperm = {};
    REQUIRE_THROWS_AS(GraphAction(k4, {wrong_size}), NotAnAction);
}

TEST_CASE("closure cap aborts runaway generator sets") {
    HalfEdgeGraph k4 = make_k4();
    std::vector<ActionElement> gens = {letter_perm(k4, "(abcd)"), letter_perm(k4, "(ab)")};
    REQUIRE_THROWS_AS(GraphAction(k4, gens, {}, 10), ClosureCapExceeded);
}

TEST_CASE("words reconstruct closure elements") {
    GraphAction a = letter_action(make_k4(), {"(ab)", "(abc)"});
    for (int e = 0; e < a.order(); ++e) {
        ActionElement acc = a.elements()[0];
        for (int g : a.word(e).gens) acc = compose(acc, a.generators()[g]);
        REQUIRE(acc == a.elements()[e]);
    }
}
