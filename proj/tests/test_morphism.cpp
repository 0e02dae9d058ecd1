#include "catch2/catch_amalgamated.hpp"

#include "gog/fixtures.hpp"
#include "gog/morphism.hpp"
#include "gog/quotient.hpp"

using namespace gog;

TEST_CASE("identity morphism validates and is harmonic of degree 1") {
    HalfEdgeGraph k4 = make_k4();
    GraphMorphism id = GraphMorphism::identity(k4);
    REQUIRE(validate_morphism(id).ok);
    HarmonicReport hr = check_harmonic(id);
    REQUIRE(hr.global_degree == 1);
    for (const auto& [v, d] : hr.local_degrees) REQUIRE(d == 1);
}

TEST_CASE("morphism validation flags broken commutation") {
    HalfEdgeGraph k4 = make_k4();
    GraphMorphism m = GraphMorphism::identity(k4);
    // Redirect one half-edge without moving its partner: involution breaks.
    m.halfedge_map[k4.halfedge_index("a>b")] = k4.halfedge_index("a>c");
    ValidationReport r = validate_morphism(m);
    REQUIRE_FALSE(r.ok);
    REQUIRE_FALSE(r.issues.empty());
    REQUIRE_THROWS_AS(check_harmonic(m), NotHarmonic);
}

TEST_CASE("non-harmonic morphism is detected with a witness") {
    // Map one 2-cycle onto another, collapsing both source edges onto the
    // same target edge: at v0 the fiber counts over f+ and g+ differ (2 vs 0).
    HalfEdgeGraph src = make_cycle(2);
    HalfEdgeGraph dst({"x", "y"}, {{"f+", "x"}, {"f-", "y"}, {"g+", "x"}, {"g-", "y"}},
                      {{"f+", "f-"}, {"g+", "g-"}}, {});
    GraphMorphism m{src, dst, {0, 1}, {}};
    m.halfedge_map.resize(src.nh());
    m.halfedge_map[src.halfedge_index("e0+")] = dst.halfedge_index("f+");
    m.halfedge_map[src.halfedge_index("e0-")] = dst.halfedge_index("f-");
    m.halfedge_map[src.halfedge_index("e1+")] = dst.halfedge_index("f-");
    m.halfedge_map[src.halfedge_index("e1-")] = dst.halfedge_index("f+");
    REQUIRE(validate_morphism(m).ok);
    try {
        check_harmonic(m);
        FAIL("expected NotHarmonic");
    } catch (const NotHarmonic& e) {
        REQUIRE(e.vertex == "v0");
    }
}

TEST_CASE("pushforward and pullback through a quotient projection") {
    // A free action: the projection is then a plain harmonic morphism.
    GraphAction a = letter_action(make_k4(), {"(ab)(cd)"});
    QuotientData q = quotient_graph_of_groups(a);
    const GraphMorphism& p = q.projection;

    IntDivisor d;
    d.add("a", 1);
    d.add("b", 2);
    d.add("c", -3);
    IntDivisor push = harmonic_pushforward(p, d);
    REQUIRE(push.coeff("a") == 3);  // a and b land on the same orbit vertex
    REQUIRE(push.coeff("c") == -3);
    REQUIRE(push.degree() == d.degree());

    // Pullback multiplies by the local degrees along fibers; here the
    // projection K4 -> K4//C2 has local degree 1 everywhere, so the pullback
    // of a vertex is the sum of its fiber.
    IntDivisor up = harmonic_pullback(p, IntDivisor{{{"a", Int(1)}}});
    REQUIRE(up.coeff("a") == 1);
    REQUIRE(up.coeff("b") == 1);
    REQUIRE(up.degree() == 2);
}

TEST_CASE("path folding morphism is harmonic with mixed local degrees") {
    // Fold the path v0-v1-v2 in half onto a single edge: v0,v2 -> x, v1 -> y.
    // e0 (v0->v1) maps to f (x->y) and e1 (v1->v2) maps to f reversed.
    HalfEdgeGraph path = make_path(3);
    HalfEdgeGraph edge({"x", "y"}, {{"f+", "x"}, {"f-", "y"}}, {{"f+", "f-"}}, {});
    GraphMorphism m{path, edge, {0, 1, 0}, {}};
    m.halfedge_map.resize(path.nh());
    m.halfedge_map[path.halfedge_index("e0+")] = edge.halfedge_index("f+");
    m.halfedge_map[path.halfedge_index("e0-")] = edge.halfedge_index("f-");
    m.halfedge_map[path.halfedge_index("e1+")] = edge.halfedge_index("f-");
    m.halfedge_map[path.halfedge_index("e1-")] = edge.halfedge_index("f+");
    HarmonicReport hr = check_harmonic(m);
    REQUIRE(hr.local_degrees.at("v0") == 1);
    REQUIRE(hr.local_degrees.at("v1") == 2);
    REQUIRE(hr.local_degrees.at("v2") == 1);
    REQUIRE(hr.global_degree == 2);
}
