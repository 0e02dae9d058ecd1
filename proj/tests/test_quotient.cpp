#include "catch2/catch_amalgamated.hpp"

#include "gog/fixtures.hpp"
#include "gog/morphism.hpp"
#include "gog/quotient.hpp"

#include <algorithm>

using namespace gog;

TEST_CASE("K4 mod C2: three vertices, folded edge becomes a leg") {
    QuotientData q = quotient_graph_of_groups(letter_action(make_k4(), {"(ab)"}));
    const HalfEdgeGraph& g = q.quotient.graph();
    REQUIRE(g.nv() == 3);
    REQUIRE(g.edges().size() == 3);
    REQUIRE(g.legs().size() == 1);
    REQUIRE(g.vertex_ids() == std::vector<std::string>{"a", "c", "d"});
    REQUIRE(q.quotient.vertex_weights() == std::vector<Int>{1, 2, 2});
    // The leg sits at the orbit of a (the folded a-b edge) and has weight 1.
    int leg = g.legs()[0];
    REQUIRE(g.root(leg) == g.vertex_index("a"));
    REQUIRE(q.quotient.c_halfedge(leg) == 1);
    // The c-d edge is fixed by (ab), so its weight is 2.
    for (const Edge& e : g.edges()) {
        bool cd = g.root(e.h1) != g.vertex_index("a") && g.root(e.h2) != g.vertex_index("a");
        REQUIRE(q.quotient.c_edge(e) == (cd ? 2 : 1));
    }
}

TEST_CASE("K4 mod C3: loop quotient with no legs") {
    QuotientData q = quotient_graph_of_groups(letter_action(make_k4(), {"(abc)"}));
    const HalfEdgeGraph& g = q.quotient.graph();
    REQUIRE(g.nv() == 2);
    REQUIRE(g.edges().size() == 2);
    REQUIRE(g.legs().empty());
    int loops = 0;
    for (const Edge& e : g.edges()) loops += g.is_loop(e) ? 1 : 0;
    REQUIRE(loops == 1);
    REQUIRE(g.vertex_ids() == std::vector<std::string>{"a", "d"});
    REQUIRE(q.quotient.vertex_weights() == std::vector<Int>{1, 3});
}

TEST_CASE("K4 mod V4: two dilated vertices joined by one edge, two legs") {
    QuotientData q = quotient_graph_of_groups(letter_action(make_k4(), {"(ab)", "(cd)"}));
    const HalfEdgeGraph& g = q.quotient.graph();
    REQUIRE(g.nv() == 2);
    REQUIRE(g.edges().size() == 1);
    REQUIRE(g.legs().size() == 2);
    REQUIRE(q.quotient.vertex_weights() == std::vector<Int>{2, 2});
    REQUIRE(q.quotient.c_edge(g.edges()[0]) == 1);
    for (int l : g.legs()) REQUIRE(q.quotient.c_halfedge(l) == 2);
}

TEST_CASE("flipped edge of the 2-cycle folds to a leg") {
    HalfEdgeGraph c2 = make_cycle(2);
    // The half-turn swaps the two vertices and both edges end-for-end.
    ActionElement s;
    s.vperm = {1, 0};
    s.hperm.resize(4);
    s.hperm[c2.halfedge_index("e0+")] = c2.halfedge_index("e0-");
    s.hperm[c2.halfedge_index("e0-")] = c2.halfedge_index("e0+");
    s.hperm[c2.halfedge_index("e1+")] = c2.halfedge_index("e1-");
    s.hperm[c2.halfedge_index("e1-")] = c2.halfedge_index("e1+");
    QuotientData q = quotient_graph_of_groups(GraphAction(c2, {s}));
    const HalfEdgeGraph& g = q.quotient.graph();
    REQUIRE(g.nv() == 1);
    REQUIRE(g.edges().empty());
    REQUIRE(g.legs().size() == 2);
    REQUIRE(q.quotient.vertex_weights() == std::vector<Int>{1});
    for (int l : g.legs()) REQUIRE(q.quotient.c_halfedge(l) == 1);
}

TEST_CASE("free half-turn of the 4-cycle gives the unit-weight 2-cycle") {
    HalfEdgeGraph c4 = make_cycle(4);
    ActionElement rot;
    rot.vperm = {2, 3, 0, 1};
    rot.hperm.resize(8);
    for (int i = 0; i < 4; ++i) {
        rot.hperm[c4.halfedge_index("e" + std::to_string(i) + "+")] =
            c4.halfedge_index("e" + std::to_string((i + 2) % 4) + "+");
        rot.hperm[c4.halfedge_index("e" + std::to_string(i) + "-")] =
            c4.halfedge_index("e" + std::to_string((i + 2) % 4) + "-");
    }
    QuotientData q = quotient_graph_of_groups(GraphAction(c4, {rot}));
    const HalfEdgeGraph& g = q.quotient.graph();
    REQUIRE(g.nv() == 2);
    REQUIRE(g.edges().size() == 2);
    REQUIRE(g.legs().empty());
    REQUIRE(q.quotient.all_unit());
}

TEST_CASE("trivial action quotients to the graph itself") {
    HalfEdgeGraph k4 = make_k4();
    QuotientData q = quotient_graph_of_groups(letter_action(k4, {}));
    REQUIRE(q.quotient.graph().nv() == k4.nv());
    REQUIRE(q.quotient.graph().nh() == k4.nh());
    REQUIRE(q.quotient.all_unit());
    for (int v = 0; v < k4.nv(); ++v) REQUIRE(q.projection.vertex_map[v] == v);
}

TEST_CASE("Petersen mod (ab)(cd): shape, dilation, and odd legs") {
    QuotientData q = quotient_graph_of_groups(letter_action(make_petersen(), {"(ab)(cd)"}));
    const HalfEdgeGraph& g = q.quotient.graph();
    REQUIRE(g.nv() == 6);
    REQUIRE(g.edges().size() == 7);
    REQUIRE(g.legs().size() == 2);

    std::vector<Int> w = q.quotient.vertex_weights();
    REQUIRE(std::count(w.begin(), w.end(), Int(2)) == 2);
    REQUIRE(std::count(w.begin(), w.end(), Int(1)) == 4);
    REQUIRE(q.quotient.c_vertex(g.vertex_index("ab")) == 2);
    REQUIRE(q.quotient.c_vertex(g.vertex_index("cd")) == 2);

    // Exactly one edge is fixed by the involution (ab-cd); its weight is 2.
    int dilated_edges = 0;
    for (const Edge& e : g.edges()) dilated_edges += q.quotient.c_edge(e) == 2 ? 1 : 0;
    REQUIRE(dilated_edges == 1);

    // The two legs come from the flipped edges ac-bd and ad-bc and sit at
    // undilated vertices with weight 1.
    for (int l : g.legs()) {
        REQUIRE(q.quotient.c_halfedge(l) == 1);
        REQUIRE(q.quotient.c_vertex(g.root(l)) == 1);
    }
    REQUIRE(g.has_vertex("ac"));
    REQUIRE(g.has_vertex("ad"));
}

TEST_CASE("Petersen mod S3: published weight tables") {
    QuotientData q = quotient_graph_of_groups(letter_action(make_petersen(), {"(ab)", "(abc)"}));
    const HalfEdgeGraph& g = q.quotient.graph();
    REQUIRE(g.nv() == 4);
    for (const auto& [label, w] : petersen_s3_expected_vertex_weights())
        REQUIRE(q.quotient.c_vertex(g.vertex_index(label)) == w);
    for (const auto& [label, w] : petersen_s3_expected_halfedge_weights())
        REQUIRE(q.quotient.c_halfedge(g.halfedge_index(label)) == w);
}

TEST_CASE("projection of a free action is harmonic of global degree |G|") {
    {
        GraphAction a = letter_action(make_k4(), {"(ab)(cd)"});
        QuotientData q = quotient_graph_of_groups(a);
        REQUIRE(validate_morphism(q.projection).ok);
        HarmonicReport hr = check_harmonic(q.projection);
        REQUIRE(hr.global_degree == a.order());
        for (const auto& [v, d] : hr.local_degrees) REQUIRE(d == 1);
    }
    {
        HalfEdgeGraph c4 = make_cycle(4);
        ActionElement rot;
        rot.vperm = {2, 3, 0, 1};
        rot.hperm.resize(8);
        for (int i = 0; i < 4; ++i) {
            rot.hperm[c4.halfedge_index("e" + std::to_string(i) + "+")] =
                c4.halfedge_index("e" + std::to_string((i + 2) % 4) + "+");
            rot.hperm[c4.halfedge_index("e" + std::to_string(i) + "-")] =
                c4.halfedge_index("e" + std::to_string((i + 2) % 4) + "-");
        }
        QuotientData q = quotient_graph_of_groups(GraphAction(c4, {rot}));
        REQUIRE(check_harmonic(q.projection).global_degree == 2);
    }
    // With nontrivial stabilizers the plain fiber counts are unequal: around
    // the fixed vertex c the two half-edges onto the folded edge collapse to
    // one target half-edge while c>d stays single.
    QuotientData dilated = quotient_graph_of_groups(letter_action(make_k4(), {"(ab)"}));
    REQUIRE(validate_morphism(dilated.projection).ok);
    REQUIRE_THROWS_AS(check_harmonic(dilated.projection), NotHarmonic);
}

TEST_CASE("vertex and half-edge weights obey the divisibility axiom") {
    QuotientData q = quotient_graph_of_groups(letter_action(make_petersen(), {"(ab)", "(abc)"}));
    const HalfEdgeGraph& g = q.quotient.graph();
    for (int h = 0; h < g.nh(); ++h)
        REQUIRE(q.quotient.c_vertex(g.root(h)) % q.quotient.c_halfedge(h) == 0);
}
