#include "catch2/catch_amalgamated.hpp"

#include <string>

#include "gog/fixtures.hpp"
#include "gog/io.hpp"
#include "gog/morphism.hpp"
#include "gog/quotient.hpp"

#include "helpers.hpp"

using namespace gog;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("graph serialization round-trips byte for byte") {
    for (const HalfEdgeGraph& g : {make_k4(), make_petersen(), make_cycle(5), make_path(3)}) {
        std::string s = serialize_graph(g);
        HalfEdgeGraph back = parse_graph(s);
        REQUIRE(back.vertex_ids() == g.vertex_ids());
        REQUIRE(back.halfedge_ids() == g.halfedge_ids());
        REQUIRE(back.edges().size() == g.edges().size());
        REQUIRE(back.legs() == g.legs());
        REQUIRE(serialize_graph(back) == s);
    }
}

TEST_CASE("quotient serialization round-trips weights and voltages") {
    QuotientData q = quotient_graph_of_groups(letter_action(make_k4(), {"(ab)"}));
    std::string s = serialize_quotient(q);
    GogFile f = parse_gog_file(s);
    REQUIRE(f.has_weights);
    REQUIRE(f.gog.graph().vertex_ids() == q.quotient.graph().vertex_ids());
    REQUIRE(f.gog.vertex_weights() == q.quotient.vertex_weights());
    REQUIRE(f.gog.halfedge_weights() == q.quotient.halfedge_weights());
    REQUIRE(f.beta_words.size() == static_cast<std::size_t>(q.quotient.graph().nh()));
    for (const std::string& w : f.beta_words) REQUIRE_FALSE(w.empty());
    // Serializing the parsed graph reproduces the graph section verbatim.
    REQUIRE(s.rfind(serialize_graph(f.gog.graph()), 0) == 0);
}

TEST_CASE("a separate weights file overrides the unit defaults") {
    HalfEdgeGraph k4 = make_k4();
    GraphOfGroups w = parse_weights("W c 2\nW d 2\nWH c>d 2\nWH d>c 2\n", k4);
    REQUIRE(w.c_vertex(k4.vertex_index("d")) == 2);
    REQUIRE(w.c_halfedge(k4.halfedge_index("c>d")) == 2);
    REQUIRE(w.c_vertex(k4.vertex_index("a")) == 1);
}

TEST_CASE("parser reports the offending line number") {
    CHECK_THROWS_WITH(parse_gog_file("V a\nV a\n"), ContainsSubstring("duplicate vertex"));
    CHECK_THROWS_WITH(parse_gog_file("# comment\n\nV a\nW a x\n"),
                      ContainsSubstring("line 4"));
    CHECK_THROWS_WITH(parse_gog_file("V a\nW b 2\n"),
                      ContainsSubstring("line 2") && ContainsSubstring("unknown vertex"));
    CHECK_THROWS_WITH(parse_gog_file("V a\nQ a\n"), ContainsSubstring("unknown directive"));
    CHECK_THROWS_WITH(parse_gog_file("V a\nH x\n"), ContainsSubstring("expects 2 arguments"));
    HalfEdgeGraph k4 = make_k4();
    CHECK_THROWS_WITH(parse_weights("W a 2\nWH nope 1\n", k4),
                      ContainsSubstring("line 2") && ContainsSubstring("unknown half-edge"));
}

TEST_CASE("action serialization round-trips generators in cycle notation") {
    HalfEdgeGraph k4 = make_k4();
    GraphAction a = letter_action(k4, {"(ab)", "(cd)"});
    std::string s = serialize_action(a);
    GraphAction back = parse_action(s, k4);
    REQUIRE(back.order() == a.order());
    REQUIRE(back.generators().size() == a.generators().size());
    for (std::size_t i = 0; i < a.generators().size(); ++i) {
        REQUIRE(back.generators()[i].vperm == a.generators()[i].vperm);
        REQUIRE(back.generators()[i].hperm == a.generators()[i].hperm);
    }
    REQUIRE(serialize_action(back) == s);
}

TEST_CASE("fixture action files parse against their graphs") {
    HalfEdgeGraph pete = make_petersen();
    GraphAction a = parse_action(gogtest::read_fixture("petersen_s3.action"), pete);
    REQUIRE(a.order() == 6);
    HalfEdgeGraph k4 = parse_graph(gogtest::read_fixture("k4.graph"));
    REQUIRE(k4.vertex_ids() == make_k4().vertex_ids());
}

TEST_CASE("action parse errors carry context") {
    HalfEdgeGraph k4 = make_k4();
    CHECK_THROWS_WITH(parse_action("PV (a b)\n", k4), ContainsSubstring("before any GEN"));
    CHECK_THROWS_WITH(parse_action("GEN g\nPV (a z)\n", k4),
                      ContainsSubstring("line 2") && ContainsSubstring("unknown vertex"));
    CHECK_THROWS_WITH(parse_action("GEN g\nMV a b\n", k4), ContainsSubstring("unknown directive"));
}

TEST_CASE("morphism files parse into harmonic-checkable morphisms") {
    HalfEdgeGraph path = make_path(3);
    HalfEdgeGraph edge({"x", "y"}, {{"f+", "x"}, {"f-", "y"}}, {{"f+", "f-"}}, {});
    std::string text =
        "MV v0 x\nMV v1 y\nMV v2 x\n"
        "MH e0+ f+\nMH e0- f-\nMH e1+ f-\nMH e1- f+\n";
    GraphMorphism m = parse_morphism(text, path, edge);
    REQUIRE(m.vertex_map[path.vertex_index("v1")] == edge.vertex_index("y"));
    HarmonicReport hr = check_harmonic(m);
    REQUIRE(hr.global_degree == 2);

    CHECK_THROWS_WITH(parse_morphism("MV v0 x\n", path, edge),
                      ContainsSubstring("does not map vertex"));
    CHECK_THROWS_WITH(parse_morphism(text + "MV v9 x\n", path, edge),
                      ContainsSubstring("line 8") && ContainsSubstring("unknown vertex"));
    CHECK_THROWS_WITH(parse_morphism(text + "E f+ f-\n", path, edge),
                      ContainsSubstring("MV/MH"));
}

TEST_CASE("file helpers write and read back verbatim") {
    std::string path = "/tmp/gog_io_test.txt";
    std::string content = "V a\n# comment\n";
    write_file(path, content);
    REQUIRE(read_file(path) == content);
    REQUIRE_THROWS_AS(read_file("/tmp/gog_io_missing_file.txt"), ParseError);
}
