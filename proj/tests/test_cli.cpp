#include "catch2/catch_amalgamated.hpp"

#include <cstdlib>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "gog/cli.hpp"

#include "helpers.hpp"

using namespace gog;

namespace {

struct CliRun {
    int exit_code;
    std::string out, err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

int spawn(const std::string& args) {
    std::string cmd = std::string(GOG_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(rc));
    return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("jacobian command prints invariant factors and the matrix-tree check") {
    CliRun r = cli({"jacobian", gogtest::fixture_path("k4.graph")});
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "Jac = 4 4\n"));
    REQUIRE(contains(r.out, "order = 16\n"));
    REQUIRE(contains(r.out, "[PASS] matrix-tree-order: expected 16, actual 16"));

    CliRun p = cli({"jacobian", gogtest::fixture_path("petersen.graph")});
    REQUIRE(p.exit_code == 0);
    REQUIRE(contains(p.out, "Jac = 2 10 10 10\n"));
    REQUIRE(contains(p.out, "order = 2000\n"));
}

TEST_CASE("validate command summarizes the graph structure") {
    CliRun r = cli({"validate", gogtest::fixture_path("petersen.graph")});
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "vertices = 10\n"));
    REQUIRE(contains(r.out, "edges = 15\n"));
    REQUIRE(contains(r.out, "legs = 0\n"));
    REQUIRE(contains(r.out, "connected = true\n"));
    REQUIRE(contains(r.out, "[PASS] structure"));
    REQUIRE(contains(r.out, "[PASS] laplacian-factorization"));
}

TEST_CASE("trees command reports the weighted tree sum") {
    CliRun r = cli({"trees", gogtest::fixture_path("k4.graph")});
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "tree-weight-sum = 16\n"));
    REQUIRE(contains(r.out, "matrix-tree-order = 16\n"));
    REQUIRE(contains(r.out, "[PASS] adjugate-identity"));
}

TEST_CASE("zeta command expands the reciprocal zeta polynomial at u = 1") {
    CliRun r = cli({"zeta", gogtest::fixture_path("k4.graph")});
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "genus = 3\n"));
    REQUIRE(contains(r.out, "vanishing-order = 3\n"));
    REQUIRE(contains(r.out, "leading-coefficient = 256\n"));
    REQUIRE(contains(r.out, "order-matches-genus = true\n"));

    // The doubled 2-cycle vanishes beyond its genus.
    CliRun c = cli({"zeta", gogtest::fixture_path("cycle2.graph")});
    REQUIRE(c.exit_code == 0);
    REQUIRE(contains(c.out, "genus = 1\n"));
    REQUIRE(contains(c.out, "vanishing-order = 2\n"));
    REQUIRE(contains(c.out, "order-matches-genus = false\n"));
}

TEST_CASE("quotient command emits the serialized quotient verbatim") {
    CliRun r = cli({"quotient", gogtest::fixture_path("k4.graph"),
                    gogtest::fixture_path("k4_c2.action")});
    REQUIRE(r.exit_code == 0);
    std::string expected =
        serialize_quotient(quotient_graph_of_groups(letter_action(make_k4(), {"(ab)"})));
    REQUIRE(r.out == expected);

    // Deterministic: a second run produces identical bytes.
    CliRun again = cli({"quotient", gogtest::fixture_path("k4.graph"),
                        gogtest::fixture_path("k4_c2.action")});
    REQUIRE(again.out == r.out);

    // The emitted file is itself a valid weighted-graph input.
    GogFile f = parse_gog_file(r.out);
    REQUIRE(f.has_weights);
    REQUIRE(jacobian_structure(f.gog).str() == "4");
}

TEST_CASE("quotient command writes to a file with -o") {
    std::string path = "/tmp/gog_cli_quotient_test.gog";
    CliRun r = cli({"quotient", gogtest::fixture_path("k4.graph"),
                    gogtest::fixture_path("k4_c3.action"), "-o", path});
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "wrote = " + path));
    REQUIRE(contains(r.out, "group-order = 3\n"));
    GogFile f = parse_gog_file(read_file(path));
    REQUIRE(f.gog.graph().nv() == 2);
    REQUIRE(jacobian_structure(f.gog).trivial());
}

TEST_CASE("verify-cover command checks the pushforward identities") {
    CliRun r = cli({"verify-cover", gogtest::fixture_path("k4.graph"),
                    gogtest::fixture_path("k4_v4.action")});
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "group-order = 4\n"));
    REQUIRE(contains(r.out, "jac-cover = 4 4\n"));
    REQUIRE(contains(r.out, "jac-quotient = 2\n"));
    REQUIRE(contains(r.out, "jac-voltage = 2 4\n"));
    REQUIRE(contains(r.out, "[PASS] pushforward-surjective"));
    REQUIRE(contains(r.out, "[PASS] order-identity: expected 16, actual 16"));
    REQUIRE(contains(r.out, "[PASS] pushforward-kernel-is-voltage-jacobian"));
    REQUIRE_FALSE(contains(r.out, "[FAIL]"));
}

TEST_CASE("ogods command enumerates and classifies") {
    CliRun r = cli({"ogods", gogtest::fixture_path("petersen.graph"),
                    gogtest::fixture_path("petersen_c2.action")});
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.out, "ogods = 17\n"));
    REQUIRE(contains(r.out, "total-weight = 20\n"));
    REQUIRE(contains(r.out, "det-L0 = 20\n"));
    REQUIRE(contains(r.out, "free-cover = false\n"));
    REQUIRE(contains(r.out, "[PASS] kirchhoff"));
    REQUIRE(contains(r.out, "[PASS] jacobian-ratio"));

    CliRun s = cli({"ogods", gogtest::fixture_path("petersen.graph"),
                    gogtest::fixture_path("petersen_c2x2.action"), "--symmetry",
                    gogtest::fixture_path("petersen_c2d_quotient_symmetry.action")});
    REQUIRE(s.exit_code == 0);
    REQUIRE(contains(s.out, "ogods = 46\n"));
    REQUIRE(contains(s.out, "total-weight = 100\n"));
    REQUIRE(contains(s.out, "classes = 15\n"));
    REQUIRE(contains(s.out, "[PASS] class-weight-sum: expected 100, actual 100"));
}

TEST_CASE("verify-all command runs the bundled suites clean") {
    CliRun k4 = cli({"verify-all", "k4"});
    REQUIRE(k4.exit_code == 0);
    REQUIRE(contains(k4.out, "[PASS]"));
    REQUIRE_FALSE(contains(k4.out, "[FAIL]"));

    CliRun pete = cli({"verify-all", "petersen"});
    REQUIRE(pete.exit_code == 0);
    REQUIRE_FALSE(contains(pete.out, "[FAIL]"));

    CliRun empty = cli({"verify-all", "empty-fixture"});
    REQUIRE(empty.exit_code == 0);
    REQUIRE(contains(empty.out, "checks = 0\n"));

    CliRun bogus = cli({"verify-all", "nope"});
    REQUIRE(bogus.exit_code == 2);
    REQUIRE(contains(bogus.err, "input error"));
}

TEST_CASE("json output is schema-stable and parseable") {
    CliRun r = cli({"jacobian", gogtest::fixture_path("k4.graph"), "--format", "json"});
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j["command"] == "jacobian");
    REQUIRE(j["results"]["Jac"] == "4 4");
    REQUIRE(j["results"]["order"] == "16");
    REQUIRE(j["checks"].size() == 1);
    REQUIRE(j["checks"][0]["name"] == "matrix-tree-order");
    REQUIRE(j["checks"][0]["status"] == "pass");

    CliRun v = cli({"verify-all", "k4", "--format", "json"});
    REQUIRE(v.exit_code == 0);
    nlohmann::json jv = nlohmann::json::parse(v.out);
    for (const auto& c : jv["checks"]) REQUIRE(c["status"] == "pass");
}

TEST_CASE("input problems exit with code 2") {
    CliRun missing = cli({"jacobian", "/tmp/gog_definitely_missing.graph"});
    REQUIRE(missing.exit_code == 2);
    REQUIRE(contains(missing.err, "input error"));

    CliRun badsub = cli({"frobnicate"});
    REQUIRE(badsub.exit_code == 2);

    CliRun badformat = cli({"jacobian", gogtest::fixture_path("k4.graph"), "--format", "xml"});
    REQUIRE(badformat.exit_code == 2);

    // Action referencing labels absent from the graph.
    CliRun mismatch = cli({"quotient", gogtest::fixture_path("k4.graph"),
                           gogtest::fixture_path("petersen_c2.action")});
    REQUIRE(mismatch.exit_code == 2);
    REQUIRE(contains(mismatch.err, "input error"));

    // Non-involutive group for ogods.
    CliRun order3 = cli({"ogods", gogtest::fixture_path("k4.graph"),
                         gogtest::fixture_path("k4_c3.action")});
    REQUIRE(order3.exit_code == 2);
}

TEST_CASE("the installed binary honors the exit-code contract") {
    REQUIRE(spawn("jacobian " + gogtest::fixture_path("k4.graph")) == 0);
    REQUIRE(spawn("verify-all k4") == 0);
    REQUIRE(spawn("jacobian /tmp/gog_definitely_missing.graph") == 2);
    REQUIRE(spawn("") == 2);  // a subcommand is required
}
