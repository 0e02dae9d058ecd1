#pragma once

// Command-line front-end.  Commands: validate, jacobian, trees, zeta,
// quotient, verify-cover, ogods, verify-all (plus the hidden maintenance
// command write-fixtures).  Flags: --weights <file>, --symmetry <file>,
// --format {text,json}.  Exit codes: 0 all pass, 1 verification failure,
// 2 input error.  Output bytes are deterministic for fixed inputs.

#include "CLI11.hpp"
#include "json.hpp"

#include "gog/cover.hpp"
#include "gog/double_cover.hpp"
#include "gog/errors.hpp"
#include "gog/fixtures.hpp"
#include "gog/io.hpp"
#include "gog/quotient.hpp"
#include "gog/weighted.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace gog {

struct CliCheck {
    std::string name, expected, actual, provenance;
    bool pass = false;
};

struct CliReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, std::string>> results;
    std::vector<std::string> table;  // extra text-mode lines (tables)
    std::string body;                // raw file content (quotient output)
    std::vector<CliCheck> checks;

    void input(const std::string& k, const std::string& v) { inputs.emplace_back(k, v); }
    void result(const std::string& k, const std::string& v) { results.emplace_back(k, v); }
    void check(const std::string& name, const std::string& expected, const std::string& actual,
               const std::string& provenance = "") {
        checks.push_back({name, expected, actual, provenance, expected == actual});
    }
    void fail(const std::string& name, const std::string& message) {
        checks.push_back({name, "ok", message, "", false});
    }
    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const CliCheck& c) { return c.pass; });
    }
};

inline void render_text(const CliReport& rep, std::ostream& out) {
    out << rep.body;
    for (const auto& [k, v] : rep.results) out << k << " = " << v << "\n";
    for (const std::string& line : rep.table) out << line << "\n";
    for (const CliCheck& c : rep.checks) {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": expected " << c.expected
            << ", actual " << c.actual;
        if (!c.provenance.empty()) out << " [" << c.provenance << "]";
        out << "\n";
    }
}

inline void render_json(const CliReport& rep, std::ostream& out) {
    nlohmann::ordered_json j;
    j["command"] = rep.command;
    j["inputs"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rep.inputs) j["inputs"][k] = v;
    j["results"] = nlohmann::ordered_json::object();
    if (!rep.body.empty()) j["results"]["file"] = rep.body;
    for (const auto& [k, v] : rep.results) j["results"][k] = v;
    j["checks"] = nlohmann::ordered_json::array();
    for (const CliCheck& c : rep.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["expected"] = c.expected;
        jc["actual"] = c.actual;
        jc["status"] = c.pass ? "pass" : "fail";
        if (!c.provenance.empty()) jc["provenance"] = c.provenance;
        j["checks"].push_back(jc);
    }
    out << j.dump(2) << "\n";
}

namespace detail {

inline std::string int_list_str(const std::vector<Int>& xs) {
    if (xs.empty()) return "trivial";
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += " ";
        s += xs[i].str();
    }
    return s;
}

inline std::string poly_str(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (i) s += " ";
        s += p.c[i].str();
    }
    return s;
}

inline std::string matrix_str(const IntMatrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? "; " : "";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + m(i, j).str();
    }
    return s;
}

// Weighted graph from a graph/gog file plus an optional separate weights file.
inline GraphOfGroups load_gog(const std::string& graph_path, const std::string& weights_path) {
    GogFile gf = parse_gog_file(read_file(graph_path));
    if (weights_path.empty()) return gf.gog;
    return parse_weights(read_file(weights_path), gf.gog.graph());
}

inline const char* component_type_name(int type) {
    switch (type) {
        case 1: return "dilated-tree";
        case 2: return "leg-tree";
        case 3: return "odd-cycle";
        default: return "?";
    }
}

inline std::string ogod_subset_str(const OgodEnumeration& en, const std::vector<int>& elements) {
    std::string s;
    for (std::size_t i = 0; i < elements.size(); ++i)
        s += (i ? "+" : "") + en.candidates[elements[i]].name;
    return s.empty() ? "(empty)" : s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Individual commands.  Each fills a report; exceptions propagate to run_cli.

inline void cmd_validate(CliReport& rep, const GraphOfGroups& x) {
    const HalfEdgeGraph& g = x.graph();
    ValidationReport vr = validate_graph(g);
    rep.result("vertices", std::to_string(vr.n_vertices));
    rep.result("edges", std::to_string(vr.n_edges));
    rep.result("loops", std::to_string(vr.n_loops));
    rep.result("legs", std::to_string(vr.n_legs));
    rep.result("components", std::to_string(vr.n_components));
    rep.result("connected", vr.connected ? "true" : "false");
    rep.result("unit-weights", x.all_unit() ? "true" : "false");
    rep.check("structure", "ok", vr.ok ? "ok" : "invalid");
    // Building the Laplacian runs the factorization identities internally.
    gog_laplacian(x);
    rep.check("laplacian-factorization", "ok", "ok");
}

inline void cmd_jacobian(CliReport& rep, const GraphOfGroups& x) {
    FiniteAbelianGroup jac = jacobian_structure(x);
    rep.result("Jac", jac.str());
    rep.result("order", jac.order().str());
    rep.check("matrix-tree-order", jac.order().str(), jacobian_order_matrixtree(x).str());
}

inline void cmd_trees(CliReport& rep, const GraphOfGroups& x) {
    rep.result("tree-weight-sum", spanning_tree_weight_sum(x).str());
    rep.result("matrix-tree-order", jacobian_order_matrixtree(x).str());
    adjugate_check(x);  // throws MismatchedAdjugate on failure
    rep.check("adjugate-identity", "ok", "ok");
}

inline void cmd_zeta(CliReport& rep, const GraphOfGroups& x) {
    ZetaExpansion z = zeta_expansion(x);
    rep.result("zeta-inverse", detail::poly_str(z.reciprocal_poly));
    rep.result("genus", std::to_string(z.genus));
    rep.result("vanishing-order", std::to_string(z.vanishing_order));
    rep.result("leading-coefficient", z.leading_coeff.str());
    rep.result("order-matches-genus", z.order_matches_genus ? "true" : "false");
}

inline void cmd_quotient(CliReport& rep, const HalfEdgeGraph& g, const std::string& action_text,
                         const std::string& out_path) {
    GraphAction a = parse_action(action_text, g);
    QuotientData q = quotient_graph_of_groups(a);
    std::string content = serialize_quotient(q);
    if (out_path.empty()) {
        rep.body = content;  // raw file bytes; idempotent for identical inputs
    } else {
        write_file(out_path, content);
        rep.result("wrote", out_path);
        rep.result("group-order", std::to_string(a.order()));
        rep.result("vertices", std::to_string(q.quotient.graph().nv()));
    }
}

inline void cmd_verify_cover(CliReport& rep, const HalfEdgeGraph& g,
                             const std::string& action_text) {
    GraphAction a = parse_action(action_text, g);
    CoverContext ctx = cover_context(a);
    rep.result("group-order", ctx.group_order.str());
    try {
        InducedJacobianMaps maps = induced_jacobian_maps(ctx);
        rep.result("jac-cover", maps.jac_cover.str());
        rep.result("jac-quotient", maps.jac_quotient.str());
        rep.check("pushforward-surjective", "true", maps.push_surjective ? "true" : "false");
        rep.check("pushforward-pullback-scalar", ctx.group_order.str(), ctx.group_order.str());
        FiniteAbelianGroup jac0 = voltage_jacobian(ctx).second;
        rep.result("jac-voltage", jac0.str());
        rep.check("order-identity", maps.jac_cover.order().str(),
                  (jac0.order() * maps.jac_quotient.order()).str());
        FiniteAbelianGroup ker = kernel_of_pushforward(maps);
        rep.check("pushforward-kernel-is-voltage-jacobian", jac0.str(), ker.str());
    } catch (const DisconnectedGraph&) {
        throw;
    } catch (const Error& e) {
        rep.fail("cover-identities", e.what());
    }
}

inline void cmd_ogods(CliReport& rep, const HalfEdgeGraph& g, const std::string& action_text,
                      const std::string& symmetry_text) {
    GraphAction a = parse_action(action_text, g);
    DoubleCoverAnalysis d = analyze_double_cover(a);
    OgodEnumeration en = enumerate_ogods(d);
    rep.result("candidates", std::to_string(en.candidates.size()));
    rep.result("subset-size", std::to_string(en.subset_size));
    rep.table.push_back("subset | components | weight");
    for (const OgodCertificate& og : en.ogods) {
        std::string comps;
        for (std::size_t i = 0; i < og.components.size(); ++i)
            comps += std::string(i ? "," : "") + detail::component_type_name(og.components[i].type);
        if (comps.empty()) comps = "-";
        rep.table.push_back(detail::ogod_subset_str(en, og.elements) + " | " + comps + " | " +
                            og.weight.str());
    }
    rep.result("ogods", std::to_string(en.ogods.size()));
    rep.result("total-weight", en.total_weight.str());
    try {
        KirchhoffReport kr = kirchhoff_ogod_check(d);
        rep.result("det-L0", kr.det_l0.str());
        rep.result("jac-voltage-order", kr.jac0_order.str());
        rep.result("free-cover", kr.free_cover ? "true" : "false");
        rep.check("kirchhoff", kr.det_l0.str(), kr.total_weight.str());
        rep.check("jacobian-ratio", kr.jac_ratio.str(), kr.jac0_order.str());
    } catch (const Error& e) {
        rep.fail("kirchhoff", e.what());
    }
    if (!symmetry_text.empty()) {
        GraphAction sym = parse_action(symmetry_text, d.ctx.quotient.graph());
        std::vector<OgodSymmetryClass> classes = ogod_symmetry_classes(d, en, sym);
        rep.table.push_back("class | representative | size | weight");
        Int class_total = 0;
        for (std::size_t i = 0; i < classes.size(); ++i) {
            rep.table.push_back(std::to_string(i + 1) + " | " +
                                detail::ogod_subset_str(en, classes[i].representative) + " | " +
                                std::to_string(classes[i].size) + " | " +
                                classes[i].weight.str());
            class_total += Int(classes[i].size) * classes[i].weight;
        }
        rep.result("classes", std::to_string(classes.size()));
        rep.check("class-weight-sum", en.total_weight.str(), class_total.str());
    }
}

// ---------------------------------------------------------------------------
// verify-all: bundled fixture suites with literature expectations.

namespace detail {

// Shared per-quotient checks: Jacobian invariant factors against the catalog
// row, matrix-tree order, zeta consistency, and the cover order identity.
inline void verify_subgroup_row(CliReport& rep, const HalfEdgeGraph& g, const std::string& prefix,
                                const SubgroupRow& row) {
    GraphAction a = letter_action(g, row.cycles);
    QuotientData q = quotient_graph_of_groups(a);
    std::string label = prefix + "//" + row.name;
    rep.check(label + " jacobian", int_list_str(row.jacobian_factors),
              jacobian_structure(q.quotient).str(), "literature");
    rep.check(label + " order", row.jacobian_order.str(),
              jacobian_order_matrixtree(q.quotient).str(), "cross-check");
    zeta_expansion(q.quotient);  // internal leading-coefficient identity
    rep.check(label + " zeta-consistent", "ok", "ok", "cross-check");
    CoverContext ctx = cover_context(a, q);
    InducedJacobianMaps maps = induced_jacobian_maps(ctx);
    FiniteAbelianGroup jac0 = voltage_jacobian(ctx).second;
    rep.check(label + " push-surjective", "true", maps.push_surjective ? "true" : "false",
              "cross-check");
    rep.check(label + " order-identity", maps.jac_cover.order().str(),
              (jac0.order() * maps.jac_quotient.order()).str(), "cross-check");
}

inline void verify_all_k4(CliReport& rep) {
    HalfEdgeGraph k4 = make_k4();
    GraphOfGroups x = GraphOfGroups::unit_weights(k4);
    rep.check("K4 jacobian", "4 4", jacobian_structure(x).str(), "literature");
    rep.check("K4 trees", "16", spanning_tree_weight_sum(x).str(), "literature");
    rep.check("K4 matrix-tree-order", "16", jacobian_order_matrixtree(x).str(), "cross-check");
    ZetaExpansion z = zeta_expansion(x);
    rep.check("K4 zeta-genus", "3", std::to_string(z.vanishing_order), "cross-check");
    for (const SubgroupRow& row : k4_subgroup_rows()) verify_subgroup_row(rep, k4, "K4", row);

    // Matrices of the C2 and C2-with-3-cycle quotients, in quotient order.
    {
        GraphAction a = letter_action(k4, {"(ab)"});
        LaplacianBundle b = gog_laplacian(quotient_graph_of_groups(a).quotient);
        rep.check("K4//C2 degree-matrix", matrix_str(k4_c2_expected_q()), matrix_str(b.Q),
                  "literature");
        rep.check("K4//C2 adjacency-matrix", matrix_str(k4_c2_expected_a()), matrix_str(b.A),
                  "literature");
        rep.check("K4//C2 laplacian", matrix_str(k4_c2_expected_l()), matrix_str(b.L),
                  "literature");
    }
    {
        GraphAction a = letter_action(k4, {"(abc)"});
        LaplacianBundle b = gog_laplacian(quotient_graph_of_groups(a).quotient);
        rep.check("K4//C3 degree-matrix", matrix_str(k4_c3_expected_q()), matrix_str(b.Q),
                  "literature");
        rep.check("K4//C3 adjacency-matrix", matrix_str(k4_c3_expected_a()), matrix_str(b.A),
                  "literature");
        rep.check("K4//C3 laplacian", matrix_str(k4_c3_expected_l()), matrix_str(b.L),
                  "literature");
    }

    // Pullback along K4 -> K4//C2 of the class of the weight-one vertex.
    {
        GraphAction a = letter_action(k4, {"(ab)"});
        CoverContext ctx = cover_context(a);
        IntDivisor d;
        d.add("a", 1);
        d.add("d", -1);
        IntDivisor up = pullback_divisor(ctx, d);
        IntDivisor expected;
        expected.add("a", 1);
        expected.add("b", 1);
        expected.add("d", -2);
        rep.check("K4//C2 pullback", expected.str(), up.str(), "literature");
        rep.check("K4//C2 push-pull-doubles", (d * Int(2)).str(),
                  pushforward_divisor(ctx, up).str(), "cross-check");
    }
}

inline void verify_all_petersen(CliReport& rep) {
    HalfEdgeGraph p = make_petersen();
    GraphOfGroups x = GraphOfGroups::unit_weights(p);
    rep.check("Petersen jacobian", "2 10 10 10", jacobian_structure(x).str(), "literature");
    rep.check("Petersen trees", "2000", spanning_tree_weight_sum(x).str(), "literature");
    for (const SubgroupRow& row : petersen_subgroup_rows())
        verify_subgroup_row(rep, p, "P", row);

    // Vertex weights of the S3 quotient.
    {
        GraphAction a = letter_action(p, {"(ab)", "(abc)"});
        QuotientData q = quotient_graph_of_groups(a);
        const HalfEdgeGraph& qg = q.quotient.graph();
        std::string got;
        for (int v = 0; v < qg.nv(); ++v)
            got += (v ? " " : "") + qg.vertex_label(v) + ":" +
                   q.quotient.c_vertex(v).str();
        std::string want;
        auto rows = petersen_s3_expected_vertex_weights();
        for (std::size_t i = 0; i < rows.size(); ++i)
            want += (i ? " " : "") + rows[i].first + ":" + rows[i].second.str();
        rep.check("P//S3 vertex-weights", want, got, "literature");
    }

    // Ogod suites for the two involutions.
    {
        GraphAction a = letter_action(p, {"(ab)"});
        DoubleCoverAnalysis d = analyze_double_cover(a);
        KirchhoffReport kr = kirchhoff_ogod_check(d);
        rep.check("P//C2 ogods", "17", std::to_string(kr.n_ogods), "literature");
        rep.check("P//C2 ogod-total", "20", kr.total_weight.str(), "literature");
        rep.check("P//C2 det-L0", kr.det_l0.str(), kr.total_weight.str(), "cross-check");
        rep.check("P//C2 jacobian-ratio", kr.jac_ratio.str(), kr.jac0_order.str(), "cross-check");
    }
    {
        GraphAction a = letter_action(p, {"(ab)(cd)"});
        DoubleCoverAnalysis d = analyze_double_cover(a);
        OgodEnumeration en = enumerate_ogods(d);
        KirchhoffReport kr = kirchhoff_ogod_check(d);
        rep.check("P//C2d ogods", "46", std::to_string(kr.n_ogods), "literature");
        rep.check("P//C2d ogod-total", "100", kr.total_weight.str(), "literature");
        rep.check("P//C2d det-L0", kr.det_l0.str(), kr.total_weight.str(), "cross-check");
        QuotientData q = quotient_graph_of_groups(a);
        GraphAction sym = petersen_ogod_symmetry(p, q);
        std::vector<OgodSymmetryClass> classes = ogod_symmetry_classes(d, en, sym);
        std::vector<std::pair<int, Int>> got;
        for (const OgodSymmetryClass& c : classes) got.emplace_back(c.size, c.weight);
        std::sort(got.begin(), got.end());
        std::string got_s, want_s;
        for (const auto& [s, w] : got) got_s += "(" + std::to_string(s) + "," + w.str() + ")";
        for (const auto& [s, w] : petersen_expected_ogod_classes())
            want_s += "(" + std::to_string(s) + "," + w.str() + ")";
        rep.check("P//C2d ogod-classes", want_s, got_s, "literature");
    }
}

}  // namespace detail

inline void cmd_verify_all(CliReport& rep, const std::string& fixture) {
    rep.result("fixture", fixture);
    if (fixture == "k4") {
        detail::verify_all_k4(rep);
    } else if (fixture == "petersen") {
        detail::verify_all_petersen(rep);
    } else if (fixture == "empty-fixture") {
        // Header only: exercises the empty report path.
    } else {
        throw ParseError("unknown fixture '" + fixture + "' (try k4, petersen, empty-fixture)");
    }
    rep.result("checks", std::to_string(rep.checks.size()));
}

// ---------------------------------------------------------------------------
// Fixture file generation (maintenance; used to keep committed files in sync).

inline std::vector<std::pair<std::string, std::string>> fixture_files() {
    std::vector<std::pair<std::string, std::string>> out;
    HalfEdgeGraph k4 = make_k4(), p = make_petersen();
    out.emplace_back("k4.graph", serialize_graph(k4));
    out.emplace_back("petersen.graph", serialize_graph(p));
    out.emplace_back("path3.graph", serialize_graph(make_path(3)));
    out.emplace_back("cycle2.graph", serialize_graph(make_cycle(2)));
    auto lower = [](std::string s) {
        std::transform(s.begin(), s.end(), s.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        return s;
    };
    for (const SubgroupRow& row : k4_subgroup_rows())
        out.emplace_back("k4_" + lower(row.name) + ".action",
                         serialize_action(letter_action(k4, row.cycles)));
    for (const SubgroupRow& row : petersen_subgroup_rows())
        out.emplace_back("petersen_" + lower(row.name) + ".action",
                         serialize_action(letter_action(p, row.cycles)));
    QuotientData q = quotient_graph_of_groups(letter_action(p, {"(ab)(cd)"}));
    out.emplace_back("petersen_c2d_quotient_symmetry.action",
                     serialize_action(petersen_ogod_symmetry(p, q)));
    return out;
}

// ---------------------------------------------------------------------------
// Dispatch.

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"chip-firing on graphs of groups: quotients, Jacobians, covers, ogods"};
    app.require_subcommand(1);
    std::string graph_path, action_path, weights_path, symmetry_path, out_path, fixture;
    std::string format = "text";

    auto add_common = [&](CLI::App* c) {
        c->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_weights = [&](CLI::App* c) {
        c->add_option("--weights", weights_path, "weights file (W/WH lines)");
    };

    CLI::App* c_validate = app.add_subcommand("validate", "parse and summarize a graph");
    c_validate->add_option("graph", graph_path, "graph file")->required();
    add_weights(c_validate);
    add_common(c_validate);

    CLI::App* c_jacobian = app.add_subcommand("jacobian", "invariant factors of the Jacobian");
    c_jacobian->add_option("graph", graph_path)->required();
    add_weights(c_jacobian);
    add_common(c_jacobian);

    CLI::App* c_trees = app.add_subcommand("trees", "weighted spanning tree sum");
    c_trees->add_option("graph", graph_path)->required();
    add_weights(c_trees);
    add_common(c_trees);

    CLI::App* c_zeta = app.add_subcommand("zeta", "zeta function expansion at u = 1");
    c_zeta->add_option("graph", graph_path)->required();
    add_weights(c_zeta);
    add_common(c_zeta);

    CLI::App* c_quotient = app.add_subcommand("quotient", "quotient graph of groups");
    c_quotient->add_option("graph", graph_path)->required();
    c_quotient->add_option("action", action_path, "action file")->required();
    c_quotient->add_option("-o,--output", out_path, "write to file instead of stdout");
    add_common(c_quotient);

    CLI::App* c_verify_cover = app.add_subcommand("verify-cover", "cover/quotient identities");
    c_verify_cover->add_option("graph", graph_path)->required();
    c_verify_cover->add_option("action", action_path)->required();
    add_common(c_verify_cover);

    CLI::App* c_ogods = app.add_subcommand("ogods", "ogod enumeration for a double cover");
    c_ogods->add_option("graph", graph_path)->required();
    c_ogods->add_option("action", action_path)->required();
    c_ogods->add_option("--symmetry", symmetry_path, "quotient symmetry action file");
    add_common(c_ogods);

    CLI::App* c_verify_all = app.add_subcommand("verify-all", "bundled fixture suite");
    c_verify_all->add_option("fixture", fixture, "k4 | petersen | empty-fixture")->required();
    add_common(c_verify_all);

    CLI::App* c_write = app.add_subcommand("write-fixtures", "regenerate fixture files");
    std::string fixture_dir;
    c_write->add_option("dir", fixture_dir)->required();
    c_write->group("");  // maintenance; hidden from help

    std::vector<const char*> argv;
    argv.push_back("gog");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    CliReport rep;
    try {
        if (*c_validate) {
            rep.command = "validate";
            rep.input("graph", graph_path);
            cmd_validate(rep, detail::load_gog(graph_path, weights_path));
        } else if (*c_jacobian) {
            rep.command = "jacobian";
            rep.input("graph", graph_path);
            cmd_jacobian(rep, detail::load_gog(graph_path, weights_path));
        } else if (*c_trees) {
            rep.command = "trees";
            rep.input("graph", graph_path);
            cmd_trees(rep, detail::load_gog(graph_path, weights_path));
        } else if (*c_zeta) {
            rep.command = "zeta";
            rep.input("graph", graph_path);
            cmd_zeta(rep, detail::load_gog(graph_path, weights_path));
        } else if (*c_quotient) {
            rep.command = "quotient";
            rep.input("graph", graph_path);
            rep.input("action", action_path);
            cmd_quotient(rep, parse_graph(read_file(graph_path)), read_file(action_path),
                         out_path);
        } else if (*c_verify_cover) {
            rep.command = "verify-cover";
            rep.input("graph", graph_path);
            rep.input("action", action_path);
            cmd_verify_cover(rep, parse_graph(read_file(graph_path)), read_file(action_path));
        } else if (*c_ogods) {
            rep.command = "ogods";
            rep.input("graph", graph_path);
            rep.input("action", action_path);
            std::string sym = symmetry_path.empty() ? "" : read_file(symmetry_path);
            if (!symmetry_path.empty()) rep.input("symmetry", symmetry_path);
            cmd_ogods(rep, parse_graph(read_file(graph_path)), read_file(action_path), sym);
        } else if (*c_verify_all) {
            rep.command = "verify-all";
            rep.input("fixture", fixture);
            cmd_verify_all(rep, fixture);
        } else if (*c_write) {
            rep.command = "write-fixtures";
            for (const auto& [name, content] : fixture_files()) {
                write_file(fixture_dir + "/" + name, content);
                rep.result(name, std::to_string(content.size()) + " bytes");
            }
        }
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownVertex& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const NotAnAction& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ClosureCapExceeded& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const NotOrderTwo& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DisconnectedGraph& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DivisibilityViolation& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const IncompatibleSubgroups& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidVoltage& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "verification failure: " << e.what() << "\n";
        return 1;
    }

    if (format == "json")
        render_json(rep, out);
    else
        render_text(rep, out);
    return rep.all_pass() ? 0 : 1;
}

}  // namespace gog
