#include "catch2/catch_amalgamated.hpp"

#include "gog/cover.hpp"
#include "gog/fixtures.hpp"
#include "gog/quotient.hpp"
#include "gog/weighted.hpp"

#include "helpers.hpp"

using namespace gog;

namespace {

CoverContext context_for(const HalfEdgeGraph& g, const std::vector<std::string>& gens) {
    return cover_context(letter_action(g, gens));
}

}  // namespace

TEST_CASE("cover context projections and fibers are mutually consistent") {
    CoverContext ctx = context_for(make_k4(), {"(ab)"});
    REQUIRE(ctx.group_order == 2);
    REQUIRE(ctx.cover.nv() == 4);
    REQUIRE(ctx.quotient.graph().nv() == 3);

    // Every fiber member projects back to its fiber, and fibers partition the
    // cover.
    std::size_t total_v = 0;
    for (int qv = 0; qv < ctx.quotient.graph().nv(); ++qv) {
        total_v += ctx.vertex_fiber[qv].size();
        for (int cv : ctx.vertex_fiber[qv]) REQUIRE(ctx.vertex_proj[cv] == qv);
    }
    REQUIRE(total_v == static_cast<std::size_t>(ctx.cover.nv()));

    std::size_t total_h = 0;
    for (int qh = 0; qh < ctx.quotient.graph().nh(); ++qh) {
        total_h += ctx.halfedge_fiber[qh].size();
        for (int ch : ctx.halfedge_fiber[qh]) REQUIRE(ctx.halfedge_proj[ch] == qh);
    }
    REQUIRE(total_h == static_cast<std::size_t>(ctx.cover.nh()));

    // Orbit-counting: |fiber| * weight = |G|.
    int qa = ctx.quotient.graph().vertex_index("a");
    int qd = ctx.quotient.graph().vertex_index("d");
    REQUIRE(ctx.vertex_fiber[qa].size() == 2);  // {a, b}
    REQUIRE(ctx.vertex_fiber[qd].size() == 1);  // fixed point, weight 2
    REQUIRE(ctx.quotient.c_vertex(qd) == 2);
}

TEST_CASE("pullback multiplies by vertex weights and spreads over fibers") {
    CoverContext ctx = context_for(make_k4(), {"(ab)"});
    IntDivisor d;
    d.add("a", 1);
    d.add("d", -1);

    IntDivisor up = pullback_divisor(ctx, d);
    REQUIRE(up.str() == "1*a +1*b -2*d");
    REQUIRE(up.degree() == 0);

    // Pushforward sums fibers, so push(pull(D)) = |G| * D.
    IntDivisor back = pushforward_divisor(ctx, up);
    REQUIRE(back == d * Int(2));

    IntDivisor cover_div;
    cover_div.add("a", 1);
    cover_div.add("b", 2);
    cover_div.add("c", -3);
    IntDivisor down = pushforward_divisor(ctx, cover_div);
    REQUIRE(down.str() == "3*a -3*c");
    REQUIRE(down.degree() == cover_div.degree());
}

TEST_CASE("pullback of divisors scales total degree by the group order") {
    CoverContext ctx = context_for(make_petersen(), {"(ab)", "(abc)"});  // S3, order 6
    REQUIRE(ctx.group_order == 6);
    IntDivisor d;
    d.add(ctx.quotient.graph().vertex_label(0), 2);
    d.add(ctx.quotient.graph().vertex_label(1), 3);
    IntDivisor up = pullback_divisor(ctx, d);
    REQUIRE(up.degree() == d.degree() * ctx.group_order);
    REQUIRE(pushforward_divisor(ctx, up) == d * ctx.group_order);
}

TEST_CASE("induced jacobian maps are surjective with the push-pull identity") {
    // The constructor itself verifies surjectivity and push o pull = |G|;
    // here we also pin the shapes.
    CoverContext ctx = context_for(make_k4(), {"(ab)"});
    InducedJacobianMaps maps = induced_jacobian_maps(ctx);
    REQUIRE(maps.push_surjective);
    REQUIRE(maps.jac_cover.str() == "4 4");
    REQUIRE(maps.jac_quotient.str() == "4");
    REQUIRE(maps.push_matrix.rows() == 1);
    REQUIRE(maps.push_matrix.cols() == 2);
    REQUIRE(maps.pull_matrix.rows() == 2);
    REQUIRE(maps.pull_matrix.cols() == 1);
}

TEST_CASE("voltage jacobian matches the kernel of the induced pushforward") {
    struct Row {
        HalfEdgeGraph graph;
        std::vector<std::string> gens;
        std::string expected_factors;  // empty = only check the order
        Int expected_order;
    };
    const HalfEdgeGraph k4 = make_k4();
    const HalfEdgeGraph pete = make_petersen();
    const std::vector<Row> rows = {
        {k4, {"(ab)"}, "4", 4},
        {k4, {"(ab)(cd)"}, "", 8},
        {k4, {"(ab)", "(cd)"}, "2 4", 8},
        {k4, {"(abc)"}, "4 4", 16},
        {pete, {"(ab)"}, "", 20},
        {pete, {"(ab)(cd)"}, "", 100},
    };
    for (const Row& row : rows) {
        INFO("generators: " << row.gens.front());
        CoverContext ctx = cover_context(letter_action(row.graph, row.gens));
        auto [l0, jac0] = voltage_jacobian(ctx);
        REQUIRE(jac0.order() == row.expected_order);
        if (!row.expected_factors.empty()) REQUIRE(jac0.str() == row.expected_factors);

        // Independent computation through the invariant-factor presentations.
        FiniteAbelianGroup ker = kernel_of_pushforward(induced_jacobian_maps(ctx));
        REQUIRE(jac0 == ker);

        // The unconditional order identity.
        Int cover_order = jacobian_structure(GraphOfGroups::unit_weights(ctx.cover)).order();
        Int quot_order = jacobian_structure(ctx.quotient).order();
        REQUIRE(jac0.order() * quot_order == cover_order);

        // The restricted Laplacian acts on the fiberwise degree-zero lattice.
        REQUIRE(l0.rows() == l0.cols());
    }
}

TEST_CASE("a trivial action has a trivial voltage jacobian") {
    HalfEdgeGraph k4 = make_k4();
    CoverContext ctx = context_for(k4, {"()"});
    REQUIRE(ctx.group_order == 1);
    auto [l0, jac0] = voltage_jacobian(ctx);
    REQUIRE(jac0.trivial());
    REQUIRE(l0.rows() == 0);
    REQUIRE(kernel_of_pushforward(induced_jacobian_maps(ctx)).trivial());
}

TEST_CASE("voltage jacobian refuses disconnected covers") {
    // Trivial voltages over Z/3 assemble three disjoint sheets.
    HalfEdgeGraph k4 = make_k4();
    VoltageData vd;
    vd.graph = k4;
    vd.group = GroupTable::cyclic(3);
    vd.vertex_subgroup.assign(k4.nv(), {0});
    vd.halfedge_subgroup.assign(k4.nh(), {0});
    vd.beta.assign(k4.nh(), 0);
    CoverContext ctx = cover_context(vd);
    REQUIRE(ctx.cover.component_count() == 3);
    REQUIRE_THROWS_AS(voltage_jacobian(ctx), DisconnectedGraph);
}

TEST_CASE("voltage kernel data descends the chain maps consistently") {
    CoverContext ctx = context_for(make_k4(), {"(ab)", "(cd)"});
    VoltageKernelData vk = voltage_kernel_data(ctx);
    // K4 has 4 vertices over 2 quotient vertices and 12 half-edges over 4
    // (one edge plus two legs): V0 has rank 4 - 2 = 2, H0 rank 12 - 4 = 8.
    const std::size_t nv0 = vk.v0_basis.size(), nh0 = vk.h0_basis.size();
    REQUIRE(nv0 == 2);
    REQUIRE(nh0 == 8);
    REQUIRE(vk.r0.rows() == nv0);
    REQUIRE(vk.r0.cols() == nh0);
    REQUIRE(vk.iota0.rows() == nh0);
    REQUIRE(vk.tau0.rows() == nh0);
    REQUIRE(vk.tau0.cols() == nv0);
    // The descended maps compose to the descended Laplacian.
    REQUIRE(vk.boundary0 == vk.r0 * (IntMatrix::identity(nh0) - vk.iota0));
    REQUIRE(vk.L0 == vk.boundary0 * vk.tau0);
    // Each basis vector is a (member, base) difference within one fiber.
    for (const auto& [member, base] : vk.v0_basis) {
        REQUIRE(member != base);
        REQUIRE(ctx.vertex_proj[member] == ctx.vertex_proj[base]);
    }
}
