#pragma once

// Pushforward and pullback between a cover and its quotient graph of groups,
// the induced maps on Jacobians, and the voltage Jacobian Jac0 with the
// order identity |Jac0| * |Jac(quotient)| = |Jac(cover)|.
//
// A CoverContext can be built from a group action on the cover, or directly
// from voltage data (which also covers non-faithful actions, e.g. a group
// acting trivially: there every vertex weight is |G| even though the
// permutation image is trivial).

#include "gog/errors.hpp"
#include "gog/graph.hpp"
#include "gog/group.hpp"
#include "gog/matrix.hpp"
#include "gog/morphism.hpp"
#include "gog/quotient.hpp"
#include "gog/smith.hpp"
#include "gog/weighted.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gog {

struct CoverContext {
    HalfEdgeGraph cover;
    GraphOfGroups quotient;
    std::vector<int> vertex_proj, halfedge_proj;             // cover index -> quotient index
    std::vector<std::vector<int>> vertex_fiber, halfedge_fiber;  // quotient index -> cover indices
    Int group_order = 1;
};

namespace detail {

// Intertwining identities on the chain level, checked once per context:
// pushforward commutes with r, iota, tau, L, and pullback likewise.
inline void verify_cover_intertwining(const CoverContext& ctx) {
    const HalfEdgeGraph& xt = ctx.cover;
    const HalfEdgeGraph& xq = ctx.quotient.graph();
    for (int h = 0; h < xt.nh(); ++h) {
        int qh = ctx.halfedge_proj[h];
        if (xq.root(qh) != ctx.vertex_proj[xt.root(h)])
            throw InternalMismatch("projection does not commute with the root map");
        if (xq.involution(qh) != ctx.halfedge_proj[xt.involution(h)])
            throw InternalMismatch("projection does not commute with the involution");
    }

    // Pushforward matrices on vertices / half-edges.
    IntMatrix pv(xq.nv(), xt.nv()), ph(xq.nh(), xt.nh());
    for (int v = 0; v < xt.nv(); ++v) pv(ctx.vertex_proj[v], v) = 1;
    for (int h = 0; h < xt.nh(); ++h) ph(ctx.halfedge_proj[h], h) = 1;
    // Pullback matrices.
    IntMatrix uv(xt.nv(), xq.nv()), uh(xt.nh(), xq.nh());
    for (int v = 0; v < xt.nv(); ++v)
        uv(v, ctx.vertex_proj[v]) = ctx.quotient.c_vertex(ctx.vertex_proj[v]);
    for (int h = 0; h < xt.nh(); ++h)
        uh(h, ctx.halfedge_proj[h]) = ctx.quotient.c_halfedge(ctx.halfedge_proj[h]);

    GraphOfGroups cover_gog = GraphOfGroups::unit_weights(xt);
    IntMatrix tau_t = tau_weighted(cover_gog);
    IntMatrix tau_q = tau_weighted(ctx.quotient);
    if (ph * tau_t != tau_q * pv)
        throw InternalMismatch("pushforward does not intertwine tau");
    if (tau_t * uv != uh * tau_q)
        throw InternalMismatch("pullback does not intertwine tau");

    IntMatrix rt(xt.nv(), xt.nh()), rq(xq.nv(), xq.nh());
    IntMatrix it(xt.nh(), xt.nh()), iq(xq.nh(), xq.nh());
    for (int h = 0; h < xt.nh(); ++h) rt(xt.root(h), h) = 1, it(xt.involution(h), h) = 1;
    for (int h = 0; h < xq.nh(); ++h) rq(xq.root(h), h) = 1, iq(xq.involution(h), h) = 1;
    if (pv * rt != rq * ph) throw InternalMismatch("pushforward does not intertwine r");
    if (ph * it != iq * ph) throw InternalMismatch("pushforward does not intertwine iota");
    if (rt * uh != uv * rq) throw InternalMismatch("pullback does not intertwine r");
    if (it * uh != uh * iq) throw InternalMismatch("pullback does not intertwine iota");

    IntMatrix lt = gog_laplacian(cover_gog).L;
    IntMatrix lq = gog_laplacian(ctx.quotient).L;
    if (pv * lt != lq * pv) throw InternalMismatch("pushforward does not intertwine L");
    if (lt * uv != uv * lq) throw InternalMismatch("pullback does not intertwine L");
}

inline void verify_fiber_sizes(const CoverContext& ctx) {
    const HalfEdgeGraph& xq = ctx.quotient.graph();
    for (int qv = 0; qv < xq.nv(); ++qv)
        if (Int(ctx.vertex_fiber[qv].size()) * ctx.quotient.c_vertex(qv) != ctx.group_order)
            throw InternalMismatch("vertex fiber size violates orbit-stabilizer at '" +
                                   xq.vertex_label(qv) + "'");
    for (int qh = 0; qh < xq.nh(); ++qh)
        if (Int(ctx.halfedge_fiber[qh].size()) * ctx.quotient.c_halfedge(qh) != ctx.group_order)
            throw InternalMismatch("half-edge fiber size violates orbit-stabilizer at '" +
                                   xq.halfedge_label(qh) + "'");
}

}  // namespace detail

// Context from a group action: fibers are orbits, ordered section-first and
// then by source index.
inline CoverContext cover_context(const GraphAction& a, const QuotientData& q) {
    CoverContext ctx;
    ctx.cover = a.graph();
    ctx.quotient = q.quotient;
    ctx.vertex_proj = q.projection.vertex_map;
    ctx.halfedge_proj = q.projection.halfedge_map;
    ctx.group_order = a.order();
    ctx.vertex_fiber.resize(q.quotient.graph().nv());
    ctx.halfedge_fiber.resize(q.quotient.graph().nh());
    for (int qv = 0; qv < q.quotient.graph().nv(); ++qv)
        ctx.vertex_fiber[qv].push_back(q.vertex_section[qv]);
    for (int v = 0; v < ctx.cover.nv(); ++v)
        if (q.vertex_section[ctx.vertex_proj[v]] != v)
            ctx.vertex_fiber[ctx.vertex_proj[v]].push_back(v);
    for (int qh = 0; qh < q.quotient.graph().nh(); ++qh)
        ctx.halfedge_fiber[qh].push_back(q.halfedge_section[qh]);
    for (int h = 0; h < ctx.cover.nh(); ++h)
        if (q.halfedge_section[ctx.halfedge_proj[h]] != h)
            ctx.halfedge_fiber[ctx.halfedge_proj[h]].push_back(h);
    detail::verify_fiber_sizes(ctx);
    detail::verify_cover_intertwining(ctx);
    return ctx;
}

inline CoverContext cover_context(const GraphAction& a) {
    return cover_context(a, quotient_graph_of_groups(a));
}

// Context from voltage data: fibers are cosets in first-seen order (coset 0
// contains the identity), weights are subgroup orders.
inline CoverContext cover_context(const VoltageData& vd) {
    AssembledCover c = assemble_cover_detailed(vd);
    CoverContext ctx;
    ctx.cover = c.graph;
    std::vector<Int> c_v, c_h;
    for (const auto& s : vd.vertex_subgroup) c_v.push_back(Int(s.size()));
    for (const auto& s : vd.halfedge_subgroup) c_h.push_back(Int(s.size()));
    ctx.quotient = GraphOfGroups(vd.graph, c_v, c_h);
    ctx.group_order = vd.group.n;
    ctx.vertex_fiber = c.vertex_fiber;
    ctx.halfedge_fiber = c.halfedge_fiber;
    ctx.vertex_proj.assign(ctx.cover.nv(), -1);
    ctx.halfedge_proj.assign(ctx.cover.nh(), -1);
    for (int qv = 0; qv < vd.graph.nv(); ++qv)
        for (int v : c.vertex_fiber[qv]) ctx.vertex_proj[v] = qv;
    for (int qh = 0; qh < vd.graph.nh(); ++qh)
        for (int h : c.halfedge_fiber[qh]) ctx.halfedge_proj[h] = qh;
    detail::verify_fiber_sizes(ctx);
    detail::verify_cover_intertwining(ctx);
    return ctx;
}

// ---------------------------------------------------------------------------
// Divisor-level maps.

inline IntDivisor pushforward_divisor(const CoverContext& ctx, const IntDivisor& d) {
    IntDivisor out;
    for (const auto& [label, a] : d.coefficients)
        out.add(ctx.quotient.graph().vertex_label(ctx.vertex_proj[ctx.cover.vertex_index(label)]),
                a);
    return out;
}

inline IntDivisor pullback_divisor(const CoverContext& ctx, const IntDivisor& d) {
    IntDivisor out;
    for (const auto& [label, a] : d.coefficients) {
        int qv = ctx.quotient.graph().vertex_index(label);
        for (int v : ctx.vertex_fiber[qv])
            out.add(ctx.cover.vertex_label(v), a * ctx.quotient.c_vertex(qv));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Invariant-factor presentation of a Jacobian, with divisor <-> coordinate
// conversion through the Smith transforms of the reduced Laplacian.

class JacobianPresentation {
  public:
    explicit JacobianPresentation(const GraphOfGroups& x) : gog_(x) {
        if (!x.graph().connected())
            throw DisconnectedGraph("Jacobian presentation requires a connected graph");
        const int n = x.graph().nv();
        snf_ = smith_normal_form(reduced_laplacian_rows(x));
        if (static_cast<int>(snf_.rank) != n - 1)
            throw InternalMismatch("reduced Laplacian is rank-deficient");
        for (int k = 0; k + 1 < n; ++k)
            if (snf_.D(k, k) >= 2) {
                factor_positions_.push_back(k);
                group_.invariant_factors.push_back(snf_.D(k, k));
            }
        // Round-trip sanity: the coordinates of each generator lift are e_i.
        for (std::size_t i = 0; i < factor_positions_.size(); ++i) {
            std::vector<Int> coords = reduce(generator_lift(static_cast<int>(i)).to_vector(x.graph()));
            for (std::size_t j = 0; j < coords.size(); ++j)
                if (coords[j] != (i == j ? 1 : 0))
                    throw PresentationSolveFailure("generator lift does not reduce to a unit");
        }
    }

    const FiniteAbelianGroup& group() const { return group_; }
    int n_factors() const { return static_cast<int>(factor_positions_.size()); }
    const GraphOfGroups& gog() const { return gog_; }

    // Coordinates of a degree-zero divisor (given as a full coefficient
    // vector) in the invariant-factor presentation, each in [0, d).
    std::vector<Int> reduce(const std::vector<Int>& dv) const {
        const int n = gog_.graph().nv();
        Int deg = 0;
        for (const Int& a : dv) deg += a;
        if (deg != 0) throw PresentationSolveFailure("divisor has nonzero degree");
        std::vector<Int> coords;
        for (std::size_t idx = 0; idx < factor_positions_.size(); ++idx) {
            int k = factor_positions_[idx];
            Int y = 0;
            for (int j = 0; j + 1 < n; ++j) y += snf_.U(k, j) * dv[j];
            const Int& d = group_.invariant_factors[idx];
            Int m = y % d;
            if (m < 0) m += d;
            coords.push_back(m);
        }
        return coords;
    }
    std::vector<Int> reduce(const IntDivisor& d) const { return reduce(d.to_vector(gog_.graph())); }

    // A degree-zero divisor representing generator i.
    IntDivisor generator_lift(int i) const {
        const int n = gog_.graph().nv();
        int k = factor_positions_[i];
        std::vector<Int> dv(n, Int(0));
        Int sum = 0;
        for (int j = 0; j + 1 < n; ++j) {
            dv[j] = snf_.Uinv(j, k);
            sum += dv[j];
        }
        dv[n - 1] = -sum;
        return IntDivisor::from_vector(gog_.graph(), dv);
    }

  private:
    GraphOfGroups gog_;
    SnfResult snf_;
    FiniteAbelianGroup group_;
    std::vector<int> factor_positions_;
};

// ---------------------------------------------------------------------------
// Induced maps on Jacobians.

struct InducedJacobianMaps {
    FiniteAbelianGroup jac_cover, jac_quotient;
    IntMatrix push_matrix;  // (quotient factors) x (cover factors)
    IntMatrix pull_matrix;  // (cover factors) x (quotient factors)
    bool push_surjective = false;
};

namespace detail {

// Is the map given by column images `m` into Z^q / diag(d) surjective?
inline bool presentation_map_surjective(const IntMatrix& m, const std::vector<Int>& d) {
    IntMatrix aug(m.rows(), m.cols() + d.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    for (std::size_t k = 0; k < d.size(); ++k) aug(k, m.cols() + k) = d[k];
    CokernelResult c = cokernel(aug);
    return c.group.trivial() && c.free_rank == 0;
}

}  // namespace detail

inline InducedJacobianMaps induced_jacobian_maps(const CoverContext& ctx) {
    JacobianPresentation jc(GraphOfGroups::unit_weights(ctx.cover));
    JacobianPresentation jq(ctx.quotient);
    InducedJacobianMaps out;
    out.jac_cover = jc.group();
    out.jac_quotient = jq.group();

    out.push_matrix = IntMatrix(jq.n_factors(), jc.n_factors());
    for (int i = 0; i < jc.n_factors(); ++i) {
        std::vector<Int> col = jq.reduce(pushforward_divisor(ctx, jc.generator_lift(i)));
        for (int k = 0; k < jq.n_factors(); ++k) out.push_matrix(k, i) = col[k];
    }
    out.pull_matrix = IntMatrix(jc.n_factors(), jq.n_factors());
    for (int j = 0; j < jq.n_factors(); ++j) {
        std::vector<Int> col = jc.reduce(pullback_divisor(ctx, jq.generator_lift(j)));
        for (int k = 0; k < jc.n_factors(); ++k) out.pull_matrix(k, j) = col[k];
    }

    out.push_surjective =
        detail::presentation_map_surjective(out.push_matrix, jq.group().invariant_factors);
    if (!out.push_surjective)
        throw PresentationSolveFailure("induced pushforward on Jacobians is not surjective");

    // push(pull(x)) = |G| x on every quotient generator.
    for (int j = 0; j < jq.n_factors(); ++j) {
        IntDivisor lift = jq.generator_lift(j);
        std::vector<Int> lhs = jq.reduce(pushforward_divisor(ctx, pullback_divisor(ctx, lift)));
        std::vector<Int> rhs = jq.reduce((lift * ctx.group_order).to_vector(ctx.quotient.graph()));
        if (lhs != rhs)
            throw PresentationSolveFailure("push o pull differs from multiplication by |G|");
    }
    return out;
}

// Kernel of the induced pushforward, as an abstract finite abelian group:
// solutions of push_matrix * x = 0 in Z^s/diag(d_cover) modulo the relations.
inline FiniteAbelianGroup kernel_of_pushforward(const InducedJacobianMaps& maps) {
    const std::size_t s = maps.push_matrix.cols();
    const std::size_t q = maps.push_matrix.rows();
    // Solution lattice of push(x) = 0 mod d_quotient: x-part of the kernel of
    // [M | diag(d_quotient)].
    IntMatrix aug(q, s + q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < s; ++j) aug(i, j) = maps.push_matrix(i, j);
    for (std::size_t k = 0; k < q; ++k) aug(k, s + k) = maps.jac_quotient.invariant_factors[k];
    IntMatrix ker = integer_kernel_basis(aug);
    IntMatrix sol(s, ker.cols());
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < ker.cols(); ++j) sol(i, j) = ker(i, j);
    IntMatrix rel(s, s);
    for (std::size_t k = 0; k < s; ++k) rel(k, k) = maps.jac_cover.invariant_factors[k];
    if (s == 0) return FiniteAbelianGroup{};
    return lattice_quotient(sol, rel);
}

// ---------------------------------------------------------------------------
// Voltage Jacobian: the Laplacian restricted to the fiberwise degree-zero
// sublattices V0 and H0.

struct VoltageKernelData {
    // Basis vectors: (member, base) pairs of cover indices meaning
    // member - base, where base is the first fiber element.
    std::vector<std::pair<int, int>> v0_basis, h0_basis;
    IntMatrix r0, iota0, tau0, boundary0, L0;  // boundary0 = r0 (Id - iota0)
};

inline VoltageKernelData voltage_kernel_data(const CoverContext& ctx) {
    const HalfEdgeGraph& xt = ctx.cover;
    const HalfEdgeGraph& xq = ctx.quotient.graph();
    VoltageKernelData out;
    // Position of each cover vertex/half-edge in the V0/H0 coordinate list
    // (-1 for fiber base points).
    std::vector<int> vpos(xt.nv(), -1), hpos(xt.nh(), -1);
    for (int qv = 0; qv < xq.nv(); ++qv)
        for (std::size_t k = 1; k < ctx.vertex_fiber[qv].size(); ++k) {
            vpos[ctx.vertex_fiber[qv][k]] = static_cast<int>(out.v0_basis.size());
            out.v0_basis.emplace_back(ctx.vertex_fiber[qv][k], ctx.vertex_fiber[qv][0]);
        }
    for (int qh = 0; qh < xq.nh(); ++qh)
        for (std::size_t k = 1; k < ctx.halfedge_fiber[qh].size(); ++k) {
            hpos[ctx.halfedge_fiber[qh][k]] = static_cast<int>(out.h0_basis.size());
            out.h0_basis.emplace_back(ctx.halfedge_fiber[qh][k], ctx.halfedge_fiber[qh][0]);
        }
    const std::size_t nv0 = out.v0_basis.size(), nh0 = out.h0_basis.size();

    // Express the image of each basis vector in the target basis.  For a
    // fiberwise degree-zero vector x, the coefficient of (member - base) is
    // x(member).
    auto h_coords = [&](const std::vector<Int>& x) {
        std::vector<Int> c(nh0, Int(0));
        for (int h = 0; h < xt.nh(); ++h)
            if (hpos[h] != -1) c[hpos[h]] = x[h];
        return c;
    };
    auto v_coords = [&](const std::vector<Int>& x) {
        std::vector<Int> c(nv0, Int(0));
        for (int v = 0; v < xt.nv(); ++v)
            if (vpos[v] != -1) c[vpos[v]] = x[v];
        return c;
    };

    out.tau0 = IntMatrix(nh0, nv0);
    for (std::size_t j = 0; j < nv0; ++j) {
        std::vector<Int> img(xt.nh(), Int(0));
        for (int h : xt.tangent(out.v0_basis[j].first)) img[h] += 1;
        for (int h : xt.tangent(out.v0_basis[j].second)) img[h] -= 1;
        std::vector<Int> c = h_coords(img);
        for (std::size_t i = 0; i < nh0; ++i) out.tau0(i, j) = c[i];
    }
    out.iota0 = IntMatrix(nh0, nh0);
    for (std::size_t j = 0; j < nh0; ++j) {
        std::vector<Int> img(xt.nh(), Int(0));
        img[xt.involution(out.h0_basis[j].first)] += 1;
        img[xt.involution(out.h0_basis[j].second)] -= 1;
        std::vector<Int> c = h_coords(img);
        for (std::size_t i = 0; i < nh0; ++i) out.iota0(i, j) = c[i];
    }
    out.r0 = IntMatrix(nv0, nh0);
    for (std::size_t j = 0; j < nh0; ++j) {
        std::vector<Int> img(xt.nv(), Int(0));
        img[xt.root(out.h0_basis[j].first)] += 1;
        img[xt.root(out.h0_basis[j].second)] -= 1;
        std::vector<Int> c = v_coords(img);
        for (std::size_t i = 0; i < nv0; ++i) out.r0(i, j) = c[i];
    }
    out.boundary0 = out.r0 * (IntMatrix::identity(nh0) - out.iota0);
    out.L0 = out.boundary0 * out.tau0;

    // Consistency: L0 must be the restriction of the cover Laplacian to V0.
    IntMatrix lt = gog_laplacian(GraphOfGroups::unit_weights(xt)).L;
    for (std::size_t j = 0; j < nv0; ++j) {
        std::vector<Int> img(xt.nv(), Int(0));
        for (int v = 0; v < xt.nv(); ++v)
            img[v] = lt(v, out.v0_basis[j].first) - lt(v, out.v0_basis[j].second);
        std::vector<Int> c = v_coords(img);
        for (std::size_t i = 0; i < nv0; ++i)
            if (out.L0(i, j) != c[i])
                throw InternalMismatch("L0 is not the restriction of the cover Laplacian");
    }
    return out;
}

// The voltage Jacobian of a cover: the kernel of the induced pushforward
// p_* : Jac(cover) -> Jac(quotient), presented as a lattice quotient of V0.
//
// Every kernel class has a representative in V0: if p_*(d) = L_quot(y), pick
// a set-theoretic section s of p_* and subtract L_cover(s(y)) from d.  Hence
// Ker p_* = V0 / (V0 ∩ Im L_cover).  For a connected quotient the right
// kernel of the weighted Laplacian is generated by kappa(v) = lcm(c) / c(v),
// and p_* L_cover = L_quot p_*, so
//
//     V0 ∩ Im L_cover = Im L0 + Z * L_cover(x_kappa)
//
// for any integer preimage x_kappa of kappa.  The lattice quotient
// Im(r0 (Id - iota0)) / Im L0 built from the descended boundary maps has the
// same order for free actions and for all order-two actions, but is strictly
// larger for some non-free actions of composite order; the kernel
// presentation satisfies |Jac0| * |Jac(quotient)| = |Jac(cover)|
// unconditionally, because the induced pushforward is surjective.
inline std::pair<IntMatrix, FiniteAbelianGroup> voltage_jacobian(const CoverContext& ctx) {
    if (!ctx.cover.connected())
        throw DisconnectedGraph("voltage_jacobian requires a connected cover");
    VoltageKernelData vk = voltage_kernel_data(ctx);
    const std::size_t nv0 = vk.v0_basis.size();
    FiniteAbelianGroup jac0;
    if (nv0 == 0) {
        jac0 = FiniteAbelianGroup{};
    } else {
        IntMatrix lt = gog_laplacian(GraphOfGroups::unit_weights(ctx.cover)).L;
        const Int lc = ctx.quotient.c_lcm();
        std::vector<Int> x(ctx.cover.nv(), Int(0));
        for (int qv = 0; qv < ctx.quotient.graph().nv(); ++qv)
            x[ctx.vertex_fiber[qv][0]] = lc / ctx.quotient.c_vertex(qv);
        std::vector<Int> w(ctx.cover.nv(), Int(0));
        for (int i = 0; i < ctx.cover.nv(); ++i)
            for (int j = 0; j < ctx.cover.nv(); ++j) w[i] += lt(i, j) * x[j];
        for (int qv = 0; qv < ctx.quotient.graph().nv(); ++qv) {
            Int s = 0;
            for (int cv : ctx.vertex_fiber[qv]) s += w[cv];
            if (s != 0)
                throw InternalMismatch("L_cover(x_kappa) is not fiberwise degree zero");
        }
        IntMatrix rel(nv0, nv0 + 1);
        for (std::size_t i = 0; i < nv0; ++i) {
            for (std::size_t j = 0; j < nv0; ++j) rel(i, j) = vk.L0(i, j);
            rel(i, nv0) = w[vk.v0_basis[i].first];
        }
        jac0 = lattice_quotient(IntMatrix::identity(nv0), rel);
    }
    Int cover_order = jacobian_structure(GraphOfGroups::unit_weights(ctx.cover)).order();
    Int quot_order = jacobian_structure(ctx.quotient).order();
    if (jac0.order() * quot_order != cover_order)
        throw OrderIdentityViolation("|Jac0| * |Jac(quotient)| = " +
                                     (jac0.order() * quot_order).str() + " but |Jac(cover)| = " +
                                     cover_order.str());
    return {vk.L0, jac0};
}

}  // namespace gog
