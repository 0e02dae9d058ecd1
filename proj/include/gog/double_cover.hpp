#pragma once

// Z/2Z quotients (double covers): dilation classification, the free graph
// X_fr with null legs, the parity assignment, the explicit voltage-Laplacian
// matrix, ogod enumeration, and the ogod matrix-tree identity
//     sum over ogods B of w(B)  =  det L0.
//
// Terminology: a quotient vertex/half-edge is dilated when it has a single
// preimage (weight 2) and undilated when it has two (weight 1).  The free
// graph keeps the undilated vertices; an undilated edge with one dilated
// endpoint loses that endpoint and becomes a null leg (parity 0).

#include "gog/cover.hpp"
#include "gog/errors.hpp"
#include "gog/graph.hpp"
#include "gog/group.hpp"
#include "gog/matrix.hpp"
#include "gog/quotient.hpp"
#include "gog/weighted.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gog {

struct DoubleCoverAnalysis {
    CoverContext ctx;
    std::vector<bool> vertex_dilated;     // per quotient vertex
    std::vector<bool> halfedge_dilated;   // per quotient half-edge
    std::vector<int> undilated_vertices;  // quotient vertex indices, in order
    std::vector<int> vplus, vminus;       // cover preimages per quotient vertex
                                          // (vminus = -1 on dilated vertices)
    HalfEdgeGraph free_graph;
    std::vector<int> fr_vertex_of;             // quotient vertex -> fr vertex (-1 if dropped)
    std::vector<int> fr_halfedge_to_quotient;  // fr half-edge -> quotient half-edge
    std::vector<int> parity;      // per fr half-edge: +1 even, -1 odd, 0 null leg
    std::vector<int> edge_parity; // per quotient edge index: +-1 for edges with
                                  // both roots undilated, else 0
    std::vector<int> leg_parity;  // per quotient half-edge: +-1 for legs at
                                  // undilated vertices, else 0
    bool free_cover = false;      // no dilated vertices and no dilated half-edges
};

// ---------------------------------------------------------------------------
// Classification.  The +/- labeling takes the lexicographically least
// preimage as "+"; `flip_vertices` (quotient vertex indices) swaps the
// labeling there, which changes the parity assignment by a coboundary and
// must leave every derived quantity invariant.

inline DoubleCoverAnalysis analyze_double_cover(const GraphAction& a,
                                                const std::vector<int>& flip_vertices = {}) {
    if (a.order() != 2)
        throw NotOrderTwo("analyze_double_cover requires a group of order 2, got " +
                          std::to_string(a.order()));
    DoubleCoverAnalysis d;
    d.ctx = cover_context(a);
    const HalfEdgeGraph& xq = d.ctx.quotient.graph();
    const HalfEdgeGraph& xt = d.ctx.cover;

    d.vertex_dilated.assign(xq.nv(), false);
    d.vplus.assign(xq.nv(), -1);
    d.vminus.assign(xq.nv(), -1);
    for (int qv = 0; qv < xq.nv(); ++qv) {
        const std::vector<int>& fiber = d.ctx.vertex_fiber[qv];
        if (fiber.size() == 1) {
            d.vertex_dilated[qv] = true;
            d.vplus[qv] = fiber[0];
        } else {
            d.vplus[qv] = fiber[0];
            d.vminus[qv] = fiber[1];
            if (std::find(flip_vertices.begin(), flip_vertices.end(), qv) != flip_vertices.end())
                std::swap(d.vplus[qv], d.vminus[qv]);
            d.undilated_vertices.push_back(qv);
        }
    }
    d.halfedge_dilated.assign(xq.nh(), false);
    for (int qh = 0; qh < xq.nh(); ++qh) {
        d.halfedge_dilated[qh] = (d.ctx.quotient.c_halfedge(qh) == 2);
        if (d.halfedge_dilated[qh] && !d.vertex_dilated[xq.root(qh)])
            throw InternalMismatch("dilated half-edge rooted at an undilated vertex");
    }
    d.free_cover = d.undilated_vertices.size() == static_cast<std::size_t>(xq.nv()) &&
                   std::none_of(d.halfedge_dilated.begin(), d.halfedge_dilated.end(),
                                [](bool b) { return b; });

    // The preimage of an undilated half-edge rooted at an undilated vertex v
    // that is itself rooted at vplus(v).
    auto lift_at_plus = [&](int qh) {
        for (int h : d.ctx.halfedge_fiber[qh])
            if (xt.root(h) == d.vplus[xq.root(qh)]) return h;
        throw InternalMismatch("no preimage rooted at the + vertex");
    };

    // Parity of quotient edges with both roots undilated: even (+1) when the
    // lift at + partners to the + side.
    const auto& qedges = xq.edges();
    d.edge_parity.assign(qedges.size(), 0);
    for (std::size_t e = 0; e < qedges.size(); ++e) {
        int h1 = qedges[e].h1, h2 = qedges[e].h2;
        if (d.halfedge_dilated[h1]) continue;
        if (d.vertex_dilated[xq.root(h1)] || d.vertex_dilated[xq.root(h2)]) continue;
        int partner = xt.involution(lift_at_plus(h1));
        d.edge_parity[e] = (xt.root(partner) == d.vplus[xq.root(h2)]) ? +1 : -1;
    }
    // Parity of quotient legs at undilated vertices: even when the preimage
    // is a pair of legs, odd when it is a single folded edge.
    d.leg_parity.assign(xq.nh(), 0);
    for (int qh : xq.legs()) {
        if (d.vertex_dilated[xq.root(qh)] || d.halfedge_dilated[qh]) continue;
        const std::vector<int>& fiber = d.ctx.halfedge_fiber[qh];
        if (xt.is_leg(fiber[0])) {
            if (!xt.is_leg(fiber[1]))
                throw InternalMismatch("leg preimages disagree about being legs");
            d.leg_parity[qh] = +1;
        } else {
            if (xt.involution(fiber[0]) != fiber[1])
                throw InternalMismatch("folded leg preimages are not partners");
            d.leg_parity[qh] = -1;
        }
    }

    // Free graph: undilated vertices; half-edges rooted at them (all of
    // weight 1 since c(h) | c(v) = 1), with edges into dilated vertices
    // truncated to null legs.
    std::vector<int> edge_index_of(xq.nh(), -1);
    for (std::size_t e = 0; e < qedges.size(); ++e)
        edge_index_of[qedges[e].h1] = edge_index_of[qedges[e].h2] = static_cast<int>(e);

    d.fr_vertex_of.assign(xq.nv(), -1);
    std::vector<std::string> vlabels, hlabels;
    for (int qv : d.undilated_vertices) {
        d.fr_vertex_of[qv] = static_cast<int>(vlabels.size());
        vlabels.push_back(xq.vertex_label(qv));
    }
    std::vector<int> fr_of_qh(xq.nh(), -1);
    std::vector<int> fr_root;
    for (int qh = 0; qh < xq.nh(); ++qh) {
        if (d.vertex_dilated[xq.root(qh)]) continue;
        fr_of_qh[qh] = static_cast<int>(hlabels.size());
        d.fr_halfedge_to_quotient.push_back(qh);
        hlabels.push_back(xq.halfedge_label(qh));
        fr_root.push_back(d.fr_vertex_of[xq.root(qh)]);
    }
    std::vector<int> fr_inv(hlabels.size(), -1);
    d.parity.assign(hlabels.size(), 0);
    for (std::size_t fh = 0; fh < hlabels.size(); ++fh) {
        int qh = d.fr_halfedge_to_quotient[fh];
        int qp = xq.involution(qh);
        if (qh == qp) {  // quotient leg: even or odd leg of the free graph
            fr_inv[fh] = static_cast<int>(fh);
            d.parity[fh] = d.leg_parity[qh];
            if (d.parity[fh] == 0) throw InternalMismatch("leg at undilated vertex has no parity");
        } else if (d.vertex_dilated[xq.root(qp)]) {  // truncated: null leg
            fr_inv[fh] = static_cast<int>(fh);
            d.parity[fh] = 0;
        } else {
            fr_inv[fh] = fr_of_qh[qp];
            d.parity[fh] = d.edge_parity[edge_index_of[qh]];
            if (d.parity[fh] == 0) throw InternalMismatch("free edge has no parity");
        }
    }
    d.free_graph = HalfEdgeGraph::from_indices(vlabels, hlabels, fr_root, fr_inv);
    return d;
}

// ---------------------------------------------------------------------------
// The voltage Laplacian in the free-graph basis, three ways: the explicit
// case formula; the composite r_fr (Id - P_eps) tau_fr with the involution
// twisted by the parity; and the restriction of the cover Laplacian computed
// by the cover-maps machinery.  All three must agree entry-by-entry.

inline IntMatrix voltage_laplacian_explicit(const DoubleCoverAnalysis& d) {
    const HalfEdgeGraph& fr = d.free_graph;
    const int n = fr.nv();
    IntMatrix m(n, n);
    for (int v = 0; v < n; ++v) {
        for (int h : fr.tangent(v)) {
            if (fr.is_leg(h)) {
                if (d.parity[h] == 0) m(v, v) += 1;        // null leg
                else if (d.parity[h] == -1) m(v, v) += 2;  // odd leg
                continue;                                  // even legs contribute 0
            }
            int w = fr.root(fr.involution(h));
            if (w == v) {  // loop half: odd loops contribute 2 per half
                if (d.parity[h] == -1) m(v, v) += 2;
                continue;
            }
            m(v, v) += 1;
            m(w, v) += (d.parity[h] == -1) ? 1 : -1;  // #odd - #even
        }
    }

    // Independent route: twisted composition over the free graph.
    const int nh = fr.nh();
    IntMatrix r(n, nh), peps(nh, nh), tau(nh, n);
    for (int h = 0; h < nh; ++h) {
        r(fr.root(h), h) = 1;
        tau(h, fr.root(h)) = 1;
        peps(fr.involution(h), h) = d.parity[h];
    }
    IntMatrix twisted = r * (IntMatrix::identity(nh) - peps) * tau;
    if (twisted != m)
        throw InternalMismatch("explicit voltage Laplacian differs from the twisted composition");

    // Third route: restriction of the cover Laplacian to the fiberwise
    // degree-zero sublattice.  The kernel-data basis at an undilated vertex
    // is fiber[1] - fiber[0], which is vminus - vplus for the default
    // labeling; a flipped vertex reverses that sign, so the two matrices
    // agree after conjugating by the diagonal of flip signs (determinants
    // and all gauge-invariant quantities are unaffected).
    IntMatrix l0 = voltage_kernel_data(d.ctx).L0;
    std::vector<int> sign(n, 1);
    for (std::size_t i = 0; i < d.undilated_vertices.size(); ++i) {
        int qv = d.undilated_vertices[i];
        if (d.vplus[qv] != d.ctx.vertex_fiber[qv][0]) sign[i] = -1;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (l0(i, j) * sign[i] * sign[j] != m(i, j))
                throw InternalMismatch("explicit voltage Laplacian differs from the cover-maps L0");
    return m;
}

// ---------------------------------------------------------------------------
// Ogod enumeration.  Candidates are all undilated edges plus all odd legs;
// an ogod is an n-subset (n = #undilated vertices) whose components, over the
// full quotient vertex set, are each (1) a tree containing exactly one
// dilated vertex and no legs (weight 1), (2) a tree of undilated vertices
// with exactly one odd leg (weight 2), or (3) a unicyclic graph of undilated
// vertices, no legs, with an odd number of odd edges on its cycle (weight 4).

struct OgodElement {
    bool is_leg = false;
    int edge_index = -1;  // into quotient edges() when an edge
    int halfedge = -1;    // leg half-edge when a leg, else first half
    int parity = 0;
    std::string name;
};

struct OgodComponent {
    std::vector<int> vertices;  // quotient vertex indices, sorted
    int type = 0;               // 1, 2, 3 per the case list
    Int weight = 0;
};

struct OgodCertificate {
    std::vector<int> elements;  // candidate indices, increasing
    std::vector<OgodComponent> components;
    Int weight = 1;
};

struct OgodEnumeration {
    std::vector<OgodElement> candidates;
    std::vector<OgodCertificate> ogods;
    Int total_weight = 0;
    int subset_size = 0;  // #undilated vertices
};

inline std::vector<OgodElement> ogod_candidates(const DoubleCoverAnalysis& d) {
    const HalfEdgeGraph& xq = d.ctx.quotient.graph();
    std::vector<OgodElement> out;
    const auto& qedges = xq.edges();
    for (std::size_t e = 0; e < qedges.size(); ++e) {
        if (d.halfedge_dilated[qedges[e].h1]) continue;
        OgodElement el;
        el.is_leg = false;
        el.edge_index = static_cast<int>(e);
        el.halfedge = qedges[e].h1;
        el.parity = d.edge_parity[e];
        el.name = xq.edge_name(qedges[e]);
        out.push_back(std::move(el));
    }
    for (int qh : xq.legs()) {
        if (d.leg_parity[qh] != -1) continue;  // only odd legs
        OgodElement el;
        el.is_leg = true;
        el.halfedge = qh;
        el.parity = -1;
        el.name = xq.halfedge_label(qh);
        out.push_back(std::move(el));
    }
    return out;
}

namespace detail {

struct MiniUnionFind {
    std::vector<int> parent;
    explicit MiniUnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Does the preimage of the given cycle (quotient edge indices) form a
// connected subgraph of the cover?  Cross-checks the odd-edge-count parity
// criterion.
inline bool cycle_preimage_connected(const DoubleCoverAnalysis& d,
                                     const std::vector<int>& cycle_edges) {
    const HalfEdgeGraph& xt = d.ctx.cover;
    const HalfEdgeGraph& xq = d.ctx.quotient.graph();
    MiniUnionFind uf(xt.nv());
    std::vector<int> verts;
    for (int e : cycle_edges) {
        int qh = xq.edges()[e].h1;
        for (int h : d.ctx.halfedge_fiber[qh]) {
            uf.unite(xt.root(h), xt.root(xt.involution(h)));
            verts.push_back(xt.root(h));
        }
    }
    for (std::size_t i = 1; i < verts.size(); ++i)
        if (uf.find(verts[i]) != uf.find(verts[0])) return false;
    return true;
}

}  // namespace detail

// Classify one subset of candidates; returns the certificate when it is an
// ogod.  Components are reported only when they contain a subset element
// (isolated dilated vertices are valid and weightless; isolated undilated
// vertices invalidate the subset).
inline std::optional<OgodCertificate> classify_ogod_subset(const DoubleCoverAnalysis& d,
                                                           const std::vector<OgodElement>& cand,
                                                           const std::vector<int>& subset) {
    const HalfEdgeGraph& xq = d.ctx.quotient.graph();
    const int nq = xq.nv();
    detail::MiniUnionFind uf(nq);
    for (int ci : subset) {
        const OgodElement& el = cand[ci];
        if (!el.is_leg) {
            const Edge& e = xq.edges()[el.edge_index];
            uf.unite(xq.root(e.h1), xq.root(e.h2));
        }
    }
    // Per-component tallies.
    std::map<int, std::vector<int>> comp_vertices;
    for (int v = 0; v < nq; ++v) comp_vertices[uf.find(v)].push_back(v);
    std::map<int, std::vector<int>> comp_edges, comp_legs;  // candidate indices
    for (int ci : subset) {
        const OgodElement& el = cand[ci];
        int at = uf.find(xq.root(el.halfedge));
        (el.is_leg ? comp_legs : comp_edges)[at].push_back(ci);
    }

    OgodCertificate cert;
    cert.elements = subset;
    for (const auto& [root, vs] : comp_vertices) {
        int n_dilated = 0;
        for (int v : vs)
            if (d.vertex_dilated[v]) ++n_dilated;
        const auto eit = comp_edges.find(root);
        const auto lit = comp_legs.find(root);
        const int ne = eit == comp_edges.end() ? 0 : static_cast<int>(eit->second.size());
        const int nl = lit == comp_legs.end() ? 0 : static_cast<int>(lit->second.size());
        const int nv = static_cast<int>(vs.size());
        if (ne == 0 && nl == 0) {
            if (nv == 1 && n_dilated == 1) continue;  // isolated dilated vertex: fine
            return std::nullopt;                      // isolated undilated vertex
        }
        OgodComponent comp;
        comp.vertices = vs;
        if (ne == nv - 1) {  // tree
            if (n_dilated == 1 && nl == 0) {
                comp.type = 1;
                comp.weight = 1;
            } else if (n_dilated == 0 && nl == 1) {
                comp.type = 2;
                comp.weight = 2;
            } else {
                return std::nullopt;
            }
        } else if (ne == nv) {  // exactly one cycle
            if (n_dilated != 0 || nl != 0) return std::nullopt;
            // Strip leaves to expose the cycle.
            std::map<int, int> deg;
            for (int v : vs) deg[v] = 0;
            std::vector<char> on_cycle(eit->second.size(), 1);
            auto endpoints = [&](int ci) {
                const Edge& e = xq.edges()[cand[ci].edge_index];
                return std::pair<int, int>(xq.root(e.h1), xq.root(e.h2));
            };
            for (int ci : eit->second) {
                auto [a, b] = endpoints(ci);
                deg[a] += 1;
                deg[b] += 1;
            }
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t k = 0; k < eit->second.size(); ++k) {
                    if (!on_cycle[k]) continue;
                    auto [a, b] = endpoints(eit->second[k]);
                    if ((deg[a] == 1) || (deg[b] == 1)) {
                        on_cycle[k] = 0;
                        deg[a] -= 1;
                        deg[b] -= 1;
                        changed = true;
                    }
                }
            }
            int odd_on_cycle = 0;
            std::vector<int> cycle_edges;
            for (std::size_t k = 0; k < eit->second.size(); ++k)
                if (on_cycle[k]) {
                    cycle_edges.push_back(cand[eit->second[k]].edge_index);
                    if (cand[eit->second[k]].parity == -1) ++odd_on_cycle;
                }
            bool odd = (odd_on_cycle % 2 == 1);
            if (odd != detail::cycle_preimage_connected(d, cycle_edges))
                throw InternalMismatch(
                    "cycle parity criterion disagrees with preimage connectivity");
            if (!odd) return std::nullopt;
            comp.type = 3;
            comp.weight = 4;
        } else {
            return std::nullopt;  // more than one independent cycle
        }
        cert.weight *= comp.weight;
        cert.components.push_back(std::move(comp));
    }
    return cert;
}

inline OgodEnumeration enumerate_ogods(const DoubleCoverAnalysis& d) {
    OgodEnumeration out;
    out.candidates = ogod_candidates(d);
    out.subset_size = static_cast<int>(d.undilated_vertices.size());
    const int m = static_cast<int>(out.candidates.size());
    const int n = out.subset_size;
    if (n > m) return out;
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        if (auto cert = classify_ogod_subset(d, out.candidates, idx)) {
            out.total_weight += cert->weight;
            out.ogods.push_back(std::move(*cert));
        }
        // next combination
        int k = n - 1;
        while (k >= 0 && idx[k] == m - n + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// The matrix-tree identity for ogods, and the Cauchy-Binet cross-check.

struct KirchhoffReport {
    Int total_weight = 0;   // sum of ogod weights
    Int det_l0 = 0;         // det of the explicit voltage Laplacian
    Int jac0_order = 0;     // |Jac0|
    Int jac_ratio = 0;      // |Jac(cover)| / |Jac(quotient)|
    bool free_cover = false;
    int n_ogods = 0;
};

inline KirchhoffReport kirchhoff_ogod_check(const DoubleCoverAnalysis& d) {
    KirchhoffReport rep;
    rep.free_cover = d.free_cover;
    OgodEnumeration en = enumerate_ogods(d);
    rep.n_ogods = static_cast<int>(en.ogods.size());
    rep.total_weight = en.total_weight;
    rep.det_l0 = determinant(voltage_laplacian_explicit(d));
    rep.jac0_order = voltage_jacobian(d.ctx).second.order();
    Int cover_order = jacobian_structure(GraphOfGroups::unit_weights(d.ctx.cover)).order();
    Int quot_order = jacobian_structure(d.ctx.quotient).order();
    rep.jac_ratio = cover_order / quot_order;
    if (rep.total_weight != rep.det_l0)
        throw MismatchReport("ogod total " + rep.total_weight.str() + " != det L0 = " +
                             rep.det_l0.str());
    if (d.free_cover) {
        // Free covers: the degree-zero boundary has index 2 in V0, so the
        // determinant is twice the voltage Jacobian order.
        if (rep.det_l0 != 2 * rep.jac0_order)
            throw MismatchReport("free cover: det L0 = " + rep.det_l0.str() + " != 2|Jac0| = " +
                                 Int(2 * rep.jac0_order).str());
    } else {
        if (rep.det_l0 != rep.jac0_order)
            throw MismatchReport("det L0 = " + rep.det_l0.str() + " != |Jac0| = " +
                                 rep.jac0_order.str());
    }
    if (rep.jac0_order != rep.jac_ratio)
        throw MismatchReport("|Jac0| = " + rep.jac0_order.str() + " != |Jac(cover)|/|Jac(quotient)| = " +
                             rep.jac_ratio.str());
    return rep;
}

// Cauchy-Binet: with D = r_fr (Id - P_eps) and T = tau_fr, the sum of
// det D|_S det T|_S over all n-subsets S of free half-edges equals det L0.
inline Int cauchy_binet_check(const DoubleCoverAnalysis& d) {
    const HalfEdgeGraph& fr = d.free_graph;
    const int n = fr.nv(), m = fr.nh();
    IntMatrix r(n, m), peps(m, m), tau(m, n);
    for (int h = 0; h < m; ++h) {
        r(fr.root(h), h) = 1;
        tau(h, fr.root(h)) = 1;
        peps(fr.involution(h), h) = d.parity[h];
    }
    IntMatrix dd = r * (IntMatrix::identity(m) - peps);
    IntMatrix l0 = dd * tau;
    Int sum = 0;
    if (n > m) {
        if (determinant(l0) != 0)
            throw InternalMismatch("Cauchy-Binet: fewer half-edges than vertices but det != 0");
        return 0;
    }
    std::vector<std::size_t> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        sum += determinant(dd.select_columns(idx)) * determinant(tau.select_rows(idx));
        int k = n - 1;
        while (k >= 0 && idx[k] == static_cast<std::size_t>(m - n + k)) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (sum != determinant(l0))
        throw InternalMismatch("Cauchy-Binet sum " + sum.str() + " != det L0 = " +
                               determinant(l0).str());
    return sum;
}

// ---------------------------------------------------------------------------
// Ogod symmetry classes under a supplied group of quotient-graph
// automorphisms.

struct OgodSymmetryClass {
    std::vector<int> representative;  // candidate indices of the least member
    int size = 0;                     // number of ogods in the class
    Int weight = 0;
};

inline std::vector<OgodSymmetryClass> ogod_symmetry_classes(const DoubleCoverAnalysis& d,
                                                            const OgodEnumeration& en,
                                                            const GraphAction& symmetry) {
    const HalfEdgeGraph& xq = d.ctx.quotient.graph();
    if (!(symmetry.graph().vertex_ids() == xq.vertex_ids() &&
          symmetry.graph().halfedge_ids() == xq.halfedge_ids()))
        throw Error("symmetry action must be defined on the quotient graph");
    // Candidate index by first half-edge (edges) or leg half-edge.
    std::vector<int> cand_of_halfedge(xq.nh(), -1);
    for (std::size_t ci = 0; ci < en.candidates.size(); ++ci) {
        cand_of_halfedge[en.candidates[ci].halfedge] = static_cast<int>(ci);
        if (!en.candidates[ci].is_leg)
            cand_of_halfedge[xq.edges()[en.candidates[ci].edge_index].h2] = static_cast<int>(ci);
    }
    // Candidate permutation per group element.
    std::vector<std::vector<int>> perms;
    for (int e = 0; e < symmetry.order(); ++e) {
        std::vector<int> p(en.candidates.size());
        for (std::size_t ci = 0; ci < en.candidates.size(); ++ci) {
            int image = cand_of_halfedge[symmetry.act_halfedge(e, en.candidates[ci].halfedge)];
            if (image == -1)
                throw Error("symmetry does not preserve the ogod candidate set");
            p[ci] = image;
        }
        perms.push_back(std::move(p));
    }

    std::map<std::vector<int>, std::size_t> ogod_by_subset;
    for (std::size_t i = 0; i < en.ogods.size(); ++i)
        ogod_by_subset[en.ogods[i].elements] = i;

    std::map<std::vector<int>, OgodSymmetryClass> classes;  // keyed by least member
    for (const OgodCertificate& og : en.ogods) {
        std::vector<std::vector<int>> orbit;
        for (const auto& p : perms) {
            std::vector<int> img;
            for (int ci : og.elements) img.push_back(p[ci]);
            std::sort(img.begin(), img.end());
            auto it = ogod_by_subset.find(img);
            if (it == ogod_by_subset.end())
                throw Error("symmetry maps an ogod to a non-ogod subset");
            if (en.ogods[it->second].weight != og.weight)
                throw Error("symmetry maps an ogod to one of different weight");
            orbit.push_back(std::move(img));
        }
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        const std::vector<int>& least = orbit.front();
        auto& cls = classes[least];
        cls.representative = least;
        cls.size = static_cast<int>(orbit.size());
        cls.weight = og.weight;
    }
    std::vector<OgodSymmetryClass> out;
    for (auto& [k, v] : classes) out.push_back(std::move(v));
    return out;
}

}  // namespace gog
