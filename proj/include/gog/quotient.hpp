#pragma once

// Quotients of a half-edge graph by a finite group action, and the inverse
// construction: reassembling the cover from the quotient graph decorated with
// stabilizer subgroups and a voltage assignment beta.
//
// Conventions (all deterministic):
//   * quotient vertices/half-edges are orbits, ordered by their least source
//     index (first-seen order);
//   * the section of a vertex orbit is its lexicographically least label; the
//     section of a half-edge orbit is the lexicographically least label among
//     members rooted at the chosen vertex section;
//   * beta(h) is the least element in closure order satisfying the defining
//     equation, and beta(involution(h)) = beta(h)^{-1} assigned in index order.

#include "gog/errors.hpp"
#include "gog/graph.hpp"
#include "gog/group.hpp"
#include "gog/morphism.hpp"
#include "gog/weighted.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace gog {

// ---------------------------------------------------------------------------
// Multiplication table of a closed element set, with element words for
// readable serialization.  Element 0 is the identity.

struct GroupTable {
    int n = 1;
    std::vector<std::vector<int>> mul;    // mul[a][b] = a*b (right-action order)
    std::vector<int> inv;                 // inverses
    std::vector<std::string> names;       // element words ("1" for the identity)
    std::vector<int> generator_elements;  // element indices of the generators
    std::vector<std::string> generator_names;

    int identity() const { return 0; }

    bool contains_sorted(const std::vector<int>& s, int e) const {
        return std::binary_search(s.begin(), s.end(), e);
    }
    // s must be sorted; a subgroup contains the identity and is closed.
    bool is_subgroup(const std::vector<int>& s) const {
        if (s.empty() || !contains_sorted(s, identity())) return false;
        for (int a : s) {
            if (a < 0 || a >= n || !contains_sorted(s, inv[a])) return false;
            for (int b : s)
                if (!contains_sorted(s, mul[a][b])) return false;
        }
        return true;
    }

    static GroupTable trivial() {
        GroupTable t;
        t.n = 1;
        t.mul = {{0}};
        t.inv = {0};
        t.names = {"1"};
        return t;
    }
    static GroupTable cyclic(int n) {
        GroupTable t;
        t.n = n;
        t.mul.assign(n, std::vector<int>(n));
        t.inv.assign(n, 0);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) t.mul[a][b] = (a + b) % n;
            t.inv[a] = (n - a) % n;
            std::string w = "1";
            for (int k = 0; k < a; ++k) w = (k == 0) ? "t" : w + "*t";
            t.names.push_back(w);
        }
        if (n > 1) {
            t.generator_elements = {1};
            t.generator_names = {"t"};
        }
        return t;
    }
};

inline std::string element_word_string(const GraphAction& a, int e) {
    const GenWord& w = a.word(e);
    if (w.gens.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.gens.size(); ++i) {
        if (i) s += "*";
        s += a.generator_names()[w.gens[i]];
    }
    return s;
}

inline GroupTable group_table(const GraphAction& a) {
    GroupTable t;
    t.n = a.order();
    t.mul.assign(t.n, std::vector<int>(t.n));
    t.inv.assign(t.n, 0);
    for (int i = 0; i < t.n; ++i) {
        for (int j = 0; j < t.n; ++j) t.mul[i][j] = a.mul(i, j);
        t.inv[i] = a.inverse(i);
        t.names.push_back(element_word_string(a, i));
    }
    for (std::size_t gi = 0; gi < a.generators().size(); ++gi) {
        t.generator_elements.push_back(a.element_index(a.generators()[gi]));
        t.generator_names.push_back(a.generator_names()[gi]);
    }
    return t;
}

// ---------------------------------------------------------------------------
// Voltage data: a graph decorated with subgroups of a common finite group and
// a voltage assignment, sufficient to reassemble the cover.

struct VoltageData {
    HalfEdgeGraph graph;  // the quotient graph (legs where edges were flipped)
    GroupTable group;
    std::vector<std::vector<int>> vertex_subgroup;    // sorted element indices per vertex
    std::vector<std::vector<int>> halfedge_subgroup;  // sorted element indices per half-edge
    std::vector<int> beta;                            // group element per half-edge
};

struct QuotientData {
    GraphOfGroups quotient;
    std::vector<int> vertex_section;    // quotient vertex -> source vertex index
    std::vector<int> halfedge_section;  // quotient half-edge -> source half-edge index
    std::vector<int> beta;              // quotient half-edge -> closure element index
    GraphMorphism projection;           // source -> quotient
    VoltageData voltage;
};

// ---------------------------------------------------------------------------
// Orbit decomposition shared by quotient_graph and quotient_graph_of_groups.

namespace detail {

struct OrbitData {
    std::vector<int> vorbit, horbit;          // source index -> orbit index
    int n_vorbits = 0, n_horbits = 0;
    std::vector<int> vsection, hsection;      // orbit index -> source index
    std::vector<int> qroot, qinv;             // quotient structure maps
};

inline OrbitData orbit_decomposition(const GraphAction& a) {
    const HalfEdgeGraph& g = a.graph();
    OrbitData d;
    d.vorbit.assign(g.nv(), -1);
    d.horbit.assign(g.nh(), -1);
    for (int v = 0; v < g.nv(); ++v) {
        if (d.vorbit[v] != -1) continue;
        int id = d.n_vorbits++;
        int best = v;
        for (int w : a.vertex_orbit(v)) {
            d.vorbit[w] = id;
            if (g.vertex_label(w) < g.vertex_label(best)) best = w;
        }
        d.vsection.push_back(best);
    }
    for (int h = 0; h < g.nh(); ++h) {
        if (d.horbit[h] != -1) continue;
        int id = d.n_horbits++;
        int vstar = d.vsection[d.vorbit[g.root(h)]];
        int best = -1;
        for (int k : a.halfedge_orbit(h)) {
            d.horbit[k] = id;
            if (g.root(k) == vstar && (best == -1 || g.halfedge_label(k) < g.halfedge_label(best)))
                best = k;
        }
        if (best == -1)
            throw InternalMismatch("half-edge orbit misses the section vertex");
        d.hsection.push_back(best);
    }
    d.qroot.assign(d.n_horbits, -1);
    d.qinv.assign(d.n_horbits, -1);
    for (int qh = 0; qh < d.n_horbits; ++qh) {
        d.qroot[qh] = d.vorbit[g.root(d.hsection[qh])];
        d.qinv[qh] = d.horbit[g.involution(d.hsection[qh])];
    }
    return d;
}

inline HalfEdgeGraph quotient_from_orbits(const GraphAction& a, const OrbitData& d) {
    const HalfEdgeGraph& g = a.graph();
    std::vector<std::string> vlabels, hlabels;
    for (int qv = 0; qv < d.n_vorbits; ++qv) vlabels.push_back(g.vertex_label(d.vsection[qv]));
    for (int qh = 0; qh < d.n_horbits; ++qh) hlabels.push_back(g.halfedge_label(d.hsection[qh]));
    return HalfEdgeGraph::from_indices(vlabels, hlabels, d.qroot, d.qinv);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Plain quotient graph: orbits of vertices and half-edges; an edge whose
// halves lie in one orbit (the action flips it) becomes a leg.

inline std::pair<HalfEdgeGraph, GraphMorphism> quotient_graph(const GraphAction& a) {
    detail::OrbitData d = detail::orbit_decomposition(a);
    HalfEdgeGraph q = detail::quotient_from_orbits(a, d);
    GraphMorphism p{a.graph(), q, d.vorbit, d.horbit};
    ValidationReport vr = validate_morphism(p);
    if (!vr.ok) throw InternalMismatch("quotient projection is not a morphism: " + vr.issues[0]);
    return {std::move(q), std::move(p)};
}

// ---------------------------------------------------------------------------
// Quotient graph of groups: quotient graph + stabilizer weights + sections +
// voltage assignment beta.

inline QuotientData quotient_graph_of_groups(const GraphAction& a) {
    const HalfEdgeGraph& g = a.graph();
    if (!g.connected())
        throw DisconnectedGraph("quotient_graph_of_groups requires a connected source");
    detail::OrbitData d = detail::orbit_decomposition(a);
    HalfEdgeGraph q = detail::quotient_from_orbits(a, d);

    QuotientData out;
    out.vertex_section = d.vsection;
    out.halfedge_section = d.hsection;
    out.projection = GraphMorphism{g, q, d.vorbit, d.horbit};

    std::vector<Int> c_v, c_h;
    std::vector<std::vector<int>> vsub, hsub;
    for (int qv = 0; qv < d.n_vorbits; ++qv) {
        vsub.push_back(a.vertex_stabilizer(d.vsection[qv]));
        c_v.push_back(Int(vsub.back().size()));
    }
    for (int qh = 0; qh < d.n_horbits; ++qh) {
        hsub.push_back(a.halfedge_stabilizer(d.hsection[qh]));
        c_h.push_back(Int(hsub.back().size()));
    }
    out.quotient = GraphOfGroups(q, c_v, c_h);

    // beta: for each quotient half-edge h with section s and partner section
    // s' = section(iota_Q(h)), the least closure element with s'.beta =
    // iota(s); partners are assigned inverses in index order.
    out.beta.assign(d.n_horbits, -1);
    for (int qh = 0; qh < d.n_horbits; ++qh) {
        if (out.beta[qh] != -1) continue;
        int s = d.hsection[qh];
        int sp = d.hsection[d.qinv[qh]];
        int found = -1;
        for (int e = 0; e < a.order(); ++e)
            if (a.act_halfedge(e, sp) == g.involution(s)) {
                found = e;
                break;
            }
        if (found == -1) throw InternalMismatch("no voltage element satisfies beta equation");
        out.beta[qh] = found;
        if (d.qinv[qh] != qh && out.beta[d.qinv[qh]] == -1) {
            int binv = a.inverse(found);
            if (a.act_halfedge(binv, s) != g.involution(sp))
                throw InternalMismatch("beta inverse fails the partner equation");
            out.beta[d.qinv[qh]] = binv;
        }
    }

    out.voltage =
        VoltageData{out.quotient.graph(), group_table(a), std::move(vsub), std::move(hsub), out.beta};
    return out;
}

// ---------------------------------------------------------------------------
// Cover assembly.  Vertices of the cover are right cosets X_v\G (one block per
// quotient vertex), half-edges are cosets X_h\G, the root map sends X_h g to
// X_{r(h)} g, and the involution sends X_h g to X_{iota h} beta(h) g.  Cosets
// are enumerated first-seen in element order, so coset 0 contains the
// identity; cover labels are "<quotient-label>.<coset>" with the coset index
// zero-padded per fiber.

namespace detail {

inline std::string padded_index(int k, int max_index) {
    std::string s = std::to_string(k);
    std::string m = std::to_string(max_index < 1 ? 1 : max_index);
    while (s.size() < m.size()) s.insert(s.begin(), '0');
    return s;
}

// Right cosets S\G in first-seen element order: returns coset_of[g].
inline std::vector<int> right_cosets(const GroupTable& t, const std::vector<int>& sub,
                                     int* n_cosets) {
    std::vector<int> coset_of(t.n, -1);
    int next = 0;
    for (int q = 0; q < t.n; ++q) {
        if (coset_of[q] != -1) continue;
        for (int s : sub) coset_of[t.mul[s][q]] = next;
        ++next;
    }
    *n_cosets = next;
    return coset_of;
}

}  // namespace detail

struct AssembledCover {
    HalfEdgeGraph graph;
    GraphAction action;
    // Fiber tables: cover indices per (quotient index, coset index).
    std::vector<std::vector<int>> vertex_fiber, halfedge_fiber;
    std::vector<std::vector<int>> vertex_coset_of, halfedge_coset_of;  // per quotient item: g -> coset
};

inline void validate_voltage(const VoltageData& vd) {
    const HalfEdgeGraph& g = vd.graph;
    const GroupTable& t = vd.group;
    if (static_cast<int>(vd.vertex_subgroup.size()) != g.nv() ||
        static_cast<int>(vd.halfedge_subgroup.size()) != g.nh() ||
        static_cast<int>(vd.beta.size()) != g.nh())
        throw IncompatibleSubgroups("voltage data does not match the graph");
    for (int v = 0; v < g.nv(); ++v)
        if (!t.is_subgroup(vd.vertex_subgroup[v]))
            throw IncompatibleSubgroups("vertex '" + g.vertex_label(v) +
                                        "' does not carry a subgroup");
    for (int h = 0; h < g.nh(); ++h) {
        const std::vector<int>& xh = vd.halfedge_subgroup[h];
        if (!t.is_subgroup(xh))
            throw IncompatibleSubgroups("half-edge '" + g.halfedge_label(h) +
                                        "' does not carry a subgroup");
        for (int s : xh)
            if (!t.contains_sorted(vd.vertex_subgroup[g.root(h)], s))
                throw IncompatibleSubgroups("subgroup at '" + g.halfedge_label(h) +
                                            "' is not contained in the root subgroup");
        int b = vd.beta[h];
        if (b < 0 || b >= t.n) throw InvalidVoltage("voltage out of range");
        int hp = g.involution(h);
        // Well-definedness of the involution: beta X_h beta^{-1} = X_{h'}.
        for (int s : xh) {
            int conj = t.mul[t.mul[b][s]][t.inv[b]];
            if (!t.contains_sorted(vd.halfedge_subgroup[hp], conj))
                throw IncompatibleSubgroups("conjugation by the voltage at '" +
                                            g.halfedge_label(h) +
                                            "' does not carry the subgroup to its partner");
        }
        if (vd.halfedge_subgroup[hp].size() != xh.size())
            throw IncompatibleSubgroups("paired half-edges carry subgroups of different sizes");
        // Involution property: beta(h') beta(h) must lie in X_h (legs: beta^2).
        int bb = t.mul[vd.beta[hp]][b];
        if (!t.contains_sorted(xh, bb))
            throw InvalidVoltage(g.is_leg(h)
                                     ? "leg voltage at '" + g.halfedge_label(h) +
                                           "' does not square into the stabilizer"
                                     : "voltages at '" + g.halfedge_label(h) +
                                           "' and its partner do not compose into the stabilizer");
    }
}

inline AssembledCover assemble_cover_detailed(const VoltageData& vd) {
    validate_voltage(vd);
    const HalfEdgeGraph& g = vd.graph;
    const GroupTable& t = vd.group;

    std::vector<std::vector<int>> vcoset_of(g.nv()), hcoset_of(g.nh());
    std::vector<int> n_vcosets(g.nv()), n_hcosets(g.nh());
    for (int v = 0; v < g.nv(); ++v)
        vcoset_of[v] = detail::right_cosets(t, vd.vertex_subgroup[v], &n_vcosets[v]);
    for (int h = 0; h < g.nh(); ++h)
        hcoset_of[h] = detail::right_cosets(t, vd.halfedge_subgroup[h], &n_hcosets[h]);

    // Representative element per coset (least g in the coset).
    std::vector<std::vector<int>> vrep(g.nv()), hrep(g.nh());
    for (int v = 0; v < g.nv(); ++v) {
        vrep[v].assign(n_vcosets[v], -1);
        for (int q = t.n - 1; q >= 0; --q) vrep[v][vcoset_of[v][q]] = q;
    }
    for (int h = 0; h < g.nh(); ++h) {
        hrep[h].assign(n_hcosets[h], -1);
        for (int q = t.n - 1; q >= 0; --q) hrep[h][hcoset_of[h][q]] = q;
    }

    AssembledCover out;
    std::vector<std::string> vlabels, hlabels;
    std::vector<int> vbase(g.nv()), hbase(g.nh());
    out.vertex_fiber.resize(g.nv());
    out.halfedge_fiber.resize(g.nh());
    for (int v = 0; v < g.nv(); ++v) {
        vbase[v] = static_cast<int>(vlabels.size());
        for (int k = 0; k < n_vcosets[v]; ++k) {
            out.vertex_fiber[v].push_back(static_cast<int>(vlabels.size()));
            vlabels.push_back(g.vertex_label(v) + "." +
                              detail::padded_index(k, n_vcosets[v] - 1));
        }
    }
    for (int h = 0; h < g.nh(); ++h) {
        hbase[h] = static_cast<int>(hlabels.size());
        for (int k = 0; k < n_hcosets[h]; ++k) {
            out.halfedge_fiber[h].push_back(static_cast<int>(hlabels.size()));
            hlabels.push_back(g.halfedge_label(h) + "." +
                              detail::padded_index(k, n_hcosets[h] - 1));
        }
    }

    std::vector<int> root(hlabels.size()), inv(hlabels.size());
    for (int h = 0; h < g.nh(); ++h) {
        int rt = g.root(h), hp = g.involution(h);
        for (int k = 0; k < n_hcosets[h]; ++k) {
            int grep = hrep[h][k];
            root[hbase[h] + k] = vbase[rt] + vcoset_of[rt][grep];
            inv[hbase[h] + k] = hbase[hp] + hcoset_of[hp][t.mul[vd.beta[h]][grep]];
        }
    }
    out.graph = HalfEdgeGraph::from_indices(vlabels, hlabels, root, inv);

    // The right G-action on cosets, one generator per table generator.
    std::vector<ActionElement> gens;
    for (int ge : t.generator_elements) {
        ActionElement el;
        el.vperm.resize(out.graph.nv());
        el.hperm.resize(out.graph.nh());
        for (int v = 0; v < g.nv(); ++v)
            for (int k = 0; k < n_vcosets[v]; ++k)
                el.vperm[vbase[v] + k] = vbase[v] + vcoset_of[v][t.mul[vrep[v][k]][ge]];
        for (int h = 0; h < g.nh(); ++h)
            for (int k = 0; k < n_hcosets[h]; ++k)
                el.hperm[hbase[h] + k] = hbase[h] + hcoset_of[h][t.mul[hrep[h][k]][ge]];
        gens.push_back(std::move(el));
    }
    out.action = GraphAction(out.graph, std::move(gens), t.generator_names);
    out.vertex_coset_of = std::move(vcoset_of);
    out.halfedge_coset_of = std::move(hcoset_of);
    return out;
}

inline std::pair<HalfEdgeGraph, GraphAction> assemble_cover(const VoltageData& vd) {
    AssembledCover c = assemble_cover_detailed(vd);
    return {std::move(c.graph), std::move(c.action)};
}

inline std::pair<HalfEdgeGraph, GraphAction> assemble_cover(const QuotientData& q) {
    return assemble_cover(q.voltage);
}

}  // namespace gog
