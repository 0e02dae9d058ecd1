#pragma once

// Morphisms of half-edge graphs (finite: half-edges map to half-edges),
// harmonicity checking with local/global degrees, and the pushforward /
// pullback they induce on divisors.

#include "gog/errors.hpp"
#include "gog/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace gog {

struct GraphMorphism {
    HalfEdgeGraph source, target;
    std::vector<int> vertex_map;    // source vertex index -> target vertex index
    std::vector<int> halfedge_map;  // source half-edge index -> target half-edge index

    static GraphMorphism identity(const HalfEdgeGraph& g) {
        GraphMorphism m{g, g, {}, {}};
        m.vertex_map.resize(g.nv());
        m.halfedge_map.resize(g.nh());
        for (int v = 0; v < g.nv(); ++v) m.vertex_map[v] = v;
        for (int h = 0; h < g.nh(); ++h) m.halfedge_map[h] = h;
        return m;
    }
};

// A morphism must commute with the root maps and the involutions.
inline ValidationReport validate_morphism(const GraphMorphism& m) {
    ValidationReport r;
    if (static_cast<int>(m.vertex_map.size()) != m.source.nv() ||
        static_cast<int>(m.halfedge_map.size()) != m.source.nh())
        r.flag("map sizes do not match the source graph");
    else
        for (int h = 0; h < m.source.nh(); ++h) {
            int fh = m.halfedge_map[h];
            if (fh < 0 || fh >= m.target.nh()) {
                r.flag("half-edge '" + m.source.halfedge_label(h) + "' maps out of range");
                continue;
            }
            if (m.target.root(fh) != m.vertex_map[m.source.root(h)])
                r.flag("root map does not commute at '" + m.source.halfedge_label(h) + "'");
            if (m.target.involution(fh) != m.halfedge_map[m.source.involution(h)])
                r.flag("involution does not commute at '" + m.source.halfedge_label(h) + "'");
        }
    return r;
}

struct HarmonicReport {
    std::map<std::string, Int> local_degrees;  // source vertex -> d_f(v)
    Int global_degree = 0;                     // sum of local degrees over any fiber
};

// A morphism is harmonic at a source vertex w when the fiber count
// |{h in T_w : f(h) = t}| is the same for every t in T_{f(w)}; that common
// count is the local degree.  For a connected target the fiber sums of local
// degrees agree across target vertices and give the global degree.
inline HarmonicReport check_harmonic(const GraphMorphism& m) {
    ValidationReport vr = validate_morphism(m);
    if (!vr.ok) throw NotHarmonic("not a morphism: " + vr.issues.front());
    HarmonicReport rep;
    std::vector<Int> local(m.source.nv(), Int(0));
    for (int w = 0; w < m.source.nv(); ++w) {
        int v = m.vertex_map[w];
        const auto& tv = m.target.tangent(v);
        if (tv.empty()) {
            local[w] = 0;
            continue;
        }
        std::map<int, Int> fiber_count;
        for (int t : tv) fiber_count[t] = 0;
        for (int h : m.source.tangent(w)) fiber_count[m.halfedge_map[h]] += 1;
        Int d = fiber_count[tv.front()];
        for (int t : tv)
            if (fiber_count[t] != d)
                throw NotHarmonic("unequal fiber counts at '" + m.source.vertex_label(w) + "'",
                                  m.source.vertex_label(w), m.target.halfedge_label(tv.front()),
                                  m.target.halfedge_label(t));
        local[w] = d;
    }
    for (int w = 0; w < m.source.nv(); ++w)
        rep.local_degrees[m.source.vertex_label(w)] = local[w];
    // Global degree: fiber sums, constant over a connected target.
    std::vector<Int> sums(m.target.nv(), Int(0));
    for (int w = 0; w < m.source.nv(); ++w) sums[m.vertex_map[w]] += local[w];
    rep.global_degree = m.target.nv() ? sums[0] : Int(0);
    if (m.target.connected())
        for (int v = 0; v < m.target.nv(); ++v)
            if (sums[v] != rep.global_degree)
                throw InternalMismatch("harmonic degree sums differ across a connected target");
    return rep;
}

// f_* adds up the chips in each fiber.
inline IntDivisor harmonic_pushforward(const GraphMorphism& m, const IntDivisor& d) {
    IntDivisor out;
    for (const auto& [label, a] : d.coefficients) {
        int w = m.source.vertex_index(label);
        out.add(m.target.vertex_label(m.vertex_map[w]), a);
    }
    return out;
}

// f^*(v) = sum over the fiber of v of d_f(w) * w, extended linearly.
inline IntDivisor harmonic_pullback(const GraphMorphism& m, const IntDivisor& d) {
    HarmonicReport rep = check_harmonic(m);
    IntDivisor out;
    for (int w = 0; w < m.source.nv(); ++w) {
        const std::string& target_label = m.target.vertex_label(m.vertex_map[w]);
        Int a = d.coeff(target_label);
        if (a != 0) out.add(m.source.vertex_label(w), a * rep.local_degrees.at(m.source.vertex_label(w)));
    }
    return out;
}

}  // namespace gog
