#pragma once

// Half-edge graphs with legs.  A graph is a vertex set, a half-edge set, a
// root map (half-edge -> vertex) and an involution on half-edges.  Orbits of
// size two of the involution are edges, fixed points are legs; an edge whose
// two roots coincide is a loop.  Labels are stable strings; internally
// everything is dense indices in input order, which fixes all matrix
// orderings deterministically.

#include "gog/errors.hpp"
#include "gog/integers.hpp"
#include "gog/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace gog {

struct Edge {
    int h1, h2;  // half-edge indices, h1 < h2; h1 is the initial half (orientation)
};

class HalfEdgeGraph {
  public:
    HalfEdgeGraph() = default;

    // vertices: labels in order; halfedges: (label, root label) in order;
    // pairs: involution 2-orbits by label; legs: fixed half-edges by label.
    HalfEdgeGraph(std::vector<std::string> vertices,
                  std::vector<std::pair<std::string, std::string>> halfedges,
                  const std::vector<std::pair<std::string, std::string>>& pairs,
                  const std::vector<std::string>& legs) {
        vertex_ids_ = std::move(vertices);
        for (int i = 0; i < static_cast<int>(vertex_ids_.size()); ++i) {
            if (!vindex_.emplace(vertex_ids_[i], i).second)
                throw ParseError("duplicate vertex label '" + vertex_ids_[i] + "'");
        }
        for (const auto& [h, r] : halfedges) {
            int hi = static_cast<int>(halfedge_ids_.size());
            if (!hindex_.emplace(h, hi).second)
                throw ParseError("duplicate half-edge label '" + h + "'");
            halfedge_ids_.push_back(h);
            auto it = vindex_.find(r);
            if (it == vindex_.end())
                throw ParseError("half-edge '" + h + "' roots at unknown vertex '" + r + "'");
            root_.push_back(it->second);
        }
        involution_.assign(halfedge_ids_.size(), -1);
        for (const auto& [a, b] : pairs) {
            int ia = halfedge_index(a), ib = halfedge_index(b);
            if (ia == ib) throw ParseError("edge pairs half-edge '" + a + "' with itself; use a leg");
            if (involution_[ia] != -1 || involution_[ib] != -1)
                throw ParseError("half-edge '" + (involution_[ia] != -1 ? a : b) +
                                 "' appears in more than one edge/leg line");
            involution_[ia] = ib;
            involution_[ib] = ia;
        }
        for (const auto& l : legs) {
            int il = halfedge_index(l);
            if (involution_[il] != -1)
                throw ParseError("half-edge '" + l + "' appears in more than one edge/leg line");
            involution_[il] = il;
        }
        for (std::size_t h = 0; h < involution_.size(); ++h)
            if (involution_[h] == -1)
                throw ParseError("half-edge '" + halfedge_ids_[h] + "' is in no edge or leg line");
        build_derived();
    }

    // Index-level constructor for programmatic use.
    static HalfEdgeGraph from_indices(std::vector<std::string> vertices,
                                      std::vector<std::string> halfedges,
                                      std::vector<int> root, std::vector<int> involution) {
        HalfEdgeGraph g;
        g.vertex_ids_ = std::move(vertices);
        g.halfedge_ids_ = std::move(halfedges);
        g.root_ = std::move(root);
        g.involution_ = std::move(involution);
        for (int i = 0; i < g.nv(); ++i)
            if (!g.vindex_.emplace(g.vertex_ids_[i], i).second)
                throw ParseError("duplicate vertex label '" + g.vertex_ids_[i] + "'");
        for (int h = 0; h < g.nh(); ++h)
            if (!g.hindex_.emplace(g.halfedge_ids_[h], h).second)
                throw ParseError("duplicate half-edge label '" + g.halfedge_ids_[h] + "'");
        for (int h = 0; h < g.nh(); ++h) {
            if (g.root_[h] < 0 || g.root_[h] >= g.nv())
                throw ParseError("half-edge '" + g.halfedge_ids_[h] + "' has out-of-range root");
            int p = g.involution_[h];
            if (p < 0 || p >= g.nh() || g.involution_[p] != h)
                throw ParseError("involution is not an involution at '" + g.halfedge_ids_[h] + "'");
        }
        g.build_derived();
        return g;
    }

    int nv() const { return static_cast<int>(vertex_ids_.size()); }
    int nh() const { return static_cast<int>(halfedge_ids_.size()); }

    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::vector<std::string>& halfedge_ids() const { return halfedge_ids_; }
    const std::string& vertex_label(int v) const { return vertex_ids_[v]; }
    const std::string& halfedge_label(int h) const { return halfedge_ids_[h]; }

    int vertex_index(const std::string& label) const {
        auto it = vindex_.find(label);
        if (it == vindex_.end()) throw UnknownVertex("no vertex '" + label + "'");
        return it->second;
    }
    int halfedge_index(const std::string& label) const {
        auto it = hindex_.find(label);
        if (it == hindex_.end()) throw ParseError("no half-edge '" + label + "'");
        return it->second;
    }
    bool has_vertex(const std::string& label) const { return vindex_.count(label) != 0; }

    int root(int h) const { return root_[h]; }
    int involution(int h) const { return involution_[h]; }
    bool is_leg(int h) const { return involution_[h] == h; }

    // Tangent space T_v: half-edges rooted at v, in input order.
    const std::vector<int>& tangent(int v) const { return tangent_[v]; }
    int valency(int v) const { return static_cast<int>(tangent_[v].size()); }

    // Edges (2-orbits), in order of their first half-edge; h1 < h2.
    const std::vector<Edge>& edges() const { return edges_; }
    // Legs (fixed points), in input order.
    const std::vector<int>& legs() const { return legs_; }
    bool is_loop(const Edge& e) const { return root_[e.h1] == root_[e.h2]; }

    int component_count() const { return component_count_; }
    int component_of(int v) const { return component_[v]; }
    bool connected() const { return nv() <= 1 || component_count_ == 1; }

    std::string edge_name(const Edge& e) const {
        return halfedge_ids_[e.h1] + "~" + halfedge_ids_[e.h2];
    }

  private:
    void build_derived() {
        tangent_.assign(nv(), {});
        for (int h = 0; h < nh(); ++h) tangent_[root_[h]].push_back(h);
        edges_.clear();
        legs_.clear();
        for (int h = 0; h < nh(); ++h) {
            int p = involution_[h];
            if (p == h)
                legs_.push_back(h);
            else if (h < p)
                edges_.push_back(Edge{h, p});
        }
        // connected components via union-find over edges
        component_.assign(nv(), 0);
        std::vector<int> parent(nv());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            return v;
        };
        for (const Edge& e : edges_) {
            int a = find(root_[e.h1]), b = find(root_[e.h2]);
            if (a != b) parent[a] = b;
        }
        std::map<int, int> relabel;
        for (int v = 0; v < nv(); ++v) {
            int r = find(v);
            auto [it, fresh] = relabel.emplace(r, static_cast<int>(relabel.size()));
            component_[v] = it->second;
            (void)fresh;
        }
        component_count_ = static_cast<int>(relabel.size());
    }

    std::vector<std::string> vertex_ids_, halfedge_ids_;
    std::map<std::string, int> vindex_, hindex_;
    std::vector<int> root_, involution_;
    std::vector<std::vector<int>> tangent_;
    std::vector<Edge> edges_;
    std::vector<int> legs_;
    std::vector<int> component_;
    int component_count_ = 0;
};

// ---------------------------------------------------------------------------
// Divisors ("chip configurations"): integer coefficients on vertices.

struct IntDivisor {
    std::map<std::string, Int> coefficients;

    Int degree() const {
        Int d = 0;
        for (const auto& [v, a] : coefficients) d += a;
        return d;
    }
    Int coeff(const std::string& v) const {
        auto it = coefficients.find(v);
        return it == coefficients.end() ? Int(0) : it->second;
    }
    void add(const std::string& v, const Int& a) {
        if ((coefficients[v] += a) == 0) coefficients.erase(v);
    }
    IntDivisor operator+(const IntDivisor& o) const {
        IntDivisor r = *this;
        for (const auto& [v, a] : o.coefficients) r.add(v, a);
        return r;
    }
    IntDivisor operator-(const IntDivisor& o) const {
        IntDivisor r = *this;
        for (const auto& [v, a] : o.coefficients) r.add(v, -a);
        return r;
    }
    IntDivisor operator*(const Int& s) const {
        IntDivisor r;
        if (s != 0)
            for (const auto& [v, a] : coefficients) r.coefficients[v] = a * s;
        return r;
    }
    bool operator==(const IntDivisor& o) const { return coefficients == o.coefficients; }

    std::vector<Int> to_vector(const HalfEdgeGraph& g) const {
        std::vector<Int> x(g.nv(), Int(0));
        for (const auto& [v, a] : coefficients) x[g.vertex_index(v)] = a;
        return x;
    }
    static IntDivisor from_vector(const HalfEdgeGraph& g, const std::vector<Int>& x) {
        IntDivisor d;
        for (int v = 0; v < g.nv(); ++v)
            if (x[v] != 0) d.coefficients[g.vertex_label(v)] = x[v];
        return d;
    }
    std::string str() const {
        if (coefficients.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [v, a] : coefficients) {
            if (!first) s += " ";
            s += (a >= 0 && !first ? "+" : "") + a.str() + "*" + v;
            first = false;
        }
        return s;
    }
};

// ---------------------------------------------------------------------------
// Validation report.

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> issues;
    int n_vertices = 0, n_edges = 0, n_legs = 0, n_loops = 0, n_components = 0;
    bool connected = false;

    void flag(const std::string& msg) {
        ok = false;
        issues.push_back(msg);
    }
};

// Construction already enforces the structural invariants, so a built graph
// validates cleanly; the report carries the derived classification.
inline ValidationReport validate_graph(const HalfEdgeGraph& g) {
    ValidationReport r;
    for (int h = 0; h < g.nh(); ++h) {
        if (g.involution(g.involution(h)) != h)
            r.flag("involution not an involution at '" + g.halfedge_label(h) + "'");
        if (g.root(h) < 0 || g.root(h) >= g.nv())
            r.flag("half-edge '" + g.halfedge_label(h) + "' has no root vertex");
    }
    r.n_vertices = g.nv();
    r.n_edges = static_cast<int>(g.edges().size());
    r.n_legs = static_cast<int>(g.legs().size());
    for (const Edge& e : g.edges())
        if (g.is_loop(e)) ++r.n_loops;
    r.n_components = g.component_count();
    r.connected = g.connected();
    return r;
}

// ---------------------------------------------------------------------------
// Laplacian.  Column v is the image of the vertex generator v:
// L(v) = sum over h in T_v of (v - root(involution(h))).  Legs and loops
// contribute zero; each column sums to zero.

inline IntMatrix graph_laplacian(const HalfEdgeGraph& g) {
    IntMatrix L(g.nv(), g.nv());
    for (int v = 0; v < g.nv(); ++v)
        for (int h : g.tangent(v)) {
            L(v, v) += 1;
            L(g.root(g.involution(h)), v) -= 1;
        }
    return L;
}

// ---------------------------------------------------------------------------
// Root matrices for a fixed orientation (initial half = first of the pair).
// S picks out initial roots, T terminal roots; both are nv x n_edges.
// For any orientation: L = (S-T)(S-T)^t, Q = SS^t+TT^t, A = ST^t+TS^t on
// legless graphs (legs sit outside the edge set; see weighted.hpp).

struct RootMatrices {
    IntMatrix S, T;
};

inline RootMatrices root_matrices(const HalfEdgeGraph& g) {
    const auto& es = g.edges();
    RootMatrices r{IntMatrix(g.nv(), es.size()), IntMatrix(g.nv(), es.size())};
    for (std::size_t j = 0; j < es.size(); ++j) {
        r.S(g.root(es[j].h1), j) += 1;
        r.T(g.root(es[j].h2), j) += 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Spanning trees, enumerated by ordered inclusion/exclusion over the edge
// list (the recursion tree of deletion-contraction).  Legs and loops are
// skipped.  Desk scale only.

struct SpanningTree {
    std::vector<int> edge_subset;  // indices into g.edges(), increasing
};

inline std::vector<SpanningTree> enumerate_spanning_trees(const HalfEdgeGraph& g) {
    if (!g.connected()) throw DisconnectedGraph("enumerate_spanning_trees requires a connected graph");
    const auto& es = g.edges();
    std::vector<int> usable;  // non-loop edges
    for (std::size_t j = 0; j < es.size(); ++j)
        if (!g.is_loop(es[j])) usable.push_back(static_cast<int>(j));

    std::vector<SpanningTree> out;
    std::vector<int> chosen;
    std::vector<int> parent(g.nv());
    std::iota(parent.begin(), parent.end(), 0);
    // Union-find with explicit undo stack for backtracking.
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v];
        return v;
    };
    int components = g.nv();

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (components == 1) {
            out.push_back(SpanningTree{chosen});
            return;
        }
        if (i == usable.size()) return;
        if (static_cast<int>(usable.size() - i) < components - 1) return;  // cannot connect
        int j = usable[i];
        int a = find(g.root(es[j].h1)), b = find(g.root(es[j].h2));
        if (a != b) {
            // contract: include edge j
            parent[a] = b;
            --components;
            chosen.push_back(j);
            self(self, i + 1);
            chosen.pop_back();
            ++components;
            parent[a] = a;
            // delete: exclude edge j
            self(self, i + 1);
        } else {
            self(self, i + 1);  // would close a cycle; skip
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace gog
