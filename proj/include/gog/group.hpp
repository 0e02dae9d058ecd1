#pragma once

// Finite permutation groups acting on half-edge graphs.  An element is a
// paired permutation (vertices, half-edges) commuting with root and
// involution; the group acts on the right, and the closure of the generator
// set is computed breadth-first (the groups at hand are tiny).

#include "gog/errors.hpp"
#include "gog/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace gog {

struct ActionElement {
    std::vector<int> vperm;  // vertex index -> vertex index
    std::vector<int> hperm;  // half-edge index -> half-edge index

    bool operator==(const ActionElement& o) const { return vperm == o.vperm && hperm == o.hperm; }
    bool operator<(const ActionElement& o) const {
        return vperm != o.vperm ? vperm < o.vperm : hperm < o.hperm;
    }
};

// Composition for a right action: x * (a e2 after e1) = (x * e1) * e2.
inline ActionElement compose(const ActionElement& e1, const ActionElement& e2) {
    ActionElement r;
    r.vperm.resize(e1.vperm.size());
    r.hperm.resize(e1.hperm.size());
    for (std::size_t i = 0; i < e1.vperm.size(); ++i) r.vperm[i] = e2.vperm[e1.vperm[i]];
    for (std::size_t i = 0; i < e1.hperm.size(); ++i) r.hperm[i] = e2.hperm[e1.hperm[i]];
    return r;
}

struct GenWord {
    std::vector<int> gens;  // element = product of these generators, identity if empty
};

class GraphAction {
  public:
    static constexpr int kDefaultClosureCap = 10000;

    // Empty action placeholder (order 0); every real instance goes through
    // the validating constructor below.
    GraphAction() = default;

    GraphAction(HalfEdgeGraph graph, std::vector<ActionElement> generators,
                std::vector<std::string> generator_names = {}, int closure_cap = kDefaultClosureCap)
        : graph_(std::move(graph)), generators_(std::move(generators)),
          generator_names_(std::move(generator_names)) {
        while (static_cast<int>(generator_names_.size()) < static_cast<int>(generators_.size()))
            generator_names_.push_back("g" + std::to_string(generator_names_.size()));
        check_generators();
        close(closure_cap);
    }

    const HalfEdgeGraph& graph() const { return graph_; }
    const std::vector<ActionElement>& generators() const { return generators_; }
    const std::vector<std::string>& generator_names() const { return generator_names_; }

    // Closure in BFS order; element 0 is the identity.
    const std::vector<ActionElement>& elements() const { return elements_; }
    int order() const { return static_cast<int>(elements_.size()); }
    const GenWord& word(int e) const { return words_[e]; }

    int act_vertex(int e, int v) const { return elements_[e].vperm[v]; }
    int act_halfedge(int e, int h) const { return elements_[e].hperm[h]; }

    int element_index(const ActionElement& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) throw Error("element not in closure");
        return it->second;
    }
    // Group multiplication on closure indices (right-action convention).
    int mul(int a, int b) const { return element_index(compose(elements_[a], elements_[b])); }
    int inverse(int a) const {
        for (int b = 0; b < order(); ++b)
            if (mul(a, b) == 0) return b;
        throw Error("no inverse found");  // unreachable for a closed set
    }

    // Stabilizer of a vertex / half-edge, as sorted closure indices.
    std::vector<int> vertex_stabilizer(int v) const {
        std::vector<int> s;
        for (int e = 0; e < order(); ++e)
            if (act_vertex(e, v) == v) s.push_back(e);
        return s;
    }
    std::vector<int> halfedge_stabilizer(int h) const {
        std::vector<int> s;
        for (int e = 0; e < order(); ++e)
            if (act_halfedge(e, h) == h) s.push_back(e);
        return s;
    }

    std::vector<int> vertex_orbit(int v) const {
        std::vector<int> seen(graph_.nv(), 0);
        std::vector<int> orbit;
        for (int e = 0; e < order(); ++e) {
            int w = act_vertex(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                orbit.push_back(w);
            }
        }
        return orbit;
    }
    std::vector<int> halfedge_orbit(int h) const {
        std::vector<int> seen(graph_.nh(), 0);
        std::vector<int> orbit;
        for (int e = 0; e < order(); ++e) {
            int k = act_halfedge(e, h);
            if (!seen[k]) {
                seen[k] = 1;
                orbit.push_back(k);
            }
        }
        return orbit;
    }

  private:
    void check_generators() const {
        for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
            const ActionElement& g = generators_[gi];
            if (static_cast<int>(g.vperm.size()) != graph_.nv() ||
                static_cast<int>(g.hperm.size()) != graph_.nh())
                throw NotAnAction("generator " + generator_names_[gi] + " has wrong size");
            std::vector<int> seenv(graph_.nv(), 0), seenh(graph_.nh(), 0);
            for (int v : g.vperm) {
                if (v < 0 || v >= graph_.nv() || seenv[v]++)
                    throw NotAnAction("generator " + generator_names_[gi] +
                                      " is not a vertex permutation");
            }
            for (int h : g.hperm) {
                if (h < 0 || h >= graph_.nh() || seenh[h]++)
                    throw NotAnAction("generator " + generator_names_[gi] +
                                      " is not a half-edge permutation");
            }
            for (int h = 0; h < graph_.nh(); ++h) {
                if (graph_.root(g.hperm[h]) != g.vperm[graph_.root(h)])
                    throw NotAnAction("generator " + generator_names_[gi] +
                                          " does not commute with the root map at '" +
                                          graph_.halfedge_label(h) + "'",
                                      graph_.halfedge_label(h));
                if (graph_.involution(g.hperm[h]) != g.hperm[graph_.involution(h)])
                    throw NotAnAction("generator " + generator_names_[gi] +
                                          " does not commute with the involution at '" +
                                          graph_.halfedge_label(h) + "'",
                                      graph_.halfedge_label(h));
            }
        }
    }

    void close(int cap) {
        ActionElement id;
        id.vperm.resize(graph_.nv());
        id.hperm.resize(graph_.nh());
        for (int v = 0; v < graph_.nv(); ++v) id.vperm[v] = v;
        for (int h = 0; h < graph_.nh(); ++h) id.hperm[h] = h;
        elements_ = {id};
        words_ = {GenWord{}};
        index_[id] = 0;
        for (std::size_t head = 0; head < elements_.size(); ++head) {
            for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
                ActionElement next = compose(elements_[head], generators_[gi]);
                if (index_.count(next)) continue;
                if (static_cast<int>(elements_.size()) >= cap)
                    throw ClosureCapExceeded("group closure exceeds cap " + std::to_string(cap));
                index_[next] = static_cast<int>(elements_.size());
                GenWord w = words_[head];
                w.gens.push_back(static_cast<int>(gi));
                elements_.push_back(std::move(next));
                words_.push_back(std::move(w));
            }
        }
    }

    HalfEdgeGraph graph_;
    std::vector<ActionElement> generators_;
    std::vector<std::string> generator_names_;
    std::vector<ActionElement> elements_;
    std::vector<GenWord> words_;
    std::map<ActionElement, int> index_;
};

// Validation entry point matching the rest of the library's reporting style;
// construction itself throws NotAnAction / ClosureCapExceeded.
inline ValidationReport validate_action(const GraphAction& a) {
    ValidationReport r;
    r.n_vertices = a.graph().nv();
    r.connected = a.graph().connected();
    r.n_components = a.graph().component_count();
    // Orbit-stabilizer sanity on every vertex and half-edge.
    for (int v = 0; v < a.graph().nv(); ++v)
        if (static_cast<int>(a.vertex_orbit(v).size() * a.vertex_stabilizer(v).size()) != a.order())
            r.flag("orbit-stabilizer identity fails at vertex '" + a.graph().vertex_label(v) + "'");
    for (int h = 0; h < a.graph().nh(); ++h)
        if (static_cast<int>(a.halfedge_orbit(h).size() * a.halfedge_stabilizer(h).size()) !=
            a.order())
            r.flag("orbit-stabilizer identity fails at half-edge '" + a.graph().halfedge_label(h) +
                   "'");
    return r;
}

}  // namespace gog
