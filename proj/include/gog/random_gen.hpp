#pragma once

// Deterministic random instance generators for property tests: connected
// graphs with valid weights, voltage data over a catalog of small groups,
// and order-two voltage data for double covers.  All generators take an
// explicit engine so a fixed seed reproduces the exact suite.

#include "gog/graph.hpp"
#include "gog/quotient.hpp"
#include "gog/weighted.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace gog {

using RandomEngine = std::mt19937_64;

namespace detail {

inline int pick(RandomEngine& eng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng);
}

template <typename T>
inline const T& pick_one(RandomEngine& eng, const std::vector<T>& items) {
    return items[static_cast<std::size_t>(pick(eng, 0, static_cast<int>(items.size()) - 1))];
}

inline std::vector<Int> divisors_of(const Int& n) {
    std::vector<Int> out;
    for (Int d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

inline bool subset_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace detail

// Connected graph with up to `max_v` vertices, up to `max_e` edges (loops
// allowed, a spanning tree guarantees connectivity) and up to `max_legs` legs.
inline HalfEdgeGraph random_connected_graph(RandomEngine& eng, int max_v = 7, int max_e = 12,
                                            int max_legs = 3) {
    int nv = detail::pick(eng, 1, max_v);
    std::vector<std::string> vs;
    for (int i = 0; i < nv; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> hs, pairs;
    std::vector<std::string> legs;
    int ne = 0;
    auto add_edge = [&](int u, int v) {
        std::string h1 = "h" + std::to_string(ne) + "a", h2 = "h" + std::to_string(ne) + "b";
        hs.emplace_back(h1, vs[u]);
        hs.emplace_back(h2, vs[v]);
        pairs.emplace_back(h1, h2);
        ++ne;
    };
    for (int i = 1; i < nv; ++i) add_edge(detail::pick(eng, 0, i - 1), i);
    int extra = detail::pick(eng, 0, std::max(0, max_e - (nv - 1)));
    for (int k = 0; k < extra; ++k)
        add_edge(detail::pick(eng, 0, nv - 1), detail::pick(eng, 0, nv - 1));
    int nl = detail::pick(eng, 0, max_legs);
    for (int k = 0; k < nl; ++k) {
        std::string l = "g" + std::to_string(k);
        hs.emplace_back(l, vs[static_cast<std::size_t>(detail::pick(eng, 0, nv - 1))]);
        legs.push_back(l);
    }
    return HalfEdgeGraph(vs, hs, pairs, legs);
}

// Valid weights on a graph: vertex weights from a small pool, each edge or
// leg weight a random divisor of the gcd of its endpoint weights.
inline GraphOfGroups random_weights(RandomEngine& eng, const HalfEdgeGraph& g) {
    static const std::vector<Int> pool = {Int(1), Int(1), Int(2), Int(2), Int(3),
                                          Int(4),  Int(6), Int(12)};
    std::vector<Int> c_v(g.nv()), c_h(g.nh(), Int(1));
    for (int v = 0; v < g.nv(); ++v) c_v[v] = detail::pick_one(eng, pool);
    for (const Edge& e : g.edges()) {
        Int d = gcd(c_v[g.root(e.h1)], c_v[g.root(e.h2)]);
        Int c = detail::pick_one(eng, detail::divisors_of(d));
        c_h[e.h1] = c_h[e.h2] = c;
    }
    for (int l : g.legs()) c_h[l] = detail::pick_one(eng, detail::divisors_of(c_v[g.root(l)]));
    return GraphOfGroups(g, std::move(c_v), std::move(c_h));
}

// ---------------------------------------------------------------------------
// Small-group catalog.

// Multiplication table of the permutation group generated by `gen_perms`
// (permutations of {0..k-1}); mul[a][b] = "a then b".
inline GroupTable permutation_table(int k, const std::vector<std::vector<int>>& gen_perms,
                                    const std::vector<std::string>& gen_names) {
    std::vector<std::vector<int>> elems;
    std::vector<std::string> words;
    std::vector<int> id(k);
    std::iota(id.begin(), id.end(), 0);
    elems.push_back(id);
    words.push_back("1");
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t gi = 0; gi < gen_perms.size(); ++gi) {
            std::vector<int> next(k);
            for (int x = 0; x < k; ++x) next[x] = gen_perms[gi][elems[i][x]];
            if (std::find(elems.begin(), elems.end(), next) == elems.end()) {
                elems.push_back(next);
                words.push_back(words[i] == "1" ? gen_names[gi] : words[i] + "*" + gen_names[gi]);
            }
        }
    }
    GroupTable t;
    t.n = static_cast<int>(elems.size());
    t.names = words;
    t.mul.assign(t.n, std::vector<int>(t.n));
    t.inv.assign(t.n, -1);
    auto index_of = [&](const std::vector<int>& p) {
        return static_cast<int>(std::find(elems.begin(), elems.end(), p) - elems.begin());
    };
    for (int a = 0; a < t.n; ++a)
        for (int b = 0; b < t.n; ++b) {
            std::vector<int> c(k);
            for (int x = 0; x < k; ++x) c[x] = elems[b][elems[a][x]];
            t.mul[a][b] = index_of(c);
            if (t.mul[a][b] == 0) t.inv[a] = b;
        }
    for (const auto& gp : gen_perms) t.generator_elements.push_back(index_of(gp));
    t.generator_names = gen_names;
    return t;
}

inline GroupTable klein_four_table() {
    return permutation_table(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, {"x", "y"});
}

inline GroupTable symmetric3_table() {
    return permutation_table(3, {{1, 2, 0}, {1, 0, 2}}, {"r", "s"});
}

// Groups of order at most 6.
inline std::vector<GroupTable> group_catalog() {
    std::vector<GroupTable> out;
    for (int n = 1; n <= 6; ++n) out.push_back(GroupTable::cyclic(n));
    out.push_back(klein_four_table());
    out.push_back(symmetric3_table());
    return out;
}

// All subgroups generated by at most two elements (every group of order <= 6
// is itself 2-generated, so for the catalog this is the full subgroup list).
inline std::vector<std::vector<int>> all_subgroups(const GroupTable& t) {
    std::vector<std::vector<int>> out;
    auto closure = [&](std::vector<int> seed) {
        std::sort(seed.begin(), seed.end());
        seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
        std::vector<int> cur = std::move(seed);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            for (std::size_t j = 0; j < cur.size(); ++j) {
                int p = t.mul[cur[i]][cur[j]];
                if (std::find(cur.begin(), cur.end(), p) == cur.end()) cur.push_back(p);
            }
        }
        std::sort(cur.begin(), cur.end());
        return cur;
    };
    auto add = [&](std::vector<int> s) {
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
    };
    add(closure({0}));
    for (int a = 0; a < t.n; ++a)
        for (int b = a; b < t.n; ++b) add(closure({0, a, b}));
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.size() < y.size() || (x.size() == y.size() && x < y); });
    return out;
}

// ---------------------------------------------------------------------------
// Random voltage data.

// Valid voltage data over `group` on a random connected base graph.  Vertex
// groups are arbitrary subgroups; edge groups are chosen so the conjugation
// compatibility holds (falling back to trivial edge groups when a random
// attempt fails), legs fall back to the identity voltage.
inline VoltageData random_voltage_data(RandomEngine& eng, const GroupTable& group, int max_v = 4,
                                       int max_e = 6, int max_legs = 2) {
    VoltageData vd;
    vd.group = group;
    vd.graph = random_connected_graph(eng, max_v, max_e, max_legs);
    const HalfEdgeGraph& g = vd.graph;
    std::vector<std::vector<int>> subs = all_subgroups(group);
    vd.vertex_subgroup.resize(g.nv());
    for (int v = 0; v < g.nv(); ++v) vd.vertex_subgroup[v] = detail::pick_one(eng, subs);
    vd.halfedge_subgroup.assign(g.nh(), {group.identity()});
    vd.beta.assign(g.nh(), group.identity());
    auto conjugate = [&](const std::vector<int>& s, int b) {
        std::vector<int> out;
        for (int x : s) out.push_back(group.mul[group.mul[b][x]][group.inv[b]]);
        std::sort(out.begin(), out.end());
        return out;
    };
    for (const Edge& e : g.edges()) {
        const std::vector<int>&xu = vd.vertex_subgroup[g.root(e.h1)],
                               &xv = vd.vertex_subgroup[g.root(e.h2)];
        for (int attempt = 0; attempt < 12; ++attempt) {
            int b = detail::pick(eng, 0, group.n - 1);
            const std::vector<int>& s = detail::pick_one(eng, subs);
            if (!detail::subset_sorted(s, xu)) continue;
            std::vector<int> k = conjugate(s, b);
            if (!detail::subset_sorted(k, xv)) continue;
            vd.beta[e.h1] = b;
            vd.beta[e.h2] = group.inv[b];
            vd.halfedge_subgroup[e.h1] = s;
            vd.halfedge_subgroup[e.h2] = std::move(k);
            break;
        }
        if (vd.halfedge_subgroup[e.h1].size() == 1) {
            // Trivial edge groups accept any voltage.
            int b = detail::pick(eng, 0, group.n - 1);
            vd.beta[e.h1] = b;
            vd.beta[e.h2] = group.inv[b];
        }
    }
    for (int l : g.legs()) {
        const std::vector<int>& xv = vd.vertex_subgroup[g.root(l)];
        for (int attempt = 0; attempt < 12; ++attempt) {
            int b = detail::pick(eng, 0, group.n - 1);
            const std::vector<int>& s = detail::pick_one(eng, subs);
            if (!detail::subset_sorted(s, xv)) continue;
            if (!group.contains_sorted(s, group.mul[b][b])) continue;
            if (conjugate(s, b) != s) continue;
            vd.beta[l] = b;
            vd.halfedge_subgroup[l] = s;
            break;
        }
    }
    return vd;
}

// Order-two voltage data with at least one undilated vertex, so the deck
// transformation of the assembled double cover is a genuine involution.
inline VoltageData random_involution_voltage(RandomEngine& eng, int max_v = 5, int max_e = 7,
                                             int max_legs = 2) {
    GroupTable c2 = GroupTable::cyclic(2);
    VoltageData vd;
    vd.group = c2;
    vd.graph = random_connected_graph(eng, max_v, max_e, max_legs);
    const HalfEdgeGraph& g = vd.graph;
    vd.vertex_subgroup.resize(g.nv());
    for (int v = 0; v < g.nv(); ++v)
        vd.vertex_subgroup[v] = detail::pick(eng, 0, 2) == 0 ? std::vector<int>{0, 1}
                                                             : std::vector<int>{0};
    vd.vertex_subgroup[static_cast<std::size_t>(detail::pick(eng, 0, g.nv() - 1))] = {0};
    vd.halfedge_subgroup.assign(g.nh(), {0});
    vd.beta.assign(g.nh(), 0);
    for (const Edge& e : g.edges()) {
        // A dilated half-edge (group C2) is only possible when both endpoint
        // groups are C2; conjugation is trivial in an abelian group.
        bool both = vd.vertex_subgroup[g.root(e.h1)].size() == 2 &&
                    vd.vertex_subgroup[g.root(e.h2)].size() == 2;
        if (both && detail::pick(eng, 0, 1) == 0)
            vd.halfedge_subgroup[e.h1] = vd.halfedge_subgroup[e.h2] = {0, 1};
        int b = detail::pick(eng, 0, 1);
        vd.beta[e.h1] = b;
        vd.beta[e.h2] = b;  // self-inverse in C2
    }
    for (int l : g.legs()) {
        if (vd.vertex_subgroup[g.root(l)].size() == 2 && detail::pick(eng, 0, 1) == 0)
            vd.halfedge_subgroup[l] = {0, 1};
        // beta^2 = 1 lies in every subgroup, so any voltage is valid on a leg.
        vd.beta[l] = detail::pick(eng, 0, 1);
    }
    return vd;
}

}  // namespace gog
