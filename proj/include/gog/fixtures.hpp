#pragma once

// Named example graphs, symmetry groups, and their published invariants
// (provenance: literature values, cross-checked independently).
//
// Conventions shared by every fixture: vertices carry short ASCII labels, the
// two halves of an edge between u and v are labelled "u>v" (rooted at u) and
// "v>u" (rooted at v), and edges are listed in lexicographic order of their
// endpoint pairs.  Symmetries come from permutations of the underlying letter
// alphabet.

#include "gog/graph.hpp"
#include "gog/group.hpp"
#include "gog/quotient.hpp"
#include "gog/weighted.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gog {

// Complete graph on vertices a, b, c, d.
inline HalfEdgeGraph make_k4() {
    std::vector<std::string> vs = {"a", "b", "c", "d"};
    std::vector<std::pair<std::string, std::string>> hs;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            std::string h1 = vs[i] + ">" + vs[j], h2 = vs[j] + ">" + vs[i];
            hs.emplace_back(h1, vs[i]);
            hs.emplace_back(h2, vs[j]);
            pairs.emplace_back(h1, h2);
        }
    return HalfEdgeGraph(vs, hs, pairs, {});
}

// Kneser graph K(5,2): vertices are 2-subsets of {a..e}, edges join disjoint
// subsets.  This is the Petersen graph.
inline HalfEdgeGraph make_petersen() {
    std::string letters = "abcde";
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            vs.push_back(std::string() + letters[i] + letters[j]);
    std::vector<std::pair<std::string, std::string>> hs, pairs;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const std::string &u = vs[i], &v = vs[j];
            if (u.find(v[0]) != std::string::npos || u.find(v[1]) != std::string::npos) continue;
            std::string h1 = u + ">" + v, h2 = v + ">" + u;
            hs.emplace_back(h1, u);
            hs.emplace_back(h2, v);
            pairs.emplace_back(h1, h2);
        }
    return HalfEdgeGraph(vs, hs, pairs, {});
}

// Cycle with n vertices v0..v{n-1}; n = 1 gives a single loop, n = 2 a
// doubled edge.
inline HalfEdgeGraph make_cycle(int n) {
    std::vector<std::string> vs;
    for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> hs, pairs;
    for (int i = 0; i < n; ++i) {
        std::string h1 = "e" + std::to_string(i) + "+", h2 = "e" + std::to_string(i) + "-";
        hs.emplace_back(h1, vs[i]);
        hs.emplace_back(h2, vs[(i + 1) % n]);
        pairs.emplace_back(h1, h2);
    }
    return HalfEdgeGraph(vs, hs, pairs, {});
}

// Path with n vertices v0..v{n-1} and n-1 edges.
inline HalfEdgeGraph make_path(int n) {
    std::vector<std::string> vs;
    for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> hs, pairs;
    for (int i = 0; i + 1 < n; ++i) {
        std::string h1 = "e" + std::to_string(i) + "+", h2 = "e" + std::to_string(i) + "-";
        hs.emplace_back(h1, vs[i]);
        hs.emplace_back(h2, vs[i + 1]);
        pairs.emplace_back(h1, h2);
    }
    return HalfEdgeGraph(vs, hs, pairs, {});
}

// ---------------------------------------------------------------------------
// Letter-permutation symmetries.
//
// A cycle string like "(ab)(cd)" describes a permutation of the letters a..e.
// It acts on a fixture graph by relabelling: a vertex label is the sorted
// image of its letters, and a half-edge "u>v" maps to "u'>v'".

namespace detail {

inline std::map<char, char> letter_map(const std::string& cycles) {
    std::map<char, char> m;
    for (char c = 'a'; c <= 'e'; ++c) m[c] = c;
    std::string cur;
    auto flush = [&]() {
        for (std::size_t i = 0; i < cur.size(); ++i) m[cur[i]] = cur[(i + 1) % cur.size()];
        cur.clear();
    };
    for (char c : cycles) {
        if (c == '(') {
            cur.clear();
        } else if (c == ')') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    return m;
}

inline std::string map_vertex_label(const std::map<char, char>& m, const std::string& label) {
    std::string out;
    for (char c : label) out.push_back(m.at(c));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

inline ActionElement letter_perm(const HalfEdgeGraph& g, const std::string& cycles) {
    std::map<char, char> m = detail::letter_map(cycles);
    ActionElement e;
    e.vperm.resize(g.nv());
    e.hperm.resize(g.nh());
    for (int v = 0; v < g.nv(); ++v)
        e.vperm[v] = g.vertex_index(detail::map_vertex_label(m, g.vertex_label(v)));
    for (int h = 0; h < g.nh(); ++h) {
        std::string label = g.halfedge_label(h);
        std::size_t gt = label.find('>');
        std::string u = detail::map_vertex_label(m, label.substr(0, gt));
        std::string v = detail::map_vertex_label(m, label.substr(gt + 1));
        e.hperm[h] = g.halfedge_index(u + ">" + v);
    }
    return e;
}

inline GraphAction letter_action(const HalfEdgeGraph& g, const std::vector<std::string>& cycles) {
    std::vector<ActionElement> gens;
    for (const std::string& c : cycles) gens.push_back(letter_perm(g, c));
    return GraphAction(g, std::move(gens), std::vector<std::string>(cycles));
}

// ---------------------------------------------------------------------------
// Catalog of symmetry subgroups with known quotient Jacobians.

struct SubgroupRow {
    std::string name;                   // conventional name of the subgroup
    std::vector<std::string> cycles;    // letter-cycle generators
    std::vector<Int> jacobian_factors;  // invariant factors >= 2 of Jac(quotient)
    Int jacobian_order;                 // |Jac(quotient)|
};

// Subgroups of Sym{a..d} acting on K4.  Jac(K4) itself is Z/4 + Z/4, order 16.
// "C2x2" is the C2 generated by a double transposition; "V4" is the Klein
// four-group <(ab), (cd)>.
inline std::vector<SubgroupRow> k4_subgroup_rows() {
    return {
        {"C2", {"(ab)"}, {Int(4)}, Int(4)},
        {"C2x2", {"(ab)(cd)"}, {Int(2)}, Int(2)},
        {"V4", {"(ab)", "(cd)"}, {Int(2)}, Int(2)},
        {"C3", {"(abc)"}, {}, Int(1)},
    };
}

// Subgroups of Sym{a..e} acting on the Petersen graph.
// Jac(Petersen) is Z/2 + (Z/10)^3, order 2000, with 2000 spanning trees.
// "V4f" is the fixed-point-free Klein four-group of double transpositions;
// "V4" is <(ab), (cd)> as in the K4 catalog.
inline std::vector<SubgroupRow> petersen_subgroup_rows() {
    return {
        {"C2", {"(ab)"}, {Int(10), Int(10)}, Int(100)},
        {"C3", {"(abc)"}, {Int(5)}, Int(5)},
        {"C2x2", {"(ab)(cd)"}, {Int(2), Int(10)}, Int(20)},
        {"V4f", {"(ab)(cd)", "(ac)(bd)"}, {Int(2), Int(2)}, Int(4)},
        {"C4", {"(abcd)"}, {Int(2)}, Int(2)},
        {"V4", {"(ab)", "(cd)"}, {Int(10)}, Int(10)},
        {"S3", {"(ab)", "(abc)"}, {Int(5)}, Int(5)},
        {"D4", {"(abcd)", "(ac)"}, {Int(2)}, Int(2)},
    };
}

// ---------------------------------------------------------------------------
// Expected quotient data (literature values, cross-checked).

// Quotient of K4 by C2 = <(ab)>: vertices [a, c, d] with weights [1, 2, 2].
// Degree matrix, adjacency matrix and Laplacian in that vertex order.
inline Matrix<Int> k4_c2_expected_q() { return Matrix<Int>{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}; }
inline Matrix<Int> k4_c2_expected_a() { return Matrix<Int>{{1, 2, 2}, {1, 0, 1}, {1, 1, 0}}; }
inline Matrix<Int> k4_c2_expected_l() {
    return Matrix<Int>{{2, -2, -2}, {-1, 3, -1}, {-1, -1, 3}};
}

// Quotient of K4 by C3 = <(abc)>: vertices [a, d] with weights [1, 3],
// one plain edge and one loop at a, no legs.
inline Matrix<Int> k4_c3_expected_q() { return Matrix<Int>{{3, 0}, {0, 3}}; }
inline Matrix<Int> k4_c3_expected_a() { return Matrix<Int>{{2, 3}, {1, 0}}; }
inline Matrix<Int> k4_c3_expected_l() { return Matrix<Int>{{1, -3}, {-1, 3}}; }

// Quotient of the Petersen graph by S3 = <(ab), (abc)>: four vertex classes
// with stabilizer orders 2, 2, 2, 6 and four edges, no legs.
inline std::vector<std::pair<std::string, Int>> petersen_s3_expected_vertex_weights() {
    return {{"ab", Int(2)}, {"ad", Int(2)}, {"ae", Int(2)}, {"de", Int(6)}};
}
inline std::vector<std::pair<std::string, Int>> petersen_s3_expected_halfedge_weights() {
    return {{"ab>cd", Int(2)}, {"ad>bc", Int(2)}, {"ab>ce", Int(2)}, {"ae>bc", Int(2)},
            {"ab>de", Int(2)}, {"de>ab", Int(2)}, {"ad>be", Int(1)}, {"ae>bd", Int(1)}};
}

// ---------------------------------------------------------------------------
// Symmetries of a quotient descended from the cover.
//
// If sigma is a symmetry of the cover normalizing the acting group, it
// descends to the quotient: a class maps to the class of the image of its
// section.  Used to build symmetry groups acting on quotient graphs.

inline ActionElement descend_to_quotient(const QuotientData& q, const ActionElement& sigma) {
    const HalfEdgeGraph& qg = q.quotient.graph();
    ActionElement out;
    out.vperm.resize(qg.nv());
    out.hperm.resize(qg.nh());
    for (int qv = 0; qv < qg.nv(); ++qv)
        out.vperm[qv] = q.projection.vertex_map[sigma.vperm[q.vertex_section[qv]]];
    for (int qh = 0; qh < qg.nh(); ++qh)
        out.hperm[qh] = q.projection.halfedge_map[sigma.hperm[q.halfedge_section[qh]]];
    return out;
}

// Klein four-group of symmetries of the quotient of the Petersen graph by
// <(ab)(cd)>, descended from the letter permutations (ab) and (ac)(bd).
inline GraphAction petersen_ogod_symmetry(const HalfEdgeGraph& petersen, const QuotientData& q) {
    std::vector<ActionElement> gens = {descend_to_quotient(q, letter_perm(petersen, "(ab)")),
                                       descend_to_quotient(q, letter_perm(petersen, "(ac)(bd)"))};
    return GraphAction(q.quotient.graph(), std::move(gens), {"s", "t"});
}

// Expected orbit classes of the ogods of Petersen//<(ab)(cd)> under the
// symmetry above: (class size, weight) pairs in sorted order.
// 15 classes; sizes sum to 46 ogods, size*weight sums to 100.
inline std::vector<std::pair<int, Int>> petersen_expected_ogod_classes() {
    return {{1, Int(4)}, {1, Int(4)}, {2, Int(1)}, {2, Int(1)}, {2, Int(4)},
            {2, Int(4)}, {4, Int(1)}, {4, Int(1)}, {4, Int(2)}, {4, Int(2)},
            {4, Int(2)}, {4, Int(2)}, {4, Int(2)}, {4, Int(2)}, {4, Int(4)}};
}

}  // namespace gog
