#pragma once

// Line-oriented file formats (UTF-8, '#' comments, deterministic output):
//   graph file:    V <label> | H <label> <vertex> | E <h1> <h2> | L <h>
//   weights:       W <vertex> <int> | WH <halfedge> <int>   (default 1)
//   voltages:      B <halfedge> <element-word>              (quotient output)
//   action file:   GEN <name> | PV (a b c)(d e) | PH (h1 h2)(h3 h4)
//   morphism file: MV <src> <dst> | MH <src> <dst>

#include "gog/errors.hpp"
#include "gog/graph.hpp"
#include "gog/group.hpp"
#include "gog/morphism.hpp"
#include "gog/quotient.hpp"
#include "gog/weighted.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gog {

namespace detail {

inline std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        out.emplace_back(number, line.substr(a, b - a + 1));
    }
    return out;
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline Int parse_int(const std::string& s, int line) {
    try {
        Int v(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line) + ": '" + s + "' is not an integer");
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graphs and graphs of groups.

struct GogFile {
    GraphOfGroups gog;
    std::vector<std::string> beta_words;  // per half-edge; empty when absent
    bool has_weights = false;
};

inline GogFile parse_gog_file(const std::string& text) {
    std::vector<std::string> vertices, legs;
    std::vector<std::pair<std::string, std::string>> halfedges, pairs;
    std::vector<std::tuple<int, std::string, std::string>> wlines, whlines, blines;
    for (const auto& [num, line] : detail::content_lines(text)) {
        std::vector<std::string> tok = detail::split_ws(line);
        const std::string& d = tok[0];
        auto want = [&](std::size_t k) {
            if (tok.size() != k + 1)
                throw ParseError("line " + std::to_string(num) + ": '" + d + "' expects " +
                                 std::to_string(k) + " arguments");
        };
        if (d == "V") {
            want(1);
            vertices.push_back(tok[1]);
        } else if (d == "H") {
            want(2);
            halfedges.emplace_back(tok[1], tok[2]);
        } else if (d == "E") {
            want(2);
            pairs.emplace_back(tok[1], tok[2]);
        } else if (d == "L") {
            want(1);
            legs.push_back(tok[1]);
        } else if (d == "W") {
            want(2);
            wlines.emplace_back(num, tok[1], tok[2]);
        } else if (d == "WH") {
            want(2);
            whlines.emplace_back(num, tok[1], tok[2]);
        } else if (d == "B") {
            want(2);
            blines.emplace_back(num, tok[1], tok[2]);
        } else {
            throw ParseError("line " + std::to_string(num) + ": unknown directive '" + d + "'");
        }
    }
    HalfEdgeGraph g;
    try {
        g = HalfEdgeGraph(vertices, halfedges, pairs, legs);
    } catch (const ParseError&) {
        throw;
    }
    GogFile out;
    std::vector<Int> c_v(g.nv(), Int(1)), c_h(g.nh(), Int(1));
    for (const auto& [num, label, value] : wlines) {
        if (!g.has_vertex(label))
            throw ParseError("line " + std::to_string(num) + ": unknown vertex '" + label + "'");
        c_v[g.vertex_index(label)] = detail::parse_int(value, num);
        out.has_weights = true;
    }
    for (const auto& [num, label, value] : whlines) {
        int h;
        try {
            h = g.halfedge_index(label);
        } catch (const ParseError&) {
            throw ParseError("line " + std::to_string(num) + ": unknown half-edge '" + label + "'");
        }
        c_h[h] = detail::parse_int(value, num);
        out.has_weights = true;
    }
    out.beta_words.assign(g.nh(), "");
    for (const auto& [num, label, word] : blines) {
        int h;
        try {
            h = g.halfedge_index(label);
        } catch (const ParseError&) {
            throw ParseError("line " + std::to_string(num) + ": unknown half-edge '" + label + "'");
        }
        out.beta_words[h] = word;
    }
    out.gog = GraphOfGroups(std::move(g), std::move(c_v), std::move(c_h));
    return out;
}

inline HalfEdgeGraph parse_graph(const std::string& text) {
    return parse_gog_file(text).gog.graph();
}

// Apply a separate weights file (W/WH lines only) to a parsed graph.
inline GraphOfGroups parse_weights(const std::string& text, const HalfEdgeGraph& g) {
    std::vector<Int> c_v(g.nv(), Int(1)), c_h(g.nh(), Int(1));
    for (const auto& [num, line] : detail::content_lines(text)) {
        std::vector<std::string> tok = detail::split_ws(line);
        if (tok[0] == "W" && tok.size() == 3) {
            if (!g.has_vertex(tok[1]))
                throw ParseError("line " + std::to_string(num) + ": unknown vertex '" + tok[1] +
                                 "'");
            c_v[g.vertex_index(tok[1])] = detail::parse_int(tok[2], num);
        } else if (tok[0] == "WH" && tok.size() == 3) {
            try {
                c_h[g.halfedge_index(tok[1])] = detail::parse_int(tok[2], num);
            } catch (const ParseError&) {
                throw ParseError("line " + std::to_string(num) + ": unknown half-edge '" + tok[1] +
                                 "'");
            }
        } else {
            throw ParseError("line " + std::to_string(num) +
                             ": weights files contain only W/WH lines");
        }
    }
    return GraphOfGroups(g, std::move(c_v), std::move(c_h));
}

inline std::string serialize_graph(const HalfEdgeGraph& g) {
    std::string out;
    for (int v = 0; v < g.nv(); ++v) out += "V " + g.vertex_label(v) + "\n";
    for (int h = 0; h < g.nh(); ++h)
        out += "H " + g.halfedge_label(h) + " " + g.vertex_label(g.root(h)) + "\n";
    for (const Edge& e : g.edges())
        out += "E " + g.halfedge_label(e.h1) + " " + g.halfedge_label(e.h2) + "\n";
    for (int h : g.legs()) out += "L " + g.halfedge_label(h) + "\n";
    return out;
}

inline std::string serialize_quotient(const QuotientData& q) {
    const HalfEdgeGraph& g = q.quotient.graph();
    std::string out = serialize_graph(g);
    for (int v = 0; v < g.nv(); ++v)
        out += "W " + g.vertex_label(v) + " " + q.quotient.c_vertex(v).str() + "\n";
    for (int h = 0; h < g.nh(); ++h)
        out += "WH " + g.halfedge_label(h) + " " + q.quotient.c_halfedge(h).str() + "\n";
    for (int h = 0; h < g.nh(); ++h)
        out += "B " + g.halfedge_label(h) + " " + q.voltage.group.names[q.beta[h]] + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Actions in cycle notation.

namespace detail {

// "(a b c)(d e)" -> list of cycles of labels.
inline std::vector<std::vector<std::string>> parse_cycles(const std::string& s, int line) {
    std::vector<std::vector<std::string>> cycles;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        if (s[i] != '(')
            throw ParseError("line " + std::to_string(line) + ": expected '(' in cycle notation");
        std::size_t close = s.find(')', i);
        if (close == std::string::npos)
            throw ParseError("line " + std::to_string(line) + ": unbalanced cycle");
        std::vector<std::string> cyc = split_ws(s.substr(i + 1, close - i - 1));
        if (cyc.size() < 2)
            throw ParseError("line " + std::to_string(line) + ": cycle needs at least two labels");
        cycles.push_back(std::move(cyc));
        i = close + 1;
    }
    return cycles;
}

template <typename IndexOf>
inline void apply_cycles(std::vector<int>& perm, const std::vector<std::vector<std::string>>& cycles,
                         IndexOf index_of, int line) {
    // Compose the existing permutation with the cycles (cycles act after).
    std::vector<int> cyc_perm(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) cyc_perm[i] = static_cast<int>(i);
    for (const auto& cyc : cycles) {
        std::vector<int> ids;
        for (const std::string& label : cyc) ids.push_back(index_of(label, line));
        for (std::size_t k = 0; k < ids.size(); ++k) cyc_perm[ids[k]] = ids[(k + 1) % ids.size()];
    }
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = cyc_perm[perm[i]];
}

}  // namespace detail

inline GraphAction parse_action(const std::string& text, const HalfEdgeGraph& g,
                                int closure_cap = GraphAction::kDefaultClosureCap) {
    std::vector<ActionElement> gens;
    std::vector<std::string> names;
    ActionElement current;
    bool open = false;
    auto vindex = [&](const std::string& label, int line) {
        if (!g.has_vertex(label))
            throw ParseError("line " + std::to_string(line) + ": unknown vertex '" + label + "'");
        return g.vertex_index(label);
    };
    auto hindex = [&](const std::string& label, int line) {
        try {
            return g.halfedge_index(label);
        } catch (const ParseError&) {
            throw ParseError("line " + std::to_string(line) + ": unknown half-edge '" + label +
                             "'");
        }
    };
    auto flush = [&]() {
        if (open) gens.push_back(current);
        open = false;
    };
    for (const auto& [num, line] : detail::content_lines(text)) {
        std::vector<std::string> tok = detail::split_ws(line);
        if (tok[0] == "GEN") {
            if (tok.size() != 2)
                throw ParseError("line " + std::to_string(num) + ": GEN expects a name");
            flush();
            open = true;
            names.push_back(tok[1]);
            current.vperm.assign(g.nv(), 0);
            current.hperm.assign(g.nh(), 0);
            for (int v = 0; v < g.nv(); ++v) current.vperm[v] = v;
            for (int h = 0; h < g.nh(); ++h) current.hperm[h] = h;
        } else if (tok[0] == "PV" || tok[0] == "PH") {
            if (!open)
                throw ParseError("line " + std::to_string(num) + ": " + tok[0] +
                                 " before any GEN line");
            std::string rest = line.substr(2);
            auto cycles = detail::parse_cycles(rest, num);
            if (tok[0] == "PV")
                detail::apply_cycles(current.vperm, cycles, vindex, num);
            else
                detail::apply_cycles(current.hperm, cycles, hindex, num);
        } else {
            throw ParseError("line " + std::to_string(num) + ": unknown directive '" + tok[0] +
                             "' in action file");
        }
    }
    flush();
    return GraphAction(g, std::move(gens), std::move(names), closure_cap);
}

inline std::string serialize_action(const GraphAction& a) {
    const HalfEdgeGraph& g = a.graph();
    std::string out;
    auto cycles_of = [](const std::vector<int>& perm) {
        std::vector<std::vector<int>> cycles;
        std::vector<char> seen(perm.size(), 0);
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (seen[i] || perm[i] == static_cast<int>(i)) continue;
            std::vector<int> cyc;
            std::size_t j = i;
            while (!seen[j]) {
                seen[j] = 1;
                cyc.push_back(static_cast<int>(j));
                j = static_cast<std::size_t>(perm[j]);
            }
            cycles.push_back(std::move(cyc));
        }
        return cycles;
    };
    for (std::size_t gi = 0; gi < a.generators().size(); ++gi) {
        out += "GEN " + a.generator_names()[gi] + "\n";
        const ActionElement& e = a.generators()[gi];
        std::string pv, ph;
        for (const auto& cyc : cycles_of(e.vperm)) {
            pv += "(";
            for (std::size_t k = 0; k < cyc.size(); ++k)
                pv += (k ? " " : "") + g.vertex_label(cyc[k]);
            pv += ")";
        }
        for (const auto& cyc : cycles_of(e.hperm)) {
            ph += "(";
            for (std::size_t k = 0; k < cyc.size(); ++k)
                ph += (k ? " " : "") + g.halfedge_label(cyc[k]);
            ph += ")";
        }
        if (!pv.empty()) out += "PV " + pv + "\n";
        if (!ph.empty()) out += "PH " + ph + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Morphism files.

inline GraphMorphism parse_morphism(const std::string& text, const HalfEdgeGraph& source,
                                    const HalfEdgeGraph& target) {
    GraphMorphism m{source, target, std::vector<int>(source.nv(), -1),
                    std::vector<int>(source.nh(), -1)};
    for (const auto& [num, line] : detail::content_lines(text)) {
        std::vector<std::string> tok = detail::split_ws(line);
        if (tok.size() != 3 || (tok[0] != "MV" && tok[0] != "MH"))
            throw ParseError("line " + std::to_string(num) +
                             ": morphism files contain MV/MH lines");
        if (tok[0] == "MV") {
            if (!source.has_vertex(tok[1]) || !target.has_vertex(tok[2]))
                throw ParseError("line " + std::to_string(num) + ": unknown vertex");
            m.vertex_map[source.vertex_index(tok[1])] = target.vertex_index(tok[2]);
        } else {
            try {
                m.halfedge_map[source.halfedge_index(tok[1])] = target.halfedge_index(tok[2]);
            } catch (const ParseError&) {
                throw ParseError("line " + std::to_string(num) + ": unknown half-edge");
            }
        }
    }
    for (int v = 0; v < source.nv(); ++v)
        if (m.vertex_map[v] == -1)
            throw ParseError("morphism does not map vertex '" + source.vertex_label(v) + "'");
    for (int h = 0; h < source.nh(); ++h)
        if (m.halfedge_map[h] == -1)
            throw ParseError("morphism does not map half-edge '" + source.halfedge_label(h) + "'");
    return m;
}

// ---------------------------------------------------------------------------
// Small file helpers.

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file '" + path + "'");
    out << content;
}

}  // namespace gog
