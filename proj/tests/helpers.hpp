#pragma once

// Shared helpers for the test suite.

#include "gog/fixtures.hpp"
#include "gog/io.hpp"
#include "gog/quotient.hpp"

#include <string>

namespace gogtest {

inline std::string fixture_path(const std::string& name) {
    return std::string(GOG_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
    return gog::read_file(fixture_path(name));
}

// Quotient of a named fixture graph by letter-permutation generators.
inline gog::QuotientData letter_quotient(const gog::HalfEdgeGraph& g,
                                         const std::vector<std::string>& cycles) {
    return gog::quotient_graph_of_groups(gog::letter_action(g, cycles));
}

inline std::string matrix_str(const gog::IntMatrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += " ";
            s += m(i, j).str();
        }
    }
    return s;
}

}  // namespace gogtest
