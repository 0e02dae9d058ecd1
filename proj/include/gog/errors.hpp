#pragma once

// Error vocabulary of the library.  Every error is an exception carrying a
// human-readable message; several carry structured witnesses as well.

#include <stdexcept>
#include <string>

namespace gog {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define GOG_DEFINE_ERROR(NAME)                                        \
    struct NAME : Error {                                             \
        explicit NAME(const std::string& msg) : Error(#NAME ": " + msg) {} \
    }

// Input / parsing.
GOG_DEFINE_ERROR(ParseError);
GOG_DEFINE_ERROR(UnknownVertex);

// Graph-level preconditions.
GOG_DEFINE_ERROR(DisconnectedGraph);
GOG_DEFINE_ERROR(TreeInput);

// Morphisms.
struct NotHarmonic : Error {
    std::string vertex, halfedge1, halfedge2;  // witness: fiber counts differ over h1 vs h2 at vertex
    NotHarmonic(const std::string& msg, std::string v = {}, std::string h1 = {}, std::string h2 = {})
        : Error("NotHarmonic: " + msg), vertex(std::move(v)), halfedge1(std::move(h1)), halfedge2(std::move(h2)) {}
};

// Group actions.
struct NotAnAction : Error {
    std::string witness_halfedge;  // half-edge where r or iota fails to commute
    NotAnAction(const std::string& msg, std::string witness = {})
        : Error("NotAnAction: " + msg), witness_halfedge(std::move(witness)) {}
};
GOG_DEFINE_ERROR(ClosureCapExceeded);

// Weighted graphs.
GOG_DEFINE_ERROR(DivisibilityViolation);
GOG_DEFINE_ERROR(NonIntegerOrder);
GOG_DEFINE_ERROR(MismatchedAdjugate);
GOG_DEFINE_ERROR(LeadingCoeffMismatch);

// Voltage data / cover assembly.
GOG_DEFINE_ERROR(InvalidVoltage);
GOG_DEFINE_ERROR(IncompatibleSubgroups);

// Lattices.
GOG_DEFINE_ERROR(NotASublattice);
GOG_DEFINE_ERROR(RankMismatch);

// Cover maps.
GOG_DEFINE_ERROR(PresentationSolveFailure);
GOG_DEFINE_ERROR(OrderIdentityViolation);

// Double covers.
GOG_DEFINE_ERROR(NotOrderTwo);
GOG_DEFINE_ERROR(InternalMismatch);
GOG_DEFINE_ERROR(MismatchReport);

#undef GOG_DEFINE_ERROR

}  // namespace gog
