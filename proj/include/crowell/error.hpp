#pragma once

#include <stdexcept>
#include <string>

namespace crowell {

// Failure classes surfaced by the library.  Parsing and validation problems
// (everything through ColoringConflict) mean the input was rejected; the
// remaining kinds mean an operation's precondition did not hold.
enum class ErrorKind {
    MalformedToken,      // PD text did not lex/shape as X(a,b,c,d) tokens
    ArcCountMismatch,    // arc ids are not {1..2n} each used exactly twice
    MultiComponent,      // closure tracing does not give one oriented curve
    NonplanarEmbedding,  // rotation system fails Euler's formula V-E+F=2
    ColoringConflict,    // face 2-coloring is inconsistent (corrupt input)
    NotAlternating,      // diagram is not alternating
    NotReduced,          // diagram has a nugatory crossing
    NotATree,            // edge set is not a rooted tree directed off the root
    EdgeIntoRoot,        // operation needs an edge whose head is not the root
    NoStates,            // graph admits no spanning arborescence at this root
    NotTerminal,         // vertex is not a leaf of the state
    KinkVertex,          // the replacement edge is a loop at the vertex
    VertexIsRoot,        // operation is undefined at the root
    NotFound,            // no admissible vertex/edge exists
    HypothesisViolation, // reduced/prime hypothesis (or a consequence) failed
    InvalidN,            // torus family parameter out of range
    PolyMismatch,        // polynomial is not of the expected torus form
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::MalformedToken: return "MalformedToken";
    case ErrorKind::ArcCountMismatch: return "ArcCountMismatch";
    case ErrorKind::MultiComponent: return "MultiComponent";
    case ErrorKind::NonplanarEmbedding: return "NonplanarEmbedding";
    case ErrorKind::ColoringConflict: return "ColoringConflict";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::EdgeIntoRoot: return "EdgeIntoRoot";
    case ErrorKind::NoStates: return "NoStates";
    case ErrorKind::NotTerminal: return "NotTerminal";
    case ErrorKind::KinkVertex: return "KinkVertex";
    case ErrorKind::VertexIsRoot: return "VertexIsRoot";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::InvalidN: return "InvalidN";
    case ErrorKind::PolyMismatch: return "PolyMismatch";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace crowell
