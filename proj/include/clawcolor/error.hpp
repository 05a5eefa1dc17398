#ifndef CLAWCOLOR_ERROR_HPP
#define CLAWCOLOR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace clawcolor {

enum class ErrorCode {
    // graph construction and I/O
    LoopEdge,
    VertexOutOfRange,
    MalformedInput,
    Graph6Multiedge,
    // structural preconditions
    Disconnected,
    NotCubic,
    NotSimple,
    NotClawFree,
    NotTwoEdgeConnected,
    NotBridgeless,
    TypeIComponent,
    NonK3Cycle,
    StructureViolation,
    // factorization
    NoMatching,
    EdgeAbsent,
    // coloring
    NotK4,
    NotRingOfDiamonds,
    EdgeNotLiftable,
    VerificationFailed,
    PreconditionViolated,
    ClaimViolated,
    InternalInvariant,
    // oracle
    PartialColoring,
    CapExceeded,
    InvalidSpec,
    // generators
    KTooSmall,
    OddOrder,
    RetryLimit,
    NotCubicH,
    NotTwoEdgeConnectedH,
    InfeasibleSpec,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::Graph6Multiedge: return "Graph6Multiedge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotClawFree: return "NotClawFree";
    case ErrorCode::NotTwoEdgeConnected: return "NotTwoEdgeConnected";
    case ErrorCode::NotBridgeless: return "NotBridgeless";
    case ErrorCode::TypeIComponent: return "TypeIComponent";
    case ErrorCode::NonK3Cycle: return "NonK3Cycle";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::NoMatching: return "NoMatching";
    case ErrorCode::EdgeAbsent: return "EdgeAbsent";
    case ErrorCode::NotK4: return "NotK4";
    case ErrorCode::NotRingOfDiamonds: return "NotRingOfDiamonds";
    case ErrorCode::EdgeNotLiftable: return "EdgeNotLiftable";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ClaimViolated: return "ClaimViolated";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
    case ErrorCode::PartialColoring: return "PartialColoring";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::KTooSmall: return "KTooSmall";
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::RetryLimit: return "RetryLimit";
    case ErrorCode::NotCubicH: return "NotCubicH";
    case ErrorCode::NotTwoEdgeConnectedH: return "NotTwoEdgeConnectedH";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    }
    return "Unknown";
}

/// Every failure raised by the library. The code identifies the contract that
/// was broken; the message carries the diagnostics (vertex ids, witnesses).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &detail) { throw Error(code, detail); }

} // namespace clawcolor

#endif
