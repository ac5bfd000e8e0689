#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chordtd {

enum class ErrorCode {
    LoopEdge,
    UnknownVertex,
    NotChordal,
    NotConnected,
    NotASeparation,
    EmptySide,
    CliquesEqual,
    NotNested,
    ImproperSeparation,
    NestednessViolation,
    EmptyBottleneckSelection,
    NotATree,
    NotAClique,
    OrbitNotMatching,
    PreconditionViolated,
    TooLarge,
    NotACover,
    BallNotPreserved,
    LiftCrossesBoundary,
    Unstable,
    WindowNotChordal,
    ActionMismatch,
    BudgetExceeded,
    OutOfRange,
    InvalidInput,
    InternalInvariant,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::NotChordal: return "NotChordal";
        case ErrorCode::NotConnected: return "NotConnected";
        case ErrorCode::NotASeparation: return "NotASeparation";
        case ErrorCode::EmptySide: return "EmptySide";
        case ErrorCode::CliquesEqual: return "CliquesEqual";
        case ErrorCode::NotNested: return "NotNested";
        case ErrorCode::ImproperSeparation: return "ImproperSeparation";
        case ErrorCode::NestednessViolation: return "NestednessViolation";
        case ErrorCode::EmptyBottleneckSelection: return "EmptyBottleneckSelection";
        case ErrorCode::NotATree: return "NotATree";
        case ErrorCode::NotAClique: return "NotAClique";
        case ErrorCode::OrbitNotMatching: return "OrbitNotMatching";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NotACover: return "NotACover";
        case ErrorCode::BallNotPreserved: return "BallNotPreserved";
        case ErrorCode::LiftCrossesBoundary: return "LiftCrossesBoundary";
        case ErrorCode::Unstable: return "Unstable";
        case ErrorCode::WindowNotChordal: return "WindowNotChordal";
        case ErrorCode::ActionMismatch: return "ActionMismatch";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace chordtd
