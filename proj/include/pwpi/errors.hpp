/**
 * @file errors.hpp
 * @brief Error kinds and the exception type shared by all pwpi modules.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace pwpi {

enum class ErrorKind {
    NotPrimePower,
    Unsupported,
    DimensionMismatch,
    BudgetExceeded,
    CycleDetected,
    IndexOutOfRange,
    NotAnIdeal,
    AxiomViolation,
    EmptyBlock,
    ShapeMismatch,
    LabelMismatch,
    NotInvertible,
    NotPrime,
    DecompositionFailed,
    RankDeficient,
    ParseError,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotPrimePower: return "NotPrimePower";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::CycleDetected: return "CycleDetected";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::NotAnIdeal: return "NotAnIdeal";
        case ErrorKind::AxiomViolation: return "AxiomViolation";
        case ErrorKind::EmptyBlock: return "EmptyBlock";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::LabelMismatch: return "LabelMismatch";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::DecompositionFailed: return "DecompositionFailed";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "UnknownError";
}

/// Exception carrying a machine-readable kind plus a human-readable message.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace pwpi
