#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace surgery {

// Error taxonomy shared by every module.  The CLI maps kinds onto process
// exit codes: domain errors exit 2, hypothesis violations exit 3, parse/IO
// errors exit 4, internal-consistency failures exit 1.
enum class ErrorKind {
    ZeroDenominator,
    DivisionByZero,
    DenominatorNotInvertible,
    NotCoprime,
    NonIntegral,
    NonHalfInteger,
    DegenerateMatrix,
    NotHomologyCompatible,
    NullHomologousKnot,
    DivisibilityFailure,
    Ell0DivisibleByThree,
    HypothesisViolated,
    InvalidTorusParameter,
    MissingCoverData,
    InternalInconsistency,
    ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::DenominatorNotInvertible: return "DenominatorNotInvertible";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::NonIntegral: return "NonIntegral";
        case ErrorKind::NonHalfInteger: return "NonHalfInteger";
        case ErrorKind::DegenerateMatrix: return "DegenerateMatrix";
        case ErrorKind::NotHomologyCompatible: return "NotHomologyCompatible";
        case ErrorKind::NullHomologousKnot: return "NullHomologousKnot";
        case ErrorKind::DivisibilityFailure: return "DivisibilityFailure";
        case ErrorKind::Ell0DivisibleByThree: return "Ell0DivisibleByThree";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::InvalidTorusParameter: return "InvalidTorusParameter";
        case ErrorKind::MissingCoverData: return "MissingCoverData";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace surgery
