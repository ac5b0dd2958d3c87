#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dualpair {

enum class ErrorCode {
    DivisionByZero,
    NonUnit,
    FieldMismatch,
    BadInput,
    PointNotOnCurve,
    InvalidPoint,
    OrderAmbiguous,
    SearchExhausted,
    NotRational,
    NotCanonical,
    NotPTorsion,
    BadTorsion,
    DegenerateEvaluation,
    NotASubgroup,
    LiftDegenerate,
    WitnessInconsistent,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-readable code so the
// CLI can map it to a stable exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonUnit: return "NonUnit";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::OrderAmbiguous: return "OrderAmbiguous";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::NotRational: return "NotRational";
    case ErrorCode::NotCanonical: return "NotCanonical";
    case ErrorCode::NotPTorsion: return "NotPTorsion";
    case ErrorCode::BadTorsion: return "BadTorsion";
    case ErrorCode::DegenerateEvaluation: return "DegenerateEvaluation";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::LiftDegenerate: return "LiftDegenerate";
    case ErrorCode::WitnessInconsistent: return "WitnessInconsistent";
    }
    return "Unknown";
}

} // namespace dualpair
