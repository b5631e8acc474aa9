#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace projsys {

enum class ErrorCode {
    NotPrimePower,
    Unsupported,
    DivisionByZero,
    Overflow,
    MixedAmbient,
    CodimTooSmall,
    RankDeficient,
    EmptyQuotient,
    QOdd,
    BadDegree,
    AmbientMismatch,
    ModeMismatch,
    RuleViolation,
    ForcingViolated,
    Parse,
    Precondition,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` carries the failure category.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

inline std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPrimePower: return "NotPrimePower";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::MixedAmbient: return "MixedAmbient";
        case ErrorCode::CodimTooSmall: return "CodimTooSmall";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::EmptyQuotient: return "EmptyQuotient";
        case ErrorCode::QOdd: return "QOdd";
        case ErrorCode::BadDegree: return "BadDegree";
        case ErrorCode::AmbientMismatch: return "AmbientMismatch";
        case ErrorCode::ModeMismatch: return "ModeMismatch";
        case ErrorCode::RuleViolation: return "RuleViolation";
        case ErrorCode::ForcingViolated: return "ForcingViolated";
        case ErrorCode::Parse: return "Parse";
        case ErrorCode::Precondition: return "Precondition";
    }
    return "Unknown";
}

}  // namespace projsys
