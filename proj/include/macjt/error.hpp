#pragma once

#include <stdexcept>
#include <string>

namespace macjt {

enum class ErrorCode {
    NotDivisible,
    DivisionByZero,
    PoleAtPoint,
    GenuinePole,
    IndexOutOfRange,
    WeightMismatch,
    DegreeCapExceeded,
    NotSymmetric,
    DegenerateConfig,
    IdentityViolated,
    SingularSystem,
    ParseError,
};

const char *to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// that callers (the CLI in particular) can map it onto an exit status.
class MathError : public std::runtime_error {
public:
    MathError(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char *to_string(ErrorCode code) noexcept
{
    switch (code) {
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::PoleAtPoint: return "PoleAtPoint";
        case ErrorCode::GenuinePole: return "GenuinePole";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::WeightMismatch: return "WeightMismatch";
        case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::DegenerateConfig: return "DegenerateConfig";
        case ErrorCode::IdentityViolated: return "IdentityViolated";
        case ErrorCode::SingularSystem: return "SingularSystem";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace macjt
