#pragma once

#include <stdexcept>
#include <string>

namespace fourier {

enum class ErrorCode {
    ModulusMismatch,
    ZeroInverse,
    NotPrime,
    InvalidParameters,
    LengthMismatch,
    EmptyCode,
    PivotStructure,
    DegenerateConstraint,
    SearchTooLarge,
    Parse,
    Internal,
};

/// Single exception type for the library; `code()` tells callers which
/// contract was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace fourier
