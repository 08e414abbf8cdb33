#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symbern {

/**
 * Error taxonomy shared by every module. The CLI maps each code to a
 * machine-readable string and an exit status.
 */
enum class ErrorCode {
    DimensionOutOfRange,
    DimensionMismatch,
    DimensionTooLarge,
    NotAPmf,
    NotSymmetricMarginals,
    ZeroPolynomial,
    NotInIdeal,
    InvalidLambda,
    KernelNotPalindromic,
    KernelElementNotStar,
    ZeroCombination,
    InputOutOfRange,
    IndexOutOfRange,
    NotKernelStar,
    ParseError,
    Io,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace symbern
