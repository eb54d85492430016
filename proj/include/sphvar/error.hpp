#pragma once

#include <stdexcept>
#include <string>

namespace sphvar {

enum class ErrorCode {
    UnsupportedRegime,
    ShapeMismatch,
    UnsupportedOrder,
    OutOfDomain,
    InvalidExponent,
    InvalidInput,
    TooLarge,
    Unresolvable,
    NoPrediction,
    DegenerateInput,
    RegionViolation,
    Io,
};

const char* error_code_name(ErrorCode code);

/** Error carrying a machine-readable code next to the message. */
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace sphvar
