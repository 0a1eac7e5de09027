#ifndef VKNOT_ERROR_HPP
#define VKNOT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace vknot {

enum class ErrorCode {
    BadToken,
    OddOccurrence,
    SignMismatch,
    UnknownChord,
    SameChord,
    RoleMismatch,
    OutOfRange,
    NotApplicable,
    DegenerateRegion,
    CapExceeded,
    InvalidWitness,
    BadMoveSpec,
    BadArgument,
};

const char* error_code_name(ErrorCode code);

// All recoverable failures surface as Error; `token` is the 1-based token
// index for parse errors, -1 otherwise.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, int token = -1)
        : std::runtime_error(std::move(message)), code(code), token(token) {}

    ErrorCode code;
    int token;
};

} // namespace vknot

#endif
