#pragma once

#include <stdexcept>
#include <string>

namespace zg {

enum class ErrorCode {
    Parse,              // malformed expression / grid / rational text
    Domain,             // precondition violation (unknown variable, universe mismatch, ...)
    UnsupportedDegree,  // decomposition requested beyond the supported degree cap
    Budget,             // enumeration budget exceeded
    InvalidArgument,    // bad handle, unknown family name, bad flag value
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace zg
