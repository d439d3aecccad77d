#pragma once

#include <stdexcept>
#include <string>

namespace spinflat {

// Thrown on malformed input text or matrices. CLI exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when group closure exceeds the configured element cap. CLI exit code 3.
struct CapExceededError : std::runtime_error {
    explicit CapExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an internal consistency check fails (a bug, or input that
// violates a documented contract in a way we can detect). CLI exit code 4.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Signed 64-bit arithmetic overflowed. Results would be garbage, so this is
// fatal rather than a warning. CLI exit code 4.
struct OverflowError : InternalError {
    explicit OverflowError(const std::string& msg) : InternalError(msg) {}
};

} // namespace spinflat
