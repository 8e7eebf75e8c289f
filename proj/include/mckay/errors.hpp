#pragma once

#include <stdexcept>
#include <string>

namespace mckay {

// Bad user input: unknown group name, unsupported mode for an input, malformed
// flags. CLI exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical identity that the library promises to uphold failed on the
// given data (e.g. a polynomial division that must be exact left a remainder,
// or a cross-method comparison diverged). CLI exit code 3.
struct identity_error : std::runtime_error {
    explicit identity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// The implementation contradicted itself (lost closure, non-integral solve
// where integrality is guaranteed, failed orthogonality after table
// construction). Always a bug, never user-correctable. CLI exit code 4.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace mckay
