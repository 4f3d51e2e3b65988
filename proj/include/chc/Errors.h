#pragma once

#include <stdexcept>
#include <string>

namespace chc {

struct ChcError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SortError : ChcError {
    using ChcError::ChcError;
};

struct ParseError : ChcError {
    int line;
    int col;
    ParseError(std::string msg, int line, int col)
        : ChcError("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + std::move(msg)),
          line(line), col(col) {}
};

struct UnsupportedCommand : ChcError {
    std::string command;
    UnsupportedCommand(std::string cmd, int line, int col)
        : ChcError("unsupported command '" + cmd + "' at " + std::to_string(line) + ":" + std::to_string(col)),
          command(std::move(cmd)) {}
};

struct NotHorn : ChcError {
    using ChcError::ChcError;
};

struct MixedTheory : ChcError {
    using ChcError::ChcError;
};

struct NonLinearUnsupported : ChcError {
    using ChcError::ChcError;
};

struct BoundsTooLarge : ChcError {
    using ChcError::ChcError;
};

// Backend process died or was killed.
struct BackendCrash : ChcError {
    using ChcError::ChcError;
};

// Backend replied with something we cannot parse.
struct ProtocolError : ChcError {
    using ChcError::ChcError;
};

struct NotUnsat : ChcError {
    using ChcError::ChcError;
};

// The built-in interpolation fallback could not eliminate a variable.
struct FallbackIncomplete : ChcError {
    using ChcError::ChcError;
};

struct PrecisionMismatch : ChcError {
    using ChcError::ChcError;
};

} // namespace chc
