#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller violated an operation's contract (sizes, girth, parameter gates).
struct PreconditionError : Error {
    using Error::Error;
};

// Malformed textual input; position is a byte offset into the source.
struct ParseError : Error {
    std::size_t position = 0;
    ParseError(const std::string& message, std::size_t pos)
        : Error(message + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct IoError : Error {
    using Error::Error;
};

} // namespace spc
