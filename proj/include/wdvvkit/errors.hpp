#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wdvvkit {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Expression text could not be parsed. `offset` is the byte position of
/// the offending token in the input string.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// The selected pivot slice is identically singular, so the object the
/// caller asked for is undefined (not a mathematical failure verdict).
class DegeneratePivotError : public Error {
public:
    using Error::Error;
};

/// An operation's stated precondition does not hold for the given input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace wdvvkit
