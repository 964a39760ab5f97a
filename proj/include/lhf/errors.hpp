#pragma once

#include <stdexcept>
#include <string>

namespace lhf {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input data violates a registration constraint (unsorted, duplicates,
/// wrong child arity, bad child index).
struct ValidationError : Error {
    using Error::Error;
};

/// An identifier is out of range or otherwise unusable for the request.
struct IndexError : Error {
    using Error::Error;
};

/// A set was evicted and no producing operation is recorded, so its content
/// cannot be rebuilt.
struct UnrecoverableEviction : Error {
    using Error::Error;
};

/// Malformed instruction or fixture text. Carries a 1-based line number.
struct ParseError : Error {
    ParseError(std::size_t line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line_number(line) {}
    std::size_t line_number;
};

/// Construction blueprint does not match the expected JSON schema.
struct SchemaError : Error {
    SchemaError(const std::string &path, const std::string &what)
        : Error(path + ": " + what), json_path(path) {}
    std::string json_path;
};

} // namespace lhf
