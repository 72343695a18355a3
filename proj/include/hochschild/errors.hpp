#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hochschild {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed quiver document. `line()` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A path enumeration or basis would exceed the configured size cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// The closed-form engine does not cover this algebra.
class FormulaDeclined : public Error {
public:
    using Error::Error;
};

} // namespace hochschild
