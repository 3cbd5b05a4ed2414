#pragma once

#include <stdexcept>
#include <string>

namespace reccalc {

/// Exact division produced a nonzero remainder where the algebra guarantees
/// none. Reaching this means an internal invariant is broken, not bad input.
class ExactDivisionError : public std::logic_error {
public:
    explicit ExactDivisionError(const std::string& what) : std::logic_error(what) {}
};

/// Lookup of a named entity (catalog entry) failed.
class NotFoundError : public std::invalid_argument {
public:
    explicit NotFoundError(const std::string& what) : std::invalid_argument(what) {}
};

/// Syntax or semantic error in a recurrence spec, with a 1-based source
/// position suitable for diagnostics.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error(format(line, column, message)),
          line_(line),
          column_(column),
          message_(message) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    static std::string format(int line, int column, const std::string& message) {
        return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    }

    int line_;
    int column_;
    std::string message_;
};

} // namespace reccalc
