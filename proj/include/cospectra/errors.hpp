#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cospectra {

// Error raised by the text-format readers (cotree grammar, edge lists).
// Carries 1-based line/column so CLI messages can point at the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace cospectra
