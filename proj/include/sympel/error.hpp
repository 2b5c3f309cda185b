#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sympel {

/// Domain error: bad input, unsatisfied precondition, numerical breakdown.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text-format error carrying a 1-based source position.
class parse_error : public error {
public:
    parse_error(const std::string& msg, std::size_t line, std::size_t column)
        : error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace sympel
