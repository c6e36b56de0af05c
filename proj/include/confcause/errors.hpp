#pragma once

#include <stdexcept>
#include <string>

namespace confcause {

/// Raised for malformed inputs and violated caller-side preconditions.
/// The CLI maps this family to exit code 2; anything else exits 1.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse failure with a 1-based source position.
class parse_error : public error {
public:
    parse_error(const std::string& message, int line, int column)
        : error(message + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace confcause
