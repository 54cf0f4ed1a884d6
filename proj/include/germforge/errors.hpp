#pragma once

#include <stdexcept>
#include <string>

namespace germforge {

// Base class for everything thrown by the library. The CLI maps the three
// branches below onto its exit codes (1 = parse/usage, 2 = math, 3 = cap).
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class parse_error : public error {
public:
    parse_error(const std::string& what, int line, int column)
        : error(what + " at line " + std::to_string(line) + " column " +
                std::to_string(column)),
          line_(line), column_(column) {}
    explicit parse_error(const std::string& what) : error(what), line_(0), column_(0) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

// Mathematical inconsistency: inexact division, a non-invariant polynomial
// where an invariant one is required, an unsolvable decomposition, a group
// that is not generated by reflections, and similar.
class math_error : public error {
public:
    using error::error;
};

// Thrown by the closure builder when the element cap is exceeded.
class resource_error : public error {
public:
    using error::error;
};

} // namespace germforge
