#pragma once

#include <stdexcept>
#include <string>

namespace pgw {

// Malformed input: bad spec files, bad algebra JSON, signature mismatches.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax error in a spec file, with 1-based position.
class ParseError : public InputError {
public:
    ParseError(int line, int col, const std::string& msg)
        : InputError("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line(line),
          col(col) {}

    int line;
    int col;
};

// A configured resource limit (cell assignments, evaluation steps, wall clock)
// was hit before the operation finished.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pgw
