#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace roomassign {

/// An operation was called outside its documented domain (wrong mode,
/// ties where strict lists are required, infeasible assignment, ...).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A search hit its node or time limit before reaching an answer.
class budget_exhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. Line and column are 1-based; 0 means "not tied to a position".
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line, std::size_t column = 0);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace roomassign
