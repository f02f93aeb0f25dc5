#include "roomassign/budget.hpp"

#include <stdexcept>
#include <string>

#include "roomassign/errors.hpp"

namespace roomassign {

parse_error::parse_error(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) +
                                         (column == 0 ? "" : ", column " + std::to_string(column)) +
                                         ": " + what),
      line_(line),
      column_(column) {}

budget_meter::budget_meter(const search_budget& budget) : budget_(budget) {
    if (budget_.node_limit && *budget_.node_limit == 0) {
        throw std::invalid_argument("node limit must be positive");
    }
    if (budget_.time_limit) {
        if (budget_.time_limit->count() <= 0) {
            throw std::invalid_argument("time limit must be positive");
        }
        deadline_ = std::chrono::steady_clock::now() + *budget_.time_limit;
    }
}

void budget_meter::tick() {
    ++nodes_;
    if (budget_.node_limit && nodes_ > *budget_.node_limit) {
        throw budget_exhausted("node limit of " + std::to_string(*budget_.node_limit) + " reached");
    }
    if (budget_.time_limit && (nodes_ & 1023U) == 0 && std::chrono::steady_clock::now() > deadline_) {
        throw budget_exhausted("time limit of " + std::to_string(budget_.time_limit->count()) +
                               " ms reached");
    }
}

}  // namespace roomassign
