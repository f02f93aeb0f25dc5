#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "roomassign/budget.hpp"
#include "roomassign/core.hpp"

namespace roomassign {

/// Result of a Pareto-optimality check: optimal, or a feasible assignment
/// that dominates the one queried.
class verdict {
public:
    static verdict pareto_optimal() { return verdict{}; }
    static verdict dominated_by(assignment witness) { return verdict{std::move(witness)}; }

    bool is_pareto_optimal() const noexcept { return !witness_.has_value(); }
    const std::optional<assignment>& witness() const noexcept { return witness_; }

private:
    verdict() = default;
    explicit verdict(assignment w) : witness_(std::move(w)) {}
    std::optional<assignment> witness_;
};

enum class verify_method { pruned, brute };

/// Called once per enumerated assignment; return false to stop early.
using assignment_visitor = std::function<bool(const assignment&)>;

enum class enumeration_status { complete, stopped };

/// Streams every feasible assignment exactly once, in canonical form.
/// Throws budget_exhausted when the budget runs out.
enumeration_status enumerate_feasible(const instance& inst, const assignment_visitor& visit,
                                      const search_budget& budget = {});

std::vector<assignment> all_feasible(const instance& inst, const search_budget& budget = {});

std::optional<assignment> find_feasible(const instance& inst, const search_budget& budget = {});

/// Pruned: backtracking restricted to assignments where nobody is worse
/// off, with at least one player strictly better. Brute: a scan over
/// enumerate_feasible. Both return the same verdict; the witness may differ.
verdict verify_poa(const instance& inst, const assignment& a,
                   verify_method method = verify_method::pruned, const search_budget& budget = {});

struct improvement_chain {
    assignment result;
    std::size_t length = 0;
    /// rank_potential of every assignment on the chain, start first.
    std::vector<long> potentials;
};

/// Follows Pareto improvements (first witness of the pruned search) from
/// start until a Pareto optimal assignment is reached.
improvement_chain improve_to_poa(const instance& inst, const assignment& start,
                                 const search_budget& budget = {});

/// A Pareto optimal assignment by exhaustive enumeration: the first
/// canonical feasible assignment of minimum rank potential. Absent iff no
/// feasible assignment exists.
std::optional<assignment> find_poa_brute(const instance& inst, const search_budget& budget = {});

/// Every Pareto optimal assignment, canonical, in enumeration order.
std::vector<assignment> enumerate_poa(const instance& inst, const search_budget& budget = {});

/// A feasible assignment giving every player coalition value Rank(1).
std::optional<assignment> find_unanimous_best(const instance& inst,
                                              const search_budget& budget = {});

/// Number of capacity-respecting partitions, n! / (prod r_i! * prod mult(c)!).
/// Equals the feasible count when lists are complete.
unsigned long long partition_count(const room_spec& rooms);

}  // namespace roomassign
