#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace roomassign {

/// Dense 0-based player index.
using player_id = int;

/// How a player values a room: by the rank of her best or of her worst roommate.
enum class comparison_mode { best, worst };

std::string_view to_string(comparison_mode mode);

/// Room capacities, kept sorted ascending. Rooms carry no identity besides
/// their capacity, so the order in which they were given is not preserved.
class room_spec {
public:
    room_spec() = default;
    explicit room_spec(std::vector<int> capacities);

    std::span<const int> capacities() const noexcept { return capacities_; }
    std::size_t size() const noexcept { return capacities_.size(); }
    int operator[](std::size_t room) const { return capacities_.at(room); }
    long total() const noexcept;

    bool operator==(const room_spec&) const = default;

private:
    std::vector<int> capacities_;
};

/// Players sharing one position on a preference list.
using tie_group = std::vector<player_id>;
/// A preference list, best group first.
using preference_list = std::vector<tie_group>;

/// Normalized ordinal preferences of n players over each other.
///
/// Ranks are dense and start at 1: every tie group gets one rank and the
/// next group gets rank + 1. A missing rank means "unacceptable". The
/// strict/complete flags are declarations; validate_instance checks that
/// the ranks honour them.
class preference_profile {
public:
    preference_profile() = default;

    /// Throws std::invalid_argument if a list mentions a player outside
    /// [0, n), the owner herself, or the same player twice.
    static preference_profile from_lists(int n, const std::vector<preference_list>& lists,
                                         bool strict, bool complete);

    /// Row-major n*n matrix of raw ranks, 0 meaning unranked. Ranks are
    /// compressed per player to 1..m_i preserving their order.
    static preference_profile from_ranks(int n, std::span<const int> ranks, bool strict,
                                         bool complete);

    int size() const noexcept { return n_; }
    bool strict() const noexcept { return strict_; }
    bool complete() const noexcept { return complete_; }

    /// Throws std::invalid_argument when i == j or either is out of range.
    std::optional<int> rank(player_id i, player_id j) const;

    /// Unchecked rank lookup; 0 means j is unacceptable to i (or i == j).
    int raw_rank(player_id i, player_id j) const noexcept {
        return ranks_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                      static_cast<std::size_t>(j)];
    }
    bool acceptable(player_id i, player_id j) const noexcept { return raw_rank(i, j) != 0; }

    /// Largest rank on i's list (0 for an empty list).
    int max_rank(player_id i) const { return max_rank_.at(static_cast<std::size_t>(i)); }

    /// i's list as tie groups, members of a group ascending.
    preference_list list_of(player_id i) const;

    bool operator==(const preference_profile&) const = default;

private:
    int n_ = 0;
    std::vector<int> ranks_;
    std::vector<int> max_rank_;
    bool strict_ = true;
    bool complete_ = true;
};

struct instance {
    int n = 0;
    room_spec rooms;
    comparison_mode mode = comparison_mode::best;
    preference_profile prefs;

    bool operator==(const instance&) const = default;
};

struct validation_report {
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

validation_report validate_instance(const instance& inst);

/// Normalized rank of j on i's list, absent if j is unacceptable to i.
std::optional<int> rank_of(const instance& inst, player_id i, player_id j);

/// The value a player attaches to a coalition. Lower ranks are better;
/// infeasible sorts after every rank.
class coalition_value {
public:
    static constexpr coalition_value infeasible() noexcept { return coalition_value{0}; }
    static coalition_value of_rank(int rank);

    bool is_feasible() const noexcept { return rank_ != 0; }
    /// Throws std::logic_error on an infeasible value.
    int rank() const;

    bool operator==(const coalition_value&) const = default;
    std::strong_ordering operator<=>(const coalition_value& other) const noexcept;

private:
    explicit constexpr coalition_value(int rank) noexcept : rank_(rank) {}
    int rank_;
};

std::string to_string(const coalition_value& value);

using coalition = std::vector<player_id>;

/// Rooms aligned index-wise with instance::rooms.
struct assignment {
    std::vector<coalition> rooms;

    bool operator==(const assignment&) const = default;
};

/// Value of coalition c for member i. Throws std::invalid_argument if i is
/// not in c or c has fewer than two members.
coalition_value evaluate_coalition(const instance& inst, player_id i, std::span<const player_id> c);

/// True iff a has one room per capacity, rooms of the right sizes, and every
/// player appears exactly once.
bool is_partition(const instance& inst, const assignment& a);

/// Throws std::invalid_argument describing the first structural defect.
void require_partition(const instance& inst, const assignment& a);

/// Members sorted within rooms; rooms sorted by (capacity, smallest member).
/// Accepts rooms in any order as long as their sizes match the capacity multiset.
assignment canonicalize(const instance& inst, assignment a);

/// room_of[p] = index of p's room. Requires a partition.
std::vector<int> room_of(const instance& inst, const assignment& a);

bool is_feasible(const instance& inst, const assignment& a);

/// Per-player coalition values under a.
std::vector<coalition_value> player_values(const instance& inst, const assignment& a);

/// Sum of ranks over all players; requires a feasible assignment.
long rank_potential(const instance& inst, const assignment& a);

/// True iff a2 is a Pareto improvement over a1. Both must be feasible.
bool dominates(const instance& inst, const assignment& a2, const assignment& a1);

}  // namespace roomassign
