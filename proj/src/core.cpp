#include "roomassign/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "roomassign/errors.hpp"

namespace roomassign {

std::string_view to_string(comparison_mode mode) {
    return mode == comparison_mode::best ? "best" : "worst";
}

room_spec::room_spec(std::vector<int> capacities) : capacities_(std::move(capacities)) {
    std::sort(capacities_.begin(), capacities_.end());
}

long room_spec::total() const noexcept {
    return std::accumulate(capacities_.begin(), capacities_.end(), 0L);
}

namespace {

void check_player(int n, player_id p, const char* what) {
    if (p < 0 || p >= n) {
        throw std::invalid_argument(std::string(what) + " " + std::to_string(p) +
                                    " outside [0, " + std::to_string(n) + ")");
    }
}

}  // namespace

preference_profile preference_profile::from_lists(int n, const std::vector<preference_list>& lists,
                                                  bool strict, bool complete) {
    if (n < 0) throw std::invalid_argument("negative player count");
    if (lists.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("expected " + std::to_string(n) + " preference lists, got " +
                                    std::to_string(lists.size()));
    }
    std::vector<int> ranks(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (player_id i = 0; i < n; ++i) {
        int next_rank = 1;
        for (const auto& group : lists[static_cast<std::size_t>(i)]) {
            if (group.empty()) continue;
            for (player_id j : group) {
                check_player(n, j, "listed player");
                if (j == i) {
                    throw std::invalid_argument("player " + std::to_string(i) + " ranks herself");
                }
                int& slot = ranks[static_cast<std::size_t>(i) * n + j];
                if (slot != 0) {
                    throw std::invalid_argument("player " + std::to_string(i) + " lists player " +
                                                std::to_string(j) + " twice");
                }
                slot = next_rank;
            }
            ++next_rank;
        }
    }
    return from_ranks(n, ranks, strict, complete);
}

preference_profile preference_profile::from_ranks(int n, std::span<const int> ranks, bool strict,
                                                  bool complete) {
    if (n < 0) throw std::invalid_argument("negative player count");
    const auto un = static_cast<std::size_t>(n);
    if (ranks.size() != un * un) throw std::invalid_argument("rank matrix must be n*n");
    preference_profile p;
    p.n_ = n;
    p.strict_ = strict;
    p.complete_ = complete;
    p.ranks_.assign(ranks.begin(), ranks.end());
    p.max_rank_.assign(un, 0);
    for (std::size_t i = 0; i < un; ++i) {
        if (p.ranks_[i * un + i] != 0) {
            throw std::invalid_argument("player " + std::to_string(i) + " ranks herself");
        }
        std::vector<int> distinct;
        for (std::size_t j = 0; j < un; ++j) {
            int r = p.ranks_[i * un + j];
            if (r < 0) throw std::invalid_argument("negative rank");
            if (r > 0) distinct.push_back(r);
        }
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (std::size_t j = 0; j < un; ++j) {
            int& r = p.ranks_[i * un + j];
            if (r > 0) {
                r = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), r) -
                                     distinct.begin()) + 1;
            }
        }
        p.max_rank_[i] = static_cast<int>(distinct.size());
    }
    return p;
}

std::optional<int> preference_profile::rank(player_id i, player_id j) const {
    check_player(n_, i, "player");
    check_player(n_, j, "player");
    if (i == j) throw std::invalid_argument("a player has no rank for herself");
    int r = raw_rank(i, j);
    if (r == 0) return std::nullopt;
    return r;
}

preference_list preference_profile::list_of(player_id i) const {
    check_player(n_, i, "player");
    preference_list list(static_cast<std::size_t>(max_rank(i)));
    for (player_id j = 0; j < n_; ++j) {
        if (int r = raw_rank(i, j); r > 0) list[static_cast<std::size_t>(r - 1)].push_back(j);
    }
    return list;
}

validation_report validate_instance(const instance& inst) {
    validation_report report;
    auto& out = report.violations;
    if (inst.n < 0) {
        out.push_back("negative player count " + std::to_string(inst.n));
        return report;
    }
    for (std::size_t r = 0; r < inst.rooms.size(); ++r) {
        if (inst.rooms[r] < 2) {
            out.push_back("room " + std::to_string(r + 1) + " has capacity " +
                          std::to_string(inst.rooms[r]) + " < 2");
        }
    }
    if (inst.rooms.total() != inst.n) {
        out.push_back("capacity sum " + std::to_string(inst.rooms.total()) +
                      " ≠ " + std::to_string(inst.n));
    }
    const auto& prefs = inst.prefs;
    if (prefs.size() != inst.n) {
        out.push_back("preference profile covers " + std::to_string(prefs.size()) +
                      " players, expected " + std::to_string(inst.n));
        return report;
    }
    for (player_id i = 0; i < inst.n; ++i) {
        std::vector<int> seen(static_cast<std::size_t>(inst.n) + 1, 0);
        for (player_id j = 0; j < inst.n; ++j) {
            if (j == i) continue;
            int r = prefs.raw_rank(i, j);
            if (r == 0) {
                if (prefs.complete()) {
                    out.push_back("complete profile but player " + std::to_string(i + 1) +
                                  " does not rank player " + std::to_string(j + 1));
                }
                continue;
            }
            if (r > inst.n) {
                out.push_back("player " + std::to_string(i + 1) + " has rank " + std::to_string(r) +
                              " beyond the list length");
                continue;
            }
            if (++seen[static_cast<std::size_t>(r)] == 2 && prefs.strict()) {
                out.push_back("duplicate rank under strict: player " + std::to_string(i + 1) +
                              " gives rank " + std::to_string(r) + " to several players");
            }
        }
        for (int r = 1; r <= prefs.max_rank(i); ++r) {
            if (seen[static_cast<std::size_t>(r)] == 0) {
                out.push_back("ranks of player " + std::to_string(i + 1) + " are not dense (rank " +
                              std::to_string(r) + " missing)");
                break;
            }
        }
    }
    if (!prefs.complete() && inst.n >= 2) {
        bool all_ranked = true;
        for (player_id i = 0; i < inst.n && all_ranked; ++i) {
            for (player_id j = 0; j < inst.n; ++j) {
                if (i != j && prefs.raw_rank(i, j) == 0) {
                    all_ranked = false;
                    break;
                }
            }
        }
        if (all_ranked) out.push_back("profile declared incomplete but every pair is ranked");
    }
    return report;
}

std::optional<int> rank_of(const instance& inst, player_id i, player_id j) {
    return inst.prefs.rank(i, j);
}

coalition_value coalition_value::of_rank(int rank) {
    if (rank <= 0) throw std::invalid_argument("ranks are positive");
    return coalition_value{rank};
}

int coalition_value::rank() const {
    if (rank_ == 0) throw std::logic_error("infeasible coalition has no rank");
    return rank_;
}

std::strong_ordering coalition_value::operator<=>(const coalition_value& other) const noexcept {
    auto key = [](int r) { return r == 0 ? std::numeric_limits<int>::max() : r; };
    return key(rank_) <=> key(other.rank_);
}

std::string to_string(const coalition_value& value) {
    return value.is_feasible() ? "Rank(" + std::to_string(value.rank()) + ")" : "Infeasible";
}

coalition_value evaluate_coalition(const instance& inst, player_id i, std::span<const player_id> c) {
    if (c.size() < 2) throw std::invalid_argument("a coalition has at least two members");
    if (std::find(c.begin(), c.end(), i) == c.end()) {
        throw std::invalid_argument("player " + std::to_string(i) + " is not in the coalition");
    }
    int best = 0;
    int worst = 0;
    for (player_id j : c) {
        if (j == i) continue;
        int r = inst.prefs.raw_rank(i, j);
        if (r == 0) return coalition_value::infeasible();
        best = best == 0 ? r : std::min(best, r);
        worst = std::max(worst, r);
    }
    return coalition_value::of_rank(inst.mode == comparison_mode::best ? best : worst);
}

namespace {

std::string partition_defect(const instance& inst, const assignment& a) {
    if (a.rooms.size() != inst.rooms.size()) {
        return "assignment has " + std::to_string(a.rooms.size()) + " rooms, instance has " +
               std::to_string(inst.rooms.size());
    }
    std::vector<char> seen(static_cast<std::size_t>(inst.n), 0);
    for (std::size_t r = 0; r < a.rooms.size(); ++r) {
        if (a.rooms[r].size() != static_cast<std::size_t>(inst.rooms[r])) {
            return "room " + std::to_string(r + 1) + " holds " + std::to_string(a.rooms[r].size()) +
                   " players, capacity is " + std::to_string(inst.rooms[r]);
        }
        for (player_id p : a.rooms[r]) {
            if (p < 0 || p >= inst.n) return "player id " + std::to_string(p) + " out of range";
            if (seen[static_cast<std::size_t>(p)]++) {
                return "player " + std::to_string(p + 1) + " appears twice";
            }
        }
    }
    for (player_id p = 0; p < inst.n; ++p) {
        if (!seen[static_cast<std::size_t>(p)]) return "player " + std::to_string(p + 1) + " is missing";
    }
    return {};
}

}  // namespace

bool is_partition(const instance& inst, const assignment& a) {
    return partition_defect(inst, a).empty();
}

void require_partition(const instance& inst, const assignment& a) {
    if (auto defect = partition_defect(inst, a); !defect.empty()) {
        throw std::invalid_argument("not a partition: " + defect);
    }
}

assignment canonicalize(const instance& inst, assignment a) {
    for (auto& room : a.rooms) std::sort(room.begin(), room.end());
    std::sort(a.rooms.begin(), a.rooms.end(), [](const coalition& x, const coalition& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        if (x.empty()) return false;
        return x.front() < y.front();
    });
    require_partition(inst, a);
    return a;
}

std::vector<int> room_of(const instance& inst, const assignment& a) {
    require_partition(inst, a);
    std::vector<int> result(static_cast<std::size_t>(inst.n), -1);
    for (std::size_t r = 0; r < a.rooms.size(); ++r) {
        for (player_id p : a.rooms[r]) result[static_cast<std::size_t>(p)] = static_cast<int>(r);
    }
    return result;
}

std::vector<coalition_value> player_values(const instance& inst, const assignment& a) {
    require_partition(inst, a);
    std::vector<coalition_value> values(static_cast<std::size_t>(inst.n), coalition_value::infeasible());
    for (const auto& room : a.rooms) {
        for (player_id p : room) values[static_cast<std::size_t>(p)] = evaluate_coalition(inst, p, room);
    }
    return values;
}

bool is_feasible(const instance& inst, const assignment& a) {
    require_partition(inst, a);
    for (const auto& room : a.rooms) {
        for (player_id p : room) {
            for (player_id q : room) {
                if (p != q && !inst.prefs.acceptable(p, q)) return false;
            }
        }
    }
    return true;
}

long rank_potential(const instance& inst, const assignment& a) {
    long sum = 0;
    for (const auto& v : player_values(inst, a)) {
        if (!v.is_feasible()) throw precondition_error("rank potential of an infeasible assignment");
        sum += v.rank();
    }
    return sum;
}

bool dominates(const instance& inst, const assignment& a2, const assignment& a1) {
    auto v2 = player_values(inst, a2);
    auto v1 = player_values(inst, a1);
    auto feasible = [](const std::vector<coalition_value>& v) {
        return std::all_of(v.begin(), v.end(), [](const coalition_value& x) { return x.is_feasible(); });
    };
    if (!feasible(v2) || !feasible(v1)) {
        throw precondition_error("dominance is only defined between feasible assignments");
    }
    bool strict = false;
    for (std::size_t p = 0; p < v1.size(); ++p) {
        if (v2[p] > v1[p]) return false;
        if (v2[p] < v1[p]) strict = true;
    }
    return strict;
}

}  // namespace roomassign
