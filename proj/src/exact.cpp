#include "roomassign/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "room_search.hpp"
#include "roomassign/errors.hpp"

namespace roomassign {

namespace {

void require_valid(const instance& inst) {
    auto report = validate_instance(inst);
    if (!report.ok()) throw precondition_error("invalid instance: " + report.violations.front());
}

std::vector<player_id> identity_order(int n) {
    std::vector<player_id> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return order;
}

assignment from_slots(const instance& inst, const std::vector<coalition>& slots) {
    return canonicalize(inst, assignment{slots});
}

// Value of each player's room given its slot contents; 0 if infeasible.
void fill_values(const instance& inst, const std::vector<coalition>& slots, std::vector<int>& out) {
    out.assign(static_cast<std::size_t>(inst.n), 0);
    const bool best = inst.mode == comparison_mode::best;
    for (const auto& room : slots) {
        for (player_id p : room) {
            int value = best ? std::numeric_limits<int>::max() : 0;
            bool feasible = true;
            for (player_id q : room) {
                if (q == p) continue;
                int r = inst.prefs.raw_rank(p, q);
                if (r == 0) {
                    feasible = false;
                    break;
                }
                value = best ? std::min(value, r) : std::max(value, r);
            }
            out[static_cast<std::size_t>(p)] = feasible ? value : 0;
        }
    }
}

std::vector<int> rank_values(const instance& inst, const assignment& a) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(inst.n));
    for (const auto& v : player_values(inst, a)) out.push_back(v.is_feasible() ? v.rank() : 0);
    return out;
}

bool dominates_values(const std::vector<int>& better, const std::vector<int>& base) {
    bool strict = false;
    for (std::size_t p = 0; p < base.size(); ++p) {
        if (better[p] > base[p]) return false;
        if (better[p] < base[p]) strict = true;
    }
    return strict;
}

struct feasible_policy {
    const instance& inst;
    const assignment_visitor& visit;
    bool stopped = false;

    bool compatible(player_id a, player_id b) const {
        return inst.prefs.acceptable(a, b) && inst.prefs.acceptable(b, a);
    }
    bool room_ok(std::span<const player_id>) const { return true; }
    bool leaf(const std::vector<coalition>& slots) {
        if (!visit(from_slots(inst, slots))) stopped = true;
        return stopped;
    }
};

// Assignments in which every player p gets a room valued at most target[p].
// With `baseline` set, at least one player must beat her baseline value.
struct bounded_policy {
    const instance& inst;
    std::vector<int> target;
    const std::vector<int>* baseline = nullptr;
    std::optional<assignment> found;
    std::vector<int> scratch;

    bool compatible(player_id a, player_id b) const {
        const int rab = inst.prefs.raw_rank(a, b);
        const int rba = inst.prefs.raw_rank(b, a);
        if (rab == 0 || rba == 0) return false;
        if (inst.mode == comparison_mode::worst) {
            return rab <= target[static_cast<std::size_t>(a)] &&
                   rba <= target[static_cast<std::size_t>(b)];
        }
        return true;
    }

    bool room_ok(std::span<const player_id> room) const {
        if (inst.mode == comparison_mode::worst) return true;
        for (player_id p : room) {
            bool satisfied = false;
            for (player_id q : room) {
                if (q != p && inst.prefs.raw_rank(p, q) <= target[static_cast<std::size_t>(p)]) {
                    satisfied = true;
                    break;
                }
            }
            if (!satisfied) return false;
        }
        return true;
    }

    bool leaf(const std::vector<coalition>& slots) {
        if (baseline != nullptr) {
            fill_values(inst, slots, scratch);
            if (!dominates_values(scratch, *baseline)) return false;
        }
        found = from_slots(inst, slots);
        return true;
    }
};

// Most constrained first: fewest partners within the player's target.
std::vector<player_id> constrained_order(const instance& inst, const std::vector<int>& target) {
    std::vector<int> admissible(static_cast<std::size_t>(inst.n), 0);
    for (player_id p = 0; p < inst.n; ++p) {
        for (player_id q = 0; q < inst.n; ++q) {
            int r = q == p ? 0 : inst.prefs.raw_rank(p, q);
            if (r != 0 && r <= target[static_cast<std::size_t>(p)]) ++admissible[static_cast<std::size_t>(p)];
        }
    }
    auto order = identity_order(inst.n);
    std::stable_sort(order.begin(), order.end(), [&](player_id a, player_id b) {
        return admissible[static_cast<std::size_t>(a)] < admissible[static_cast<std::size_t>(b)];
    });
    return order;
}

std::optional<assignment> search_bounded(const instance& inst, std::vector<int> target,
                                         const std::vector<int>* baseline,
                                         const search_budget& budget) {
    budget_meter meter(budget);
    bounded_policy policy{inst, std::move(target), baseline, std::nullopt, {}};
    auto order = constrained_order(inst, policy.target);
    detail::room_search<bounded_policy> search(inst, policy, meter, std::move(order));
    search.run();
    return std::move(policy.found);
}

void require_feasible(const instance& inst, const assignment& a, const char* what) {
    require_partition(inst, a);
    if (!is_feasible(inst, a)) throw precondition_error(std::string(what) + " must be feasible");
}

}  // namespace

enumeration_status enumerate_feasible(const instance& inst, const assignment_visitor& visit,
                                      const search_budget& budget) {
    require_valid(inst);
    budget_meter meter(budget);
    feasible_policy policy{inst, visit};
    detail::room_search<feasible_policy> search(inst, policy, meter, identity_order(inst.n));
    search.run();
    return policy.stopped ? enumeration_status::stopped : enumeration_status::complete;
}

std::vector<assignment> all_feasible(const instance& inst, const search_budget& budget) {
    std::vector<assignment> out;
    enumerate_feasible(
        inst,
        [&](const assignment& a) {
            out.push_back(a);
            return true;
        },
        budget);
    return out;
}

std::optional<assignment> find_feasible(const instance& inst, const search_budget& budget) {
    std::optional<assignment> found;
    enumerate_feasible(
        inst,
        [&](const assignment& a) {
            found = a;
            return false;
        },
        budget);
    return found;
}

verdict verify_poa(const instance& inst, const assignment& a, verify_method method,
                   const search_budget& budget) {
    require_valid(inst);
    require_feasible(inst, a, "the assignment to verify");
    const auto base = rank_values(inst, a);
    if (method == verify_method::brute) {
        std::optional<assignment> witness;
        std::vector<int> values;
        enumerate_feasible(
            inst,
            [&](const assignment& candidate) {
                values = rank_values(inst, candidate);
                if (dominates_values(values, base)) {
                    witness = candidate;
                    return false;
                }
                return true;
            },
            budget);
        return witness ? verdict::dominated_by(std::move(*witness)) : verdict::pareto_optimal();
    }
    auto witness = search_bounded(inst, base, &base, budget);
    return witness ? verdict::dominated_by(std::move(*witness)) : verdict::pareto_optimal();
}

improvement_chain improve_to_poa(const instance& inst, const assignment& start,
                                 const search_budget& budget) {
    require_valid(inst);
    require_feasible(inst, start, "the starting assignment");
    improvement_chain chain;
    chain.result = canonicalize(inst, start);
    chain.potentials.push_back(rank_potential(inst, chain.result));
    for (;;) {
        auto v = verify_poa(inst, chain.result, verify_method::pruned, budget);
        if (v.is_pareto_optimal()) break;
        chain.result = *v.witness();
        const long next = rank_potential(inst, chain.result);
        if (next >= chain.potentials.back()) {
            throw std::logic_error("rank potential did not decrease along a Pareto improvement");
        }
        chain.potentials.push_back(next);
        ++chain.length;
    }
    return chain;
}

std::optional<assignment> find_poa_brute(const instance& inst, const search_budget& budget) {
    std::optional<assignment> best;
    long best_potential = std::numeric_limits<long>::max();
    enumerate_feasible(
        inst,
        [&](const assignment& a) {
            long pot = rank_potential(inst, a);
            if (pot < best_potential) {
                best_potential = pot;
                best = a;
            }
            return true;
        },
        budget);
    return best;
}

std::vector<assignment> enumerate_poa(const instance& inst, const search_budget& budget) {
    std::vector<assignment> feasible;
    std::vector<std::vector<int>> values;
    std::vector<long> sums;
    enumerate_feasible(
        inst,
        [&](const assignment& a) {
            feasible.push_back(a);
            values.push_back(rank_values(inst, a));
            sums.push_back(std::accumulate(values.back().begin(), values.back().end(), 0L));
            return true;
        },
        budget);
    // A dominator has a strictly smaller rank sum, so only those are scanned.
    std::vector<std::size_t> by_sum(feasible.size());
    std::iota(by_sum.begin(), by_sum.end(), std::size_t{0});
    std::stable_sort(by_sum.begin(), by_sum.end(),
                     [&](std::size_t x, std::size_t y) { return sums[x] < sums[y]; });
    std::vector<char> optimal(feasible.size(), 1);
    for (std::size_t x = 0; x < feasible.size(); ++x) {
        for (std::size_t y : by_sum) {
            if (sums[y] >= sums[x]) break;
            if (dominates_values(values[y], values[x])) {
                optimal[x] = 0;
                break;
            }
        }
    }
    std::vector<assignment> out;
    for (std::size_t x = 0; x < feasible.size(); ++x) {
        if (optimal[x]) out.push_back(std::move(feasible[x]));
    }
    return out;
}

std::optional<assignment> find_unanimous_best(const instance& inst, const search_budget& budget) {
    require_valid(inst);
    return search_bounded(inst, std::vector<int>(static_cast<std::size_t>(inst.n), 1), nullptr, budget);
}

unsigned long long partition_count(const room_spec& rooms) {
    // Multiply binomials room by room, then divide out orderings of equal rooms.
    unsigned long long count = 1;
    long remaining = rooms.total();
    auto binom = [](long n, long k) {
        unsigned long long r = 1;
        for (long i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
        return r;
    };
    for (std::size_t r = 0; r < rooms.size(); ++r) {
        count *= binom(remaining, rooms[r]);
        remaining -= rooms[r];
    }
    std::size_t r = 0;
    while (r < rooms.size()) {
        std::size_t run = r;
        while (run < rooms.size() && rooms[run] == rooms[r]) ++run;
        for (unsigned long long f = 2; f <= run - r; ++f) count /= f;
        r = run;
    }
    return count;
}

}  // namespace roomassign
