#pragma once

// Canonical backtracking over capacity-respecting partitions.
//
// Rooms are built one at a time. The first unplaced player in the
// processing order opens a room in the first empty slot of some capacity
// class, then the remaining seats are filled with later players in
// increasing order position. Equal-capacity slots are interchangeable and
// always opened left to right, so each partition is visited exactly once.

#include <cstddef>
#include <span>
#include <vector>

#include "roomassign/budget.hpp"
#include "roomassign/core.hpp"

namespace roomassign::detail {

// Policy requirements:
//   bool compatible(player_id a, player_id b)      may a and b share a room?
//   bool room_ok(std::span<const player_id> room)   checked when a room is full
//   bool leaf(const std::vector<coalition>& slots)  complete partition; true stops
template <class Policy>
class room_search {
public:
    room_search(const instance& inst, Policy& policy, budget_meter& meter,
                std::vector<player_id> order)
        : inst_(inst), policy_(policy), meter_(meter), order_(std::move(order)) {
        const std::size_t k = inst.rooms.size();
        slots_.resize(k);
        caps_.assign(inst.rooms.capacities().begin(), inst.rooms.capacities().end());
        placed_.assign(static_cast<std::size_t>(inst.n), 0);
        for (std::size_t s = 0; s < k; ++s) {
            if (s == 0 || caps_[s] != caps_[s - 1]) class_start_.push_back(s);
        }
        class_start_.push_back(k);
    }

    /// True if the policy stopped the search.
    bool run() { return next_room(0); }

private:
    bool next_room(std::size_t cursor) {
        while (cursor < order_.size() && placed_[static_cast<std::size_t>(order_[cursor])]) ++cursor;
        if (cursor == order_.size()) return policy_.leaf(slots_);
        const player_id opener = order_[cursor];
        for (std::size_t c = 0; c + 1 < class_start_.size(); ++c) {
            std::size_t slot = class_start_[c];
            while (slot < class_start_[c + 1] && !slots_[slot].empty()) ++slot;
            if (slot == class_start_[c + 1]) continue;
            meter_.tick();
            slots_[slot].push_back(opener);
            placed_[static_cast<std::size_t>(opener)] = 1;
            bool stop = fill(slot, cursor + 1, cursor + 1);
            placed_[static_cast<std::size_t>(opener)] = 0;
            slots_[slot].clear();
            if (stop) return true;
        }
        return false;
    }

    bool fill(std::size_t slot, std::size_t from, std::size_t resume) {
        auto& room = slots_[slot];
        const auto need = static_cast<std::size_t>(caps_[slot]) - room.size();
        if (need == 0) {
            if (!policy_.room_ok(std::span<const player_id>(room))) return false;
            return next_room(resume);
        }
        for (std::size_t k = from; k + need <= order_.size(); ++k) {
            const player_id q = order_[k];
            if (placed_[static_cast<std::size_t>(q)]) continue;
            meter_.tick();
            bool ok = true;
            for (player_id member : room) {
                if (!policy_.compatible(member, q)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            room.push_back(q);
            placed_[static_cast<std::size_t>(q)] = 1;
            bool stop = fill(slot, k + 1, resume);
            placed_[static_cast<std::size_t>(q)] = 0;
            room.pop_back();
            if (stop) return true;
        }
        return false;
    }

    const instance& inst_;
    Policy& policy_;
    budget_meter& meter_;
    std::vector<player_id> order_;
    std::vector<coalition> slots_;
    std::vector<int> caps_;
    std::vector<char> placed_;
    std::vector<std::size_t> class_start_;
};

}  // namespace roomassign::detail
