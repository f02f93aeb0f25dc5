#pragma once

#include <vector>

#include "roomassign/core.hpp"

namespace roomassign {

/// Order in which players act as dictators; must be a permutation of [0, n).
using dictator_order = std::vector<player_id>;

/// Ascending player id.
dictator_order default_order(int n);

enum class sd_action {
    open_room,  ///< dictator and chosen players occupy a fresh room
    join,       ///< the unassigned one of (dictator, chosen) joins the other's room
    no_change,  ///< dictator's best available roommate is already with her
    skip,       ///< dictator is already in a closed room
};

struct sd_step {
    player_id dictator = 0;
    std::vector<player_id> chosen;
    int room = -1;
    sd_action action = sd_action::skip;

    bool operator==(const sd_step&) const = default;
};

struct sd_trace {
    std::vector<sd_step> steps;
};

struct sd_result {
    assignment result;
    sd_trace trace;
};

/// Serial dictatorship for strict complete lists, best-roommate
/// comparison and rooms of three. Throws precondition_error otherwise.
sd_result sd_best_triples(const instance& inst, const dictator_order& order);

/// Serial dictatorship for strict complete lists and worst-roommate
/// comparison with arbitrary capacities. Throws precondition_error otherwise.
sd_result sd_worst(const instance& inst, const dictator_order& order);

/// Rebuilds the (canonical) assignment by applying the trace to empty rooms.
assignment replay(const instance& inst, const sd_trace& trace);

std::string_view to_string(sd_action action);

}  // namespace roomassign
