#include "roomassign/dictatorship.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "roomassign/errors.hpp"

namespace roomassign {

dictator_order default_order(int n) {
    dictator_order order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return order;
}

std::string_view to_string(sd_action action) {
    switch (action) {
        case sd_action::open_room: return "open-room";
        case sd_action::join: return "join";
        case sd_action::no_change: return "no-change";
        case sd_action::skip: return "skip";
    }
    return "?";
}

namespace {

void require_strict_complete(const instance& inst) {
    auto report = validate_instance(inst);
    if (!report.ok()) throw precondition_error("invalid instance: " + report.violations.front());
    if (!inst.prefs.strict()) throw precondition_error("serial dictatorship needs strict lists");
    if (!inst.prefs.complete()) throw precondition_error("serial dictatorship needs complete lists");
}

void require_permutation(const instance& inst, const dictator_order& order) {
    if (order.size() != static_cast<std::size_t>(inst.n)) {
        throw precondition_error("dictator order must list all " + std::to_string(inst.n) + " players");
    }
    std::vector<char> seen(order.size(), 0);
    for (player_id p : order) {
        if (p < 0 || p >= inst.n || seen[static_cast<std::size_t>(p)]++) {
            throw precondition_error("dictator order is not a permutation");
        }
    }
}

// Players on i's list from best to worst (strict lists: one per rank).
std::vector<player_id> ranked_players(const instance& inst, player_id i) {
    std::vector<player_id> out;
    for (const auto& group : inst.prefs.list_of(i)) out.insert(out.end(), group.begin(), group.end());
    return out;
}

}  // namespace

sd_result sd_best_triples(const instance& inst, const dictator_order& order) {
    require_strict_complete(inst);
    if (inst.mode != comparison_mode::best) throw precondition_error("sd_best_triples needs best mode");
    for (int c : inst.rooms.capacities()) {
        if (c != 3) throw precondition_error("sd_best_triples needs rooms of capacity 3");
    }
    require_permutation(inst, order);

    const std::size_t room_limit = inst.rooms.size();
    std::vector<coalition> rooms;
    std::vector<int> room_of(static_cast<std::size_t>(inst.n), -1);
    auto roommates = [&](player_id p) {
        int r = room_of[static_cast<std::size_t>(p)];
        return r < 0 ? 0 : static_cast<int>(rooms[static_cast<std::size_t>(r)].size()) - 1;
    };

    sd_result out;
    for (player_id i : order) {
        const int ri = room_of[static_cast<std::size_t>(i)];
        if (ri >= 0 && rooms[static_cast<std::size_t>(ri)].size() == 3) {
            out.trace.steps.push_back({i, {}, ri, sd_action::skip});
            continue;
        }
        bool acted = false;
        for (player_id j : ranked_players(inst, i)) {
            const int rj = room_of[static_cast<std::size_t>(j)];
            const bool together = ri >= 0 && ri == rj;
            if (!together && roommates(i) + roommates(j) > 1) continue;
            // A new room is needed only when neither is placed yet.
            if (ri < 0 && rj < 0 && rooms.size() == room_limit) continue;
            if (together) {
                out.trace.steps.push_back({i, {j}, ri, sd_action::no_change});
            } else if (ri < 0 && rj < 0) {
                const int r = static_cast<int>(rooms.size());
                rooms.push_back({i, j});
                room_of[static_cast<std::size_t>(i)] = r;
                room_of[static_cast<std::size_t>(j)] = r;
                out.trace.steps.push_back({i, {j}, r, sd_action::open_room});
            } else {
                const int r = ri >= 0 ? ri : rj;
                const player_id mover = ri >= 0 ? j : i;
                rooms[static_cast<std::size_t>(r)].push_back(mover);
                room_of[static_cast<std::size_t>(mover)] = r;
                out.trace.steps.push_back({i, {j}, r, sd_action::join});
            }
            acted = true;
            break;
        }
        if (!acted) throw std::logic_error("no available roommate for dictator " + std::to_string(i));
    }
    if (rooms.size() != room_limit ||
        std::any_of(rooms.begin(), rooms.end(), [](const coalition& r) { return r.size() != 3; })) {
        throw std::logic_error("serial dictatorship left a room unfilled");
    }
    out.result = canonicalize(inst, assignment{std::move(rooms)});
    return out;
}

sd_result sd_worst(const instance& inst, const dictator_order& order) {
    require_strict_complete(inst);
    if (inst.mode != comparison_mode::worst) throw precondition_error("sd_worst needs worst mode");
    require_permutation(inst, order);

    std::vector<coalition> rooms(inst.rooms.size());
    std::vector<char> placed(static_cast<std::size_t>(inst.n), 0);
    std::size_t next_room = 0;  // capacities ascending: the next unused slot is a smallest one
    sd_result out;
    for (player_id i : order) {
        if (placed[static_cast<std::size_t>(i)]) {
            out.trace.steps.push_back({i, {}, -1, sd_action::skip});
            continue;
        }
        const std::size_t room = next_room++;
        const auto want = static_cast<std::size_t>(inst.rooms[room] - 1);
        std::vector<player_id> chosen;
        for (player_id j : ranked_players(inst, i)) {
            if (chosen.size() == want) break;
            if (!placed[static_cast<std::size_t>(j)]) chosen.push_back(j);
        }
        if (chosen.size() != want) throw std::logic_error("not enough players left for a room");
        rooms[room].push_back(i);
        placed[static_cast<std::size_t>(i)] = 1;
        for (player_id j : chosen) {
            rooms[room].push_back(j);
            placed[static_cast<std::size_t>(j)] = 1;
        }
        out.trace.steps.push_back({i, std::move(chosen), static_cast<int>(room), sd_action::open_room});
    }
    out.result = canonicalize(inst, assignment{std::move(rooms)});
    return out;
}

assignment replay(const instance& inst, const sd_trace& trace) {
    std::vector<coalition> rooms(inst.rooms.size());
    std::vector<int> room_of(static_cast<std::size_t>(inst.n), -1);
    auto put = [&](player_id p, int r) {
        if (r < 0 || static_cast<std::size_t>(r) >= rooms.size()) throw std::invalid_argument("trace names a bad room");
        rooms[static_cast<std::size_t>(r)].push_back(p);
        room_of[static_cast<std::size_t>(p)] = r;
    };
    for (const auto& step : trace.steps) {
        switch (step.action) {
            case sd_action::open_room:
                put(step.dictator, step.room);
                for (player_id j : step.chosen) put(j, step.room);
                break;
            case sd_action::join:
                for (player_id j : step.chosen) {
                    if (room_of[static_cast<std::size_t>(step.dictator)] < 0) put(step.dictator, step.room);
                    else put(j, step.room);
                }
                break;
            case sd_action::no_change:
            case sd_action::skip:
                break;
        }
    }
    return canonicalize(inst, assignment{std::move(rooms)});
}

}  // namespace roomassign
