#include "roomassign/generate.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace roomassign {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("draw_below needs a positive bound");
    // Reject the low sliver so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

double draw_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

void check(const generator_params& p) {
    if (p.n < 2) throw std::invalid_argument("need at least 2 players");
    long total = 0;
    for (int c : p.capacities) {
        if (c < 2) throw std::invalid_argument("room capacities must be at least 2");
        total += c;
    }
    if (total != p.n) {
        throw std::invalid_argument("capacities sum to " + std::to_string(total) + ", not " + std::to_string(p.n));
    }
    if (!(p.acceptability > 0.0 && p.acceptability <= 1.0)) {
        throw std::invalid_argument("acceptability density must lie in (0, 1]");
    }
    if (!(p.ties >= 0.0 && p.ties < 1.0)) throw std::invalid_argument("tie density must lie in [0, 1)");
    if (p.strict && p.ties > 0.0) throw std::invalid_argument("tie density must be 0 for strict lists");
    if (p.complete && p.acceptability < 1.0) {
        throw std::invalid_argument("complete lists need acceptability density 1");
    }
}

}  // namespace

instance gen_random_instance(const generator_params& params) {
    check(params);
    const int n = params.n;
    std::mt19937_64 rng(params.seed);

    std::vector<std::vector<char>> ok(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 1));
    if (!params.complete) {
        bool missing = false;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                if (draw_unit(rng) >= params.acceptability) {
                    ok[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
                    missing = true;
                }
            }
        }
        if (!missing) {
            // An incomplete profile must leave at least one pair unranked.
            const auto i = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(n)));
            auto j = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(n - 1)));
            if (j >= i) ++j;
            ok[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
        }
    }

    std::vector<preference_list> lists(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<player_id> others;
        for (int j = 0; j < n; ++j) {
            if (j != i && ok[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) others.push_back(j);
        }
        shuffle_with(others, rng);
        auto& list = lists[static_cast<std::size_t>(i)];
        for (player_id j : others) {
            if (!list.empty() && params.ties > 0.0 && draw_unit(rng) < params.ties) {
                list.back().push_back(j);
            } else {
                list.push_back({j});
            }
        }
    }
    return instance{n, room_spec(params.capacities), params.mode,
                    preference_profile::from_lists(n, lists, params.strict, params.complete)};
}

}  // namespace roomassign
