#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "roomassign/core.hpp"

namespace roomassign {

struct generator_params {
    int n = 0;
    std::vector<int> capacities;
    comparison_mode mode = comparison_mode::best;
    bool strict = true;
    bool complete = true;
    /// Probability that an ordered pair is acceptable; must be 1 when complete.
    double acceptability = 1.0;
    /// Probability that a list entry ties with the one before it; 0 when strict.
    double ties = 0.0;
    std::uint64_t seed = 0;
};

/// Deterministic in the seed on every platform (only raw mt19937_64
/// output is used). Throws std::invalid_argument on impossible parameters.
instance gen_random_instance(const generator_params& params);

/// Uniform integer in [0, bound) from raw engine output.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);
/// Uniform real in [0, 1).
double draw_unit(std::mt19937_64& rng);

template <class T>
void shuffle_with(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[draw_below(rng, i)]);
    }
}

}  // namespace roomassign
