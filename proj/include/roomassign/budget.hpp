#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace roomassign {

/// Limits for exhaustive searches. Both limits are unlimited when absent.
struct search_budget {
    std::optional<std::uint64_t> node_limit;
    std::optional<std::chrono::milliseconds> time_limit;
};

/// Counts search nodes against a budget and throws budget_exhausted once
/// either limit is crossed. The clock is consulted every 1024 nodes.
class budget_meter {
public:
    explicit budget_meter(const search_budget& budget);

    void tick();
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    search_budget budget_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point deadline_;
};

}  // namespace roomassign
