#pragma once

#include <cstdint>
#include <vector>

#include "fillplan/plan.hpp"
#include "fillplan/service.hpp"
#include "fillplan/solver_percycle.hpp"

namespace fillplan {

/// Horizon-wide allowance for expected backorders: (1 - beta) times total
/// mean demand. A plan meets the horizon fill-rate target exactly when its
/// summed expected cycle backorders stay within this.
struct BackorderBudget {
    double budget = 0.0;
};

BackorderBudget horizon_backorder_budget(const Horizon& horizon, const ServiceTarget& target);

/// Decode a partition of periods 1..T from a boundary bitmask. Bit i set
/// means a new cycle starts at period i + 2, so mask 0 is the single full
/// cycle and all bits set is one cycle per period.
std::vector<Cycle> partition_from_mask(int horizon_length, std::uint64_t mask);

struct AllocationResult {
    std::vector<double> levels;
    std::vector<double> achieved_backorders;
    /// Shadow price of the backorder budget; 0 when the budget is slack.
    double multiplier = 0.0;
    /// True when the budget constraint binds at the optimum.
    bool tight = false;
};

/// Cheapest levels for a fixed partition subject to the summed expected
/// backorders staying within the budget and each level at least its cycle
/// mean. Every cycle must have positive mean demand. The returned levels
/// never overspend: achieved backorders sum to at most the budget.
AllocationResult allocate_levels(const Horizon& horizon, const CostParams& costs,
                                 const std::vector<Cycle>& partition,
                                 const BackorderBudget& budget);

inline constexpr int kDefaultEnumCap = 20;

/// Minimum-cost plan meeting the horizon-wide fill rate, by enumerating all
/// 2^(T-1) partitions and allocating the backorder budget within each.
/// Throws capacity_error when T - 1 exceeds enum_cap.
SolveResult solve_horizon(const Horizon& horizon, const CostParams& costs,
                          const ServiceTarget& target, int enum_cap = kDefaultEnumCap);

}  // namespace fillplan
