#pragma once

#include <vector>

#include "fillplan/plan.hpp"
#include "fillplan/service.hpp"
#include "fillplan/solver_horizon.hpp"
#include "fillplan/solver_percycle.hpp"

namespace fillplan {

/// Reference solver for the per-cycle policy: walks every partition and sums
/// the same edge costs in the same left-to-right order as the shortest-path
/// solver, so agreement is exact down to the floating-point result.
SolveResult brute_force_percycle(const Horizon& horizon, const CostParams& costs,
                                 const ServiceTarget& target);

struct GridAllocation {
    std::vector<double> levels;
    double holding_cost = 0.0;
    double total_backorders = 0.0;
};

/// Reference allocation: buffers restricted to {0, g, 2g, ...} capped at
/// eight standard deviations per cycle, exhaustively swept for the cheapest
/// combination with total expected backorders within budget. Supports up to
/// three cycles. The sweep cost is within one grid step of holding cost,
/// grid_step * sum(h * cycle length), of the continuous optimum.
GridAllocation grid_allocate(const Horizon& horizon, const CostParams& costs,
                             const std::vector<Cycle>& partition, const BackorderBudget& budget,
                             double grid_step);

/// Reference horizon solver over all partitions of a horizon with at most
/// three periods, using grid_allocate per partition. Throws capacity_error
/// for longer horizons.
SolveResult grid_solve_horizon(const Horizon& horizon, const CostParams& costs,
                               const ServiceTarget& target, double grid_step);

}  // namespace fillplan
