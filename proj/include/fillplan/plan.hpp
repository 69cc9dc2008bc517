#pragma once

#include <vector>

#include "fillplan/demand.hpp"

namespace fillplan {

/// Fixed cost per replenishment and linear holding cost per unit per period.
struct CostParams {
    double ordering_cost = 0.0;
    double holding_cost = 1.0;

    bool operator==(const CostParams&) const = default;
};

/// Throws std::domain_error unless ordering_cost >= 0 and holding_cost > 0.
void check_cost_params(const CostParams& costs);

/// A partition of the horizon into consecutive cycles plus one order-up-to
/// level per cycle. The decision variable of the whole problem.
struct CyclePlan {
    std::vector<Cycle> cycles;
    std::vector<double> levels;

    bool operator==(const CyclePlan&) const = default;
};

/// Throws invalid_plan_error unless the cycles are contiguous, cover exactly
/// 1..T, and carry one finite level each.
void validate_plan(const Horizon& horizon, const CyclePlan& plan);

/// Same partition checks for a bare cycle list (no levels yet).
void validate_partition(const Horizon& horizon, const std::vector<Cycle>& cycles);

struct PlanEvaluation {
    std::vector<double> expected_end_inventory;  // one per period, 1-based order
    std::vector<double> per_cycle_backorders;
    std::vector<double> per_cycle_fill_rate;
    double horizon_fill_rate = 0.0;
    double holding_cost = 0.0;
    double ordering_cost = 0.0;
    double total_cost = 0.0;
    bool feasible = false;

    bool operator==(const PlanEvaluation&) const = default;
};

/// Expected end-of-period inventories, costs, backorders, fill rates and the
/// non-negative-inventory feasibility flag for a complete plan.
PlanEvaluation evaluate_plan(const Horizon& horizon, const CostParams& costs,
                             const CyclePlan& plan);

}  // namespace fillplan
