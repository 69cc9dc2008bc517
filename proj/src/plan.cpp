#include "fillplan/plan.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fillplan/errors.hpp"
#include "fillplan/service.hpp"

namespace fillplan {

namespace {
constexpr double kFeasibilityTol = 1e-9;  // absorbs float noise at binding levels
}

void check_cost_params(const CostParams& costs) {
    if (!std::isfinite(costs.ordering_cost) || costs.ordering_cost < 0.0) {
        throw std::domain_error("cost params: ordering cost must be finite and >= 0");
    }
    if (!std::isfinite(costs.holding_cost) || costs.holding_cost <= 0.0) {
        throw std::domain_error("cost params: holding cost must be finite and > 0");
    }
}

void validate_partition(const Horizon& horizon, const std::vector<Cycle>& cycles) {
    if (cycles.empty()) {
        throw invalid_plan_error("plan: no cycles");
    }
    int expected_start = 1;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        const Cycle& c = cycles[i];
        if (c.start != expected_start || c.end < c.start || c.end > horizon.length()) {
            throw invalid_plan_error("plan: cycle " + std::to_string(i + 1) + " [" +
                                     std::to_string(c.start) + ", " + std::to_string(c.end) +
                                     "] breaks the partition of 1.." +
                                     std::to_string(horizon.length()));
        }
        expected_start = c.end + 1;
    }
    if (expected_start != horizon.length() + 1) {
        throw invalid_plan_error("plan: cycles end at period " + std::to_string(expected_start - 1) +
                                 ", horizon has " + std::to_string(horizon.length()));
    }
}

void validate_plan(const Horizon& horizon, const CyclePlan& plan) {
    validate_partition(horizon, plan.cycles);
    if (plan.levels.size() != plan.cycles.size()) {
        throw invalid_plan_error("plan: " + std::to_string(plan.cycles.size()) + " cycles but " +
                                 std::to_string(plan.levels.size()) + " levels");
    }
    for (double level : plan.levels) {
        if (!std::isfinite(level)) {
            throw invalid_plan_error("plan: non-finite order-up-to level");
        }
    }
}

PlanEvaluation evaluate_plan(const Horizon& horizon, const CostParams& costs,
                             const CyclePlan& plan) {
    check_cost_params(costs);
    validate_plan(horizon, plan);

    PlanEvaluation eval;
    eval.expected_end_inventory.reserve(static_cast<std::size_t>(horizon.length()));
    eval.per_cycle_backorders.reserve(plan.cycles.size());
    eval.per_cycle_fill_rate.reserve(plan.cycles.size());

    double min_inventory = 0.0;
    double inventory_sum = 0.0;
    for (std::size_t i = 0; i < plan.cycles.size(); ++i) {
        const Cycle& c = plan.cycles[i];
        const double level = plan.levels[i];
        for (int t = c.start; t <= c.end; ++t) {
            const double inv = level - cumulative_mean(horizon, c.start, t);
            eval.expected_end_inventory.push_back(inv);
            inventory_sum += inv;
            min_inventory = std::fmin(min_inventory, inv);
        }
        const CycleDemand cd = aggregate_cycle(horizon, c);
        eval.per_cycle_backorders.push_back(expected_cycle_backorders(cd, level));
        eval.per_cycle_fill_rate.push_back(cycle_fill_rate(cd, level));
    }

    eval.holding_cost = costs.holding_cost * inventory_sum;
    eval.ordering_cost = costs.ordering_cost * static_cast<double>(plan.cycles.size());
    eval.total_cost = eval.holding_cost + eval.ordering_cost;
    eval.horizon_fill_rate = horizon_fill_rate(eval.per_cycle_backorders, horizon);
    eval.feasible = min_inventory >= -kFeasibilityTol;
    return eval;
}

}  // namespace fillplan
