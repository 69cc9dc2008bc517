#include "fillplan/solver_horizon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fillplan/errors.hpp"
#include "fillplan/gaussian.hpp"

namespace fillplan {
namespace {

// Solves 1 - Phi(z) = ratio for z >= 0, ratio in (0, 0.5]. Newton with a
// bisection safeguard; the objective is strictly decreasing on the bracket.
double upper_tail_z(double ratio) {
    if (ratio >= 0.5) return 0.0;
    double lo = 0.0;
    double hi = 40.0;
    double z = 1.0;
    for (int i = 0; i < 100; ++i) {
        const double f = (1.0 - std_normal_cdf(z)) - ratio;
        if (f == 0.0) return z;
        if (f > 0.0) {
            lo = z;
        } else {
            hi = z;
        }
        double next = z + f / std_normal_pdf(z);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - z) <= 1e-15 * std::max(1.0, std::abs(z))) return next;
        z = next;
    }
    return z;
}

struct CycleSlot {
    CycleDemand demand;
    int length = 0;
    double weight = 0.0;  // marginal holding cost per unit of level
};

// Levels and total expected backorders at a given multiplier. A cycle takes
// z with lambda * (1 - Phi(z)) = weight, clamped at z = 0; deterministic
// cycles sit at their mean with no backorders.
double levels_at(const std::vector<CycleSlot>& slots, double lambda, std::vector<double>& levels,
                 std::vector<double>& backorders) {
    double total = 0.0;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const CycleSlot& s = slots[i];
        if (s.demand.sigma == 0.0) {
            levels[i] = s.demand.mu;
            backorders[i] = 0.0;
            continue;
        }
        const double ratio = lambda > 0.0 ? s.weight / lambda : 1.0;
        const double z = upper_tail_z(std::min(ratio, 1.0));
        levels[i] = s.demand.mu + s.demand.sigma * z;
        backorders[i] = s.demand.sigma * std_normal_loss(z);
        total += backorders[i];
    }
    return total;
}

}  // namespace

BackorderBudget horizon_backorder_budget(const Horizon& horizon, const ServiceTarget& target) {
    return BackorderBudget{(1.0 - target.beta) * horizon.total_mean()};
}

std::vector<Cycle> partition_from_mask(int horizon_length, std::uint64_t mask) {
    std::vector<Cycle> cycles;
    int start = 1;
    for (int t = 1; t < horizon_length; ++t) {
        if (mask & (std::uint64_t{1} << (t - 1))) {
            cycles.push_back(Cycle{start, t});
            start = t + 1;
        }
    }
    cycles.push_back(Cycle{start, horizon_length});
    return cycles;
}

AllocationResult allocate_levels(const Horizon& horizon, const CostParams& costs,
                                 const std::vector<Cycle>& partition,
                                 const BackorderBudget& budget) {
    check_cost_params(costs);
    validate_partition(horizon, partition);
    if (!(budget.budget >= 0.0) || !std::isfinite(budget.budget)) {
        throw std::domain_error("allocate_levels: budget must be finite and nonnegative");
    }

    std::vector<CycleSlot> slots;
    slots.reserve(partition.size());
    for (const Cycle& c : partition) {
        CycleSlot s;
        s.demand = aggregate_cycle(horizon, c);
        if (s.demand.mu <= 0.0) {
            throw invalid_plan_error("allocate_levels: cycle [" + std::to_string(c.start) + ", " +
                                     std::to_string(c.end) + "] has zero mean demand");
        }
        s.length = c.length();
        s.weight = costs.holding_cost * s.length;
        slots.push_back(s);
    }

    AllocationResult result;
    result.levels.resize(slots.size());
    result.achieved_backorders.resize(slots.size());

    // Unconstrained floor: every level at its cycle mean (z = 0).
    const double floor_total = levels_at(slots, 0.0, result.levels, result.achieved_backorders);
    if (floor_total <= budget.budget) {
        result.multiplier = 0.0;
        result.tight = false;
        return result;
    }

    // Total backorders decrease in lambda; bracket the budget and bisect.
    // The answer is taken from the high side, so the budget is never exceeded.
    double lambda_lo = 0.0;
    double weight_max = 0.0;
    for (const CycleSlot& s : slots) weight_max = std::max(weight_max, s.weight);
    double lambda_hi = 4.0 * weight_max;
    std::vector<double> levels(slots.size());
    std::vector<double> backorders(slots.size());
    double total_hi = levels_at(slots, lambda_hi, levels, backorders);
    int grow = 0;
    while (total_hi > budget.budget) {
        if (++grow > 200) {
            throw numeric_error("allocate_levels: failed to bracket the backorder budget");
        }
        lambda_lo = lambda_hi;
        lambda_hi *= 2.0;
        total_hi = levels_at(slots, lambda_hi, levels, backorders);
    }
    result.levels = levels;
    result.achieved_backorders = backorders;

    for (int i = 0; i < 200; ++i) {
        if (budget.budget - total_hi <= 1e-6 * budget.budget) break;
        if (lambda_hi - lambda_lo <= 1e-12 * std::max(1.0, lambda_hi)) break;
        const double mid = 0.5 * (lambda_lo + lambda_hi);
        const double total_mid = levels_at(slots, mid, levels, backorders);
        if (total_mid > budget.budget) {
            lambda_lo = mid;
        } else {
            lambda_hi = mid;
            total_hi = total_mid;
            result.levels = levels;
            result.achieved_backorders = backorders;
        }
    }
    result.multiplier = lambda_hi;
    result.tight = true;
    return result;
}

SolveResult solve_horizon(const Horizon& horizon, const CostParams& costs,
                          const ServiceTarget& target, int enum_cap) {
    check_cost_params(costs);
    const int T = horizon.length();
    if (horizon.period(1).mean <= 0.0) {
        throw invalid_plan_error("solve_horizon: period 1 has zero mean demand");
    }
    if (T - 1 > enum_cap) {
        throw capacity_error("solve_horizon: horizon of " + std::to_string(T) + " periods needs " +
                             std::to_string(T - 1) + " boundary bits, above the cap of " +
                             std::to_string(enum_cap));
    }
    const BackorderBudget budget = horizon_backorder_budget(horizon, target);

    bool have_best = false;
    PlanChoice best_choice;
    CyclePlan best_plan;
    const std::uint64_t mask_end = std::uint64_t{1} << (T - 1);
    for (std::uint64_t mask = 0; mask < mask_end; ++mask) {
        const std::vector<Cycle> partition = partition_from_mask(T, mask);
        bool skip = false;
        for (const Cycle& c : partition) {
            if (aggregate_cycle(horizon, c).mu <= 0.0) {
                skip = true;
                break;
            }
        }
        if (skip) continue;
        const AllocationResult alloc = allocate_levels(horizon, costs, partition, budget);
        PlanChoice candidate;
        candidate.cycle_count = static_cast<int>(partition.size());
        for (std::size_t i = 0; i < partition.size(); ++i) {
            const Cycle& c = partition[i];
            candidate.starts.push_back(c.start);
            double holding = 0.0;
            for (int t = c.start; t <= c.end; ++t) {
                holding += alloc.levels[i] - cumulative_mean(horizon, c.start, t);
            }
            candidate.cost += costs.ordering_cost + costs.holding_cost * holding;
        }
        if (!have_best || better_choice(candidate, best_choice)) {
            best_choice = std::move(candidate);
            best_plan.cycles = partition;
            best_plan.levels = alloc.levels;
            have_best = true;
        }
    }
    if (!have_best) {
        throw invalid_plan_error("solve_horizon: no partition with defined fill rates");
    }

    SolveResult result;
    result.plan = std::move(best_plan);
    result.evaluation = evaluate_plan(horizon, costs, result.plan);
    result.partitions_examined = static_cast<std::int64_t>(mask_end);
    return result;
}

}  // namespace fillplan
