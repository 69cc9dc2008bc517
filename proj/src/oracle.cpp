#include "fillplan/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fillplan/errors.hpp"

namespace fillplan {
namespace {

// Expected backorders for each whole-step buffer 0..steps on top of the mean.
std::vector<double> backorder_table(const CycleDemand& demand, double grid_step, int steps) {
    std::vector<double> table(static_cast<std::size_t>(steps) + 1);
    for (int k = 0; k <= steps; ++k) {
        table[static_cast<std::size_t>(k)] =
            expected_cycle_backorders(demand, demand.mu + k * grid_step);
    }
    return table;
}

}  // namespace

SolveResult brute_force_percycle(const Horizon& horizon, const CostParams& costs,
                                 const ServiceTarget& target) {
    const int T = horizon.length();
    if (horizon.period(1).mean <= 0.0) {
        throw invalid_plan_error(
            "brute_force_percycle: period 1 has zero mean demand; no cycle starting there has a "
            "defined fill rate");
    }
    const std::vector<CycleEdge> edges = build_edges(horizon, costs, target);

    bool have_best = false;
    PlanChoice best_choice;
    CyclePlan best_plan;
    const std::uint64_t mask_end = std::uint64_t{1} << (T - 1);
    for (std::uint64_t mask = 0; mask < mask_end; ++mask) {
        const std::vector<Cycle> partition = partition_from_mask(T, mask);
        PlanChoice candidate;
        CyclePlan plan;
        bool ok = true;
        for (const Cycle& c : partition) {
            const CycleEdge& e = edge_for(edges, T, c.start, c.end);
            if (!e.feasible) {
                ok = false;
                break;
            }
            candidate.cost += e.cost;
            candidate.starts.push_back(c.start);
            plan.cycles.push_back(e.cycle);
            plan.levels.push_back(e.level);
        }
        if (!ok) continue;
        candidate.cycle_count = static_cast<int>(partition.size());
        if (!have_best || better_choice(candidate, best_choice)) {
            best_choice = std::move(candidate);
            best_plan = std::move(plan);
            have_best = true;
        }
    }
    if (!have_best) {
        throw invalid_plan_error("brute_force_percycle: no feasible cover of the horizon");
    }

    SolveResult result;
    result.plan = std::move(best_plan);
    result.evaluation = evaluate_plan(horizon, costs, result.plan);
    result.partitions_examined = static_cast<std::int64_t>(mask_end);
    return result;
}

GridAllocation grid_allocate(const Horizon& horizon, const CostParams& costs,
                             const std::vector<Cycle>& partition, const BackorderBudget& budget,
                             double grid_step) {
    check_cost_params(costs);
    validate_partition(horizon, partition);
    if (!(grid_step > 0.0) || !std::isfinite(grid_step)) {
        throw std::domain_error("grid_allocate: grid step must be finite and positive");
    }
    const std::size_t m = partition.size();
    if (m > 3) {
        throw capacity_error("grid_allocate: exhaustive sweep supports at most 3 cycles, got " +
                             std::to_string(m));
    }

    std::vector<CycleDemand> demands;
    std::vector<int> steps;
    std::vector<std::vector<double>> tables;
    for (const Cycle& c : partition) {
        const CycleDemand d = aggregate_cycle(horizon, c);
        if (d.mu <= 0.0) {
            throw invalid_plan_error("grid_allocate: cycle [" + std::to_string(c.start) + ", " +
                                     std::to_string(c.end) + "] has zero mean demand");
        }
        const int k_max = static_cast<int>(std::ceil(8.0 * d.sigma / grid_step));
        demands.push_back(d);
        steps.push_back(k_max);
        tables.push_back(backorder_table(d, grid_step, k_max));
    }

    // Weight of one buffer step in the objective: holding cost accrues once
    // per period of the cycle.
    std::vector<double> weights;
    for (const Cycle& c : partition) {
        weights.push_back(costs.holding_cost * c.length() * grid_step);
    }

    std::vector<int> best(m, -1);
    double best_cost = std::numeric_limits<double>::infinity();
    const auto consider = [&](const std::vector<int>& ks) {
        double cost = 0.0;
        for (std::size_t i = 0; i < m; ++i) cost += weights[i] * ks[i];
        if (cost < best_cost) {
            best_cost = cost;
            best = ks;
        }
    };

    if (m == 1) {
        // Backorders fall as the buffer grows: binary search the first
        // feasible step.
        const std::vector<double>& b = tables[0];
        int lo = 0;
        int hi = steps[0];
        if (b[static_cast<std::size_t>(hi)] <= budget.budget) {
            while (lo < hi) {
                const int mid = lo + (hi - lo) / 2;
                if (b[static_cast<std::size_t>(mid)] <= budget.budget) {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            consider({lo});
        }
    } else if (m == 2) {
        // As the first buffer grows, the smallest feasible second buffer can
        // only shrink, so one descending pointer covers the whole sweep.
        int k2 = steps[1];
        for (int k1 = 0; k1 <= steps[0]; ++k1) {
            const double b1 = tables[0][static_cast<std::size_t>(k1)];
            if (b1 + tables[1][static_cast<std::size_t>(k2)] > budget.budget) continue;
            while (k2 > 0 && b1 + tables[1][static_cast<std::size_t>(k2) - 1] <= budget.budget) {
                --k2;
            }
            consider({k1, k2});
            if (k2 == 0) break;  // larger first buffers only cost more
        }
    } else {
        for (int k1 = 0; k1 <= steps[0]; ++k1) {
            const double remaining = budget.budget - tables[0][static_cast<std::size_t>(k1)];
            int k3 = steps[2];
            for (int k2 = 0; k2 <= steps[1]; ++k2) {
                const double b2 = tables[1][static_cast<std::size_t>(k2)];
                if (b2 + tables[2][static_cast<std::size_t>(k3)] > remaining) continue;
                while (k3 > 0 &&
                       b2 + tables[2][static_cast<std::size_t>(k3) - 1] <= remaining) {
                    --k3;
                }
                consider({k1, k2, k3});
                if (k3 == 0) break;
            }
        }
    }

    if (best[0] < 0) {
        throw numeric_error("grid_allocate: no feasible buffer combination on the grid");
    }

    GridAllocation result;
    for (std::size_t i = 0; i < m; ++i) {
        result.levels.push_back(demands[i].mu + best[i] * grid_step);
        result.total_backorders += tables[i][static_cast<std::size_t>(best[i])];
    }
    const PlanEvaluation eval =
        evaluate_plan(horizon, costs, CyclePlan{partition, result.levels});
    result.holding_cost = eval.holding_cost;
    return result;
}

SolveResult grid_solve_horizon(const Horizon& horizon, const CostParams& costs,
                               const ServiceTarget& target, double grid_step) {
    const int T = horizon.length();
    if (T > 3) {
        throw capacity_error("grid_solve_horizon: exhaustive sweep supports horizons of at most "
                             "3 periods, got " +
                             std::to_string(T));
    }
    if (horizon.period(1).mean <= 0.0) {
        throw invalid_plan_error("grid_solve_horizon: period 1 has zero mean demand");
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
        const GridAllocation alloc = grid_allocate(horizon, costs, partition, budget, grid_step);
        PlanChoice candidate;
        candidate.cost =
            alloc.holding_cost + costs.ordering_cost * static_cast<double>(partition.size());
        candidate.cycle_count = static_cast<int>(partition.size());
        for (const Cycle& c : partition) candidate.starts.push_back(c.start);
        if (!have_best || better_choice(candidate, best_choice)) {
            best_choice = std::move(candidate);
            best_plan.cycles = partition;
            best_plan.levels = alloc.levels;
            have_best = true;
        }
    }
    if (!have_best) {
        throw invalid_plan_error("grid_solve_horizon: no partition with defined fill rates");
    }

    SolveResult result;
    result.plan = std::move(best_plan);
    result.evaluation = evaluate_plan(horizon, costs, result.plan);
    result.partitions_examined = static_cast<std::int64_t>(mask_end);
    return result;
}

}  // namespace fillplan
