#include "fillplan/solver_percycle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fillplan/errors.hpp"

namespace fillplan {

std::vector<CycleEdge> build_edges(const Horizon& horizon, const CostParams& costs,
                                   const ServiceTarget& target) {
    check_cost_params(costs);
    const int T = horizon.length();
    std::vector<CycleEdge> edges;
    edges.reserve(static_cast<std::size_t>(T) * (T + 1) / 2);
    for (int start = 1; start <= T; ++start) {
        for (int end = start; end <= T; ++end) {
            CycleEdge e;
            e.cycle = Cycle{start, end};
            const CycleDemand demand = aggregate_cycle(horizon, e.cycle);
            if (demand.mu <= 0.0) {
                // No demand means no fill-rate constraint to satisfy; covering
                // such periods is only ever useful as part of a wider cycle.
                e.feasible = false;
                edges.push_back(e);
                continue;
            }
            const double bound = min_level_for_cycle_fill_rate(demand, target);
            // Order in whole units; the tiny slack keeps an integral bound
            // from being pushed up a full unit by float noise.
            e.level = std::ceil(std::max(bound, demand.mu) - 1e-9);
            double holding = 0.0;
            for (int t = start; t <= end; ++t) {
                holding += e.level - cumulative_mean(horizon, start, t);
            }
            e.cost = costs.ordering_cost + costs.holding_cost * holding;
            edges.push_back(e);
        }
    }
    return edges;
}

const CycleEdge& edge_for(const std::vector<CycleEdge>& edges, int horizon_length, int start,
                          int end) {
    if (start < 1 || end < start || end > horizon_length) {
        throw std::out_of_range("edge_for: cycle [" + std::to_string(start) + ", " +
                                std::to_string(end) + "] outside horizon");
    }
    // Edges are emitted in (start, end) order: start fixed, end ascending.
    const int before = (start - 1) * horizon_length - (start - 1) * (start - 2) / 2;
    return edges.at(static_cast<std::size_t>(before + end - start));
}

bool better_choice(const PlanChoice& a, const PlanChoice& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.cycle_count != b.cycle_count) return a.cycle_count < b.cycle_count;
    return a.starts < b.starts;
}

SolveResult solve_percycle(const Horizon& horizon, const CostParams& costs,
                           const ServiceTarget& target) {
    const int T = horizon.length();
    if (horizon.period(1).mean <= 0.0) {
        throw invalid_plan_error(
            "solve_percycle: period 1 has zero mean demand; no cycle starting there has a "
            "defined fill rate");
    }
    const std::vector<CycleEdge> edges = build_edges(horizon, costs, target);

    // best[t] = preferred way to cover periods 1..t; best[0] is the empty plan.
    std::vector<PlanChoice> best(static_cast<std::size_t>(T) + 1);
    std::vector<bool> reachable(static_cast<std::size_t>(T) + 1, false);
    reachable[0] = true;
    for (int end = 1; end <= T; ++end) {
        for (int start = 1; start <= end; ++start) {
            if (!reachable[static_cast<std::size_t>(start) - 1]) continue;
            const CycleEdge& e = edge_for(edges, T, start, end);
            if (!e.feasible) continue;
            const PlanChoice& prev = best[static_cast<std::size_t>(start) - 1];
            PlanChoice candidate;
            candidate.cost = prev.cost + e.cost;
            candidate.cycle_count = prev.cycle_count + 1;
            candidate.starts = prev.starts;
            candidate.starts.push_back(start);
            if (!reachable[static_cast<std::size_t>(end)] ||
                better_choice(candidate, best[static_cast<std::size_t>(end)])) {
                best[static_cast<std::size_t>(end)] = std::move(candidate);
                reachable[static_cast<std::size_t>(end)] = true;
            }
        }
    }
    if (!reachable[static_cast<std::size_t>(T)]) {
        throw invalid_plan_error("solve_percycle: no feasible cover of the horizon");
    }

    SolveResult result;
    const PlanChoice& win = best[static_cast<std::size_t>(T)];
    for (std::size_t i = 0; i < win.starts.size(); ++i) {
        const int start = win.starts[i];
        const int end = (i + 1 < win.starts.size()) ? win.starts[i + 1] - 1 : T;
        const CycleEdge& e = edge_for(edges, T, start, end);
        result.plan.cycles.push_back(e.cycle);
        result.plan.levels.push_back(e.level);
    }
    result.evaluation = evaluate_plan(horizon, costs, result.plan);
    const int boundaries = T - 1;
    result.partitions_examined = boundaries >= 63 ? std::numeric_limits<std::int64_t>::max()
                                                  : (std::int64_t{1} << boundaries);
    return result;
}

}  // namespace fillplan
