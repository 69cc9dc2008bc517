#pragma once

#include <cstdint>
#include <vector>

#include "fillplan/plan.hpp"
#include "fillplan/service.hpp"

namespace fillplan {

/// One candidate cycle with its service-feasible order-up-to level and the
/// cost of using it (ordering cost plus holding over the cycle's periods).
/// Levels are set in whole demand units: the service bound is rounded up to
/// the next integer after clamping at the cycle's total mean demand.
struct CycleEdge {
    Cycle cycle;
    double level = 0.0;
    double cost = 0.0;
    bool feasible = true;
};

/// All T*(T+1)/2 candidate cycles, ordered by (start, end). Cycles with zero
/// total mean demand have no defined fill rate and are marked infeasible.
std::vector<CycleEdge> build_edges(const Horizon& horizon, const CostParams& costs,
                                   const ServiceTarget& target);

/// Look up the edge for cycle [start, end] in a build_edges result.
const CycleEdge& edge_for(const std::vector<CycleEdge>& edges, int horizon_length, int start,
                          int end);

/// Total cost plus the tie-break keys: fewer cycles first, then the
/// lexicographically earliest set of cycle start indices.
struct PlanChoice {
    double cost = 0.0;
    int cycle_count = 0;
    std::vector<int> starts;
};

/// Strict "a is preferred over b" under the deterministic tie-break order.
bool better_choice(const PlanChoice& a, const PlanChoice& b);

struct SolveResult {
    CyclePlan plan;
    PlanEvaluation evaluation;
    std::int64_t partitions_examined = 0;
};

/// Minimum-cost plan subject to a fill rate of at least beta on every cycle,
/// via shortest path over cycle boundaries. Exact over all 2^(T-1) partitions.
SolveResult solve_percycle(const Horizon& horizon, const CostParams& costs,
                           const ServiceTarget& target);

}  // namespace fillplan
