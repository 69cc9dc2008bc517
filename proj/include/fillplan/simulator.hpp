#pragma once

#include <cstdint>
#include <vector>

#include "fillplan/plan.hpp"

namespace fillplan {

enum class NegativeDemandPolicy {
    truncate_at_zero,  // clamp each sampled demand at zero (physical default)
    allow_negative,    // keep the full normal support (matches the analytic formulas)
};

struct SimulationConfig {
    std::int64_t replications = 1;
    std::uint64_t seed = 0;
    NegativeDemandPolicy negative_demand_policy = NegativeDemandPolicy::truncate_at_zero;
};

/// Point estimate with a 95% confidence half-width (normal critical value
/// 1.96 on the sample standard error; 0 when fewer than two observations).
struct Estimate {
    double value = 0.0;
    double half_width_95 = 0.0;
};

struct SimulationReport {
    /// One minus (summed backorders over summed demand) across replications.
    Estimate fill_rate_ratio_of_means;
    /// Mean over replications of the per-path fill rate; paths with zero
    /// total demand are left out and counted in excluded_paths.
    Estimate fill_rate_mean_of_ratios;
    std::vector<Estimate> per_cycle_backorders_mean;
    /// Holding charged on end-of-period on-hand stock, max(0, I_t).
    Estimate holding_cost_mean;
    /// Holding charged on net inventory I_t itself: the analytic proxy the
    /// planners cost, shown so the on-hand gap stays visible.
    Estimate net_holding_cost_mean;
    double ordering_cost = 0.0;
    std::int64_t excluded_paths = 0;
    std::int64_t replications = 0;
    std::uint64_t seed = 0;
};

/// Monte Carlo run of the order-up-to policy. Each cycle start raises net
/// inventory to the cycle level (outstanding backorders are filled first);
/// per-period backorders accrue as max(0, -I_t) - max(0, -I_{t-1}). Each
/// replication draws from its own counter-derived substream, so results are
/// bit-identical for a given seed and independent of scheduling.
SimulationReport simulate(const Horizon& horizon, const CyclePlan& plan, const CostParams& costs,
                          const SimulationConfig& config);

}  // namespace fillplan
