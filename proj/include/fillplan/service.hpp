#pragma once

#include <span>

#include "fillplan/demand.hpp"

namespace fillplan {

/// Target fill rate beta, constrained to (0, 1).
struct ServiceTarget {
    double beta;

    explicit ServiceTarget(double beta_);

    bool operator==(const ServiceTarget&) const = default;
};

/// Expected units short over a cycle when demand is cd and stock is raised
/// to `level` at the cycle start: sigma * L((level - mu)/sigma), degrading
/// to max(0, mu - level) for deterministic demand.
double expected_cycle_backorders(const CycleDemand& cd, double level);

/// 1 - expected backorders / expected demand. Requires cd.mu > 0.
double cycle_fill_rate(const CycleDemand& cd, double level);

/// Smallest level whose cycle fill rate reaches the target. Exact-real:
/// for sigma > 0 the fill rate at the result equals beta to within 1e-9.
double min_level_for_cycle_fill_rate(const CycleDemand& cd, const ServiceTarget& target);

/// 1 - (sum of per-cycle backorders) / (total horizon mean demand).
double horizon_fill_rate(std::span<const double> per_cycle_backorders, const Horizon& horizon);

}  // namespace fillplan
