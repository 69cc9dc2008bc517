#include "fillplan/service.hpp"

#include <cmath>
#include <stdexcept>

#include "fillplan/errors.hpp"
#include "fillplan/gaussian.hpp"

namespace fillplan {

ServiceTarget::ServiceTarget(double beta_) : beta(beta_) {
    if (!std::isfinite(beta) || beta <= 0.0 || beta >= 1.0) {
        throw std::domain_error("service target: beta must lie in (0, 1)");
    }
}

double expected_cycle_backorders(const CycleDemand& cd, double level) {
    if (!std::isfinite(level)) {
        throw std::domain_error("expected_cycle_backorders: non-finite level");
    }
    if (!std::isfinite(cd.mu) || !std::isfinite(cd.sigma) || cd.sigma < 0.0) {
        throw std::domain_error("expected_cycle_backorders: invalid cycle demand");
    }
    if (cd.sigma == 0.0) {
        return std::fmax(0.0, cd.mu - level);
    }
    return cd.sigma * std_normal_loss((level - cd.mu) / cd.sigma);
}

double cycle_fill_rate(const CycleDemand& cd, double level) {
    if (!(cd.mu > 0.0)) {
        throw undefined_ratio_error("cycle_fill_rate: cycle mean demand is zero");
    }
    return 1.0 - expected_cycle_backorders(cd, level) / cd.mu;
}

double min_level_for_cycle_fill_rate(const CycleDemand& cd, const ServiceTarget& target) {
    if (!(cd.mu > 0.0)) {
        throw std::domain_error("min_level_for_cycle_fill_rate: cycle mean must be positive");
    }
    if (!std::isfinite(cd.sigma) || cd.sigma < 0.0) {
        throw std::domain_error("min_level_for_cycle_fill_rate: invalid sigma");
    }
    if (cd.sigma == 0.0) {
        return cd.mu;
    }
    const double loss_target = (1.0 - target.beta) * cd.mu / cd.sigma;
    return cd.mu + cd.sigma * inv_std_normal_loss(loss_target);
}

double horizon_fill_rate(std::span<const double> per_cycle_backorders, const Horizon& horizon) {
    const double demand = horizon.total_mean();
    if (!(demand > 0.0)) {
        throw undefined_ratio_error("horizon_fill_rate: total mean demand is zero");
    }
    double backorders = 0.0;
    for (double b : per_cycle_backorders) backorders += b;
    return 1.0 - backorders / demand;
}

}  // namespace fillplan
