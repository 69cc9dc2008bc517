#include "fillplan/simulator.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "fillplan/errors.hpp"

namespace fillplan {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// One standard normal per call, two engine outputs, no cached spare: the
// draw count per period is fixed, which keeps substreams aligned no matter
// how results are consumed.
double standard_normal(std::mt19937_64& eng) {
    const std::uint64_t a = eng();
    const std::uint64_t b = eng();
    const double u1 = static_cast<double>((a >> 11) + 1) * 0x1p-53;  // in (0, 1]
    const double u2 = static_cast<double>(b >> 11) * 0x1p-53;        // in [0, 1)
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

// Neumaier-compensated sum: replication totals span many orders of
// magnitude at 10^6 replications and plain summation loses the variance.
struct Accum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    double total() const { return sum + comp; }
};

Estimate mean_estimate(const Accum& sum, const Accum& sumsq, std::int64_t n) {
    Estimate e;
    if (n <= 0) return e;
    const double nd = static_cast<double>(n);
    e.value = sum.total() / nd;
    if (n >= 2) {
        const double var = (sumsq.total() - nd * e.value * e.value) / (nd - 1.0);
        e.half_width_95 = 1.96 * std::sqrt(std::fmax(var, 0.0) / nd);
    }
    return e;
}

}  // namespace

SimulationReport simulate(const Horizon& horizon, const CyclePlan& plan, const CostParams& costs,
                          const SimulationConfig& config) {
    check_cost_params(costs);
    validate_plan(horizon, plan);
    if (config.replications < 1) {
        throw std::domain_error("simulate: replications must be at least 1");
    }

    const std::size_t m = plan.cycles.size();
    const std::int64_t n = config.replications;

    std::vector<Accum> cycle_sum(m);
    std::vector<Accum> cycle_sumsq(m);
    Accum demand_sum, demand_sumsq;
    Accum back_sum, back_sumsq, back_demand_cross;
    Accum holding_sum, holding_sumsq;
    Accum net_sum, net_sumsq;
    Accum ratio_sum, ratio_sumsq;
    std::int64_t excluded = 0;

    std::vector<double> cycle_back(m);
    for (std::int64_t r = 0; r < n; ++r) {
        std::mt19937_64 eng(
            splitmix64(config.seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(r + 1)));
        double inventory = 0.0;
        double path_demand = 0.0;
        double path_back = 0.0;
        double path_holding = 0.0;
        double path_net = 0.0;
        for (std::size_t c = 0; c < m; ++c) {
            const Cycle& cycle = plan.cycles[c];
            const double order = plan.levels[c] - inventory;
            inventory += order;
            double prev_short = std::fmax(0.0, -inventory);
            double back = 0.0;
            for (int t = cycle.start; t <= cycle.end; ++t) {
                const PeriodForecast& f = horizon.period(t);
                double demand = f.mean + f.std * standard_normal(eng);
                if (config.negative_demand_policy == NegativeDemandPolicy::truncate_at_zero) {
                    demand = std::fmax(0.0, demand);
                }
                inventory -= demand;
                const double cur_short = std::fmax(0.0, -inventory);
                back += cur_short - prev_short;
                prev_short = cur_short;
                path_demand += demand;
                path_holding += costs.holding_cost * std::fmax(0.0, inventory);
                path_net += costs.holding_cost * inventory;
            }
            cycle_back[c] = back;
            path_back += back;
        }
        for (std::size_t c = 0; c < m; ++c) {
            cycle_sum[c].add(cycle_back[c]);
            cycle_sumsq[c].add(cycle_back[c] * cycle_back[c]);
        }
        demand_sum.add(path_demand);
        demand_sumsq.add(path_demand * path_demand);
        back_sum.add(path_back);
        back_sumsq.add(path_back * path_back);
        back_demand_cross.add(path_back * path_demand);
        holding_sum.add(path_holding);
        holding_sumsq.add(path_holding * path_holding);
        net_sum.add(path_net);
        net_sumsq.add(path_net * path_net);
        if (path_demand > 0.0) {
            const double fill = 1.0 - path_back / path_demand;
            ratio_sum.add(fill);
            ratio_sumsq.add(fill * fill);
        } else {
            ++excluded;
        }
    }

    SimulationReport report;
    report.replications = n;
    report.seed = config.seed;
    report.excluded_paths = excluded;
    report.ordering_cost = costs.ordering_cost * static_cast<double>(m);
    for (std::size_t c = 0; c < m; ++c) {
        report.per_cycle_backorders_mean.push_back(mean_estimate(cycle_sum[c], cycle_sumsq[c], n));
    }
    report.holding_cost_mean = mean_estimate(holding_sum, holding_sumsq, n);
    report.net_holding_cost_mean = mean_estimate(net_sum, net_sumsq, n);

    const double total_demand = demand_sum.total();
    if (total_demand > 0.0) {
        const double nd = static_cast<double>(n);
        const double mean_d = total_demand / nd;
        const double mean_b = back_sum.total() / nd;
        const double ratio = mean_b / mean_d;
        report.fill_rate_ratio_of_means.value = 1.0 - ratio;
        if (n >= 2) {
            // Delta-method standard error of the ratio of means.
            const double var_b = (back_sumsq.total() - nd * mean_b * mean_b) / (nd - 1.0);
            const double var_d = (demand_sumsq.total() - nd * mean_d * mean_d) / (nd - 1.0);
            const double cov =
                (back_demand_cross.total() - nd * mean_b * mean_d) / (nd - 1.0);
            const double var_ratio =
                (var_b - 2.0 * ratio * cov + ratio * ratio * var_d) / (mean_d * mean_d);
            report.fill_rate_ratio_of_means.half_width_95 =
                1.96 * std::sqrt(std::fmax(var_ratio, 0.0) / nd);
        }
    } else {
        // No demand anywhere: everything that was asked for (nothing) was
        // served.
        report.fill_rate_ratio_of_means = Estimate{1.0, 0.0};
    }

    const std::int64_t included = n - excluded;
    if (included > 0) {
        report.fill_rate_mean_of_ratios = mean_estimate(ratio_sum, ratio_sumsq, included);
    } else {
        report.fill_rate_mean_of_ratios = Estimate{1.0, 0.0};
    }
    return report;
}

}  // namespace fillplan
