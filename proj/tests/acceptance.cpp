// Acceptance gate: each criterion prints one PASS/FAIL line per sub-check
// plus a summary line, and the process exits nonzero if anything failed.
// Run with a criterion number 1..8, or no argument for the full gate.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fillplan/gaussian.hpp"
#include "fillplan/io.hpp"
#include "fillplan/oracle.hpp"
#include "fillplan/simulator.hpp"
#include "fillplan/solver_horizon.hpp"
#include "fillplan/solver_percycle.hpp"
#include "support/erfc_oracle.hpp"
#include "support/random_instances.hpp"

using namespace fillplan;
using testsupport::random_instances;
using testsupport::RandomInstance;

namespace {

constexpr unsigned kCorpusSeed = 20240817;
constexpr int kCorpusSize = 200;

struct Checker {
    int passed = 0;
    int failed = 0;

    void check(bool ok, const std::string& label) {
        std::cout << (ok ? "PASS" : "FAIL") << ": " << label << "\n";
        ++(ok ? passed : failed);
    }

    void near(double actual, double expected, double tol, const std::string& label) {
        std::ostringstream msg;
        msg << label << " (got " << std::setprecision(10) << actual << ", want " << expected
            << " +/- " << tol << ")";
        check(std::abs(actual - expected) <= tol, msg.str());
    }

    void at_most(double actual, double bound, const std::string& label) {
        std::ostringstream msg;
        msg << label << " (got " << std::setprecision(10) << actual << ", bound " << bound << ")";
        check(actual <= bound, msg.str());
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Horizon golden_horizon() { return Horizon({{1000.0, 200.0}, {2000.0, 200.0}}); }
const CostParams kGoldenCosts{0.0, 1.0};
const ServiceTarget kGoldenTarget{0.98};

int criterion1(Checker& c) {
    const auto start = std::chrono::steady_clock::now();
    const SolveResult r = solve_percycle(golden_horizon(), kGoldenCosts, kGoldenTarget);
    const double runtime = seconds_since(start);
    const auto& ev = r.evaluation;
    if (r.plan.levels.size() != 2) {
        c.check(false, "per-cycle solve returns two cycles");
        return c.failed;
    }
    c.near(r.plan.levels[0] - 1000.0, 181.0, 0.5, "cycle 1 buffer");
    c.near(r.plan.levels[1] - 2000.0, 99.0, 0.5, "cycle 2 buffer");
    c.near(r.plan.levels[0], 1181.0, 0.5, "cycle 1 order-up-to level");
    c.near(r.plan.levels[1], 2099.0, 0.5, "cycle 2 order-up-to level");
    c.near(ev.per_cycle_backorders[0], 19.90, 0.05, "cycle 1 expected backorders");
    c.near(ev.per_cycle_backorders[1], 39.86, 0.05, "cycle 2 expected backorders");
    c.near(ev.horizon_fill_rate, 0.98, 1e-3, "horizon fill rate");
    c.near(ev.total_cost, 280.0, 0.5, "total cost");
    c.at_most(runtime, 1.0, "runtime seconds");
    return c.failed;
}

int criterion2(Checker& c) {
    const auto start = std::chrono::steady_clock::now();
    const CyclePlan plan{{Cycle{1, 1}, Cycle{2, 2}}, {1171.0, 2105.0}};
    const PlanEvaluation ev = evaluate_plan(golden_horizon(), kGoldenCosts, plan);
    const double runtime = seconds_since(start);
    c.near(ev.per_cycle_backorders[0], 21.79, 0.05, "cycle 1 expected backorders");
    c.near(ev.per_cycle_backorders[1], 38.03, 0.05, "cycle 2 expected backorders");
    // Known red: at level 1171 the cycle 1 fill rate is 1 - 21.797/1000,
    // about 0.978, so a 0.96 +/- 0.005 band cannot be met by this formula.
    c.near(ev.per_cycle_fill_rate[0], 0.96, 0.005, "cycle 1 fill rate");
    c.near(ev.per_cycle_fill_rate[1], 0.98, 0.005, "cycle 2 fill rate");
    c.near(ev.horizon_fill_rate, 0.98, 1e-3, "horizon fill rate");
    c.near(ev.total_cost, 276.0, 0.5, "total cost");
    c.check(ev.feasible, "plan is feasible");
    c.at_most(runtime, 1.0, "runtime seconds");
    return c.failed;
}

int criterion3(Checker& c) {
    const auto start = std::chrono::steady_clock::now();
    const SolveResult r = solve_horizon(golden_horizon(), kGoldenCosts, kGoldenTarget);
    const SolveResult grid = grid_solve_horizon(golden_horizon(), kGoldenCosts, kGoldenTarget,
                                                0.01);
    const double runtime = seconds_since(start);
    const auto& ev = r.evaluation;
    c.at_most(ev.total_cost, 276.0, "total cost at most the alternative plan's");
    c.check(ev.total_cost < 280.0, "total cost strictly below the per-cycle optimum");
    c.near(ev.total_cost, grid.evaluation.total_cost, 0.5, "agreement with 0.01-grid search");
    c.near(ev.total_cost, 268.4, 0.5, "total cost");
    if (r.plan.levels.size() == 2) {
        c.near(r.plan.levels[0] - 1000.0, 134.2, 0.5, "cycle 1 buffer");
        c.near(r.plan.levels[1] - 2000.0, 134.2, 0.5, "cycle 2 buffer");
    } else {
        c.check(false, "pooled solve returns two cycles");
    }
    c.at_most(runtime, 10.0, "runtime seconds including the grid search");
    return c.failed;
}

int criterion4(Checker& c) {
    const auto corpus = random_instances(kCorpusSize, kCorpusSeed);
    int dominated = 0;
    double worst_gap = -1e300;
    for (const RandomInstance& inst : corpus) {
        const SolveResult pooled = solve_horizon(inst.horizon, inst.costs, inst.target);
        const SolveResult percycle = solve_percycle(inst.horizon, inst.costs, inst.target);
        const double gap = pooled.evaluation.total_cost - percycle.evaluation.total_cost;
        worst_gap = std::max(worst_gap, gap);
        if (gap <= 1e-6) ++dominated;
    }
    std::ostringstream msg;
    msg << "pooled cost within 1e-6 of per-cycle cost or better on " << dominated << "/"
        << corpus.size() << " instances (worst gap " << std::setprecision(6) << worst_gap << ")";
    c.check(dominated == static_cast<int>(corpus.size()), msg.str());
    return c.failed;
}

int criterion5(Checker& c) {
    const auto corpus = random_instances(kCorpusSize, kCorpusSeed);
    int plan_agree = 0;
    int cost_agree = 0;
    for (const RandomInstance& inst : corpus) {
        const SolveResult fast = solve_percycle(inst.horizon, inst.costs, inst.target);
        const SolveResult slow = brute_force_percycle(inst.horizon, inst.costs, inst.target);
        if (fast.plan == slow.plan) ++plan_agree;
        if (fast.evaluation.total_cost == slow.evaluation.total_cost) ++cost_agree;
    }
    {
        std::ostringstream msg;
        msg << "per-cycle solver plan identical to exhaustive enumeration on " << plan_agree
            << "/" << corpus.size() << " instances";
        c.check(plan_agree == static_cast<int>(corpus.size()), msg.str());
    }
    {
        std::ostringstream msg;
        msg << "per-cycle solver cost identical to exhaustive enumeration on " << cost_agree
            << "/" << corpus.size() << " instances";
        c.check(cost_agree == static_cast<int>(corpus.size()), msg.str());
    }

    // Continuous allocation vs grid sweep on the short-horizon instances.
    int compared = 0;
    int within = 0;
    double worst_excess = 0.0;
    for (const RandomInstance& inst : corpus) {
        const int T = inst.horizon.length();
        if (T > 3) continue;
        double sigma_max = 0.0;
        for (int t = 1; t <= T; ++t) {
            sigma_max = std::max(sigma_max, inst.horizon.period(t).std);
        }
        const double grid_step = std::max(sigma_max / 100.0, 1e-3);
        const BackorderBudget budget = horizon_backorder_budget(inst.horizon, inst.target);
        const std::uint64_t masks = std::uint64_t{1} << (T - 1);
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            const std::vector<Cycle> partition = partition_from_mask(T, mask);
            const AllocationResult cont =
                allocate_levels(inst.horizon, inst.costs, partition, budget);
            const GridAllocation grid =
                grid_allocate(inst.horizon, inst.costs, partition, budget, grid_step);
            double cont_holding = 0.0;
            double tolerance = 0.0;
            for (std::size_t i = 0; i < partition.size(); ++i) {
                const Cycle& cy = partition[i];
                for (int t = cy.start; t <= cy.end; ++t) {
                    cont_holding +=
                        inst.costs.holding_cost * (cont.levels[i] - cumulative_mean(inst.horizon, cy.start, t));
                }
                tolerance += grid_step * inst.costs.holding_cost * cy.length();
            }
            ++compared;
            const double excess = std::abs(grid.holding_cost - cont_holding);
            worst_excess = std::max(worst_excess, excess - tolerance);
            if (excess <= tolerance + 1e-9) ++within;
        }
    }
    std::ostringstream msg;
    msg << "continuous allocation within one grid step of the sweep on " << within << "/"
        << compared << " short-horizon partitions (worst excess beyond tolerance "
        << std::setprecision(4) << worst_excess << ")";
    c.check(compared > 0 && within == compared, msg.str());
    return c.failed;
}

int criterion6(Checker& c) {
    double worst_identity = 0.0;
    for (double z = -8.0; z <= 8.0; z += 0.004) {
        worst_identity =
            std::max(worst_identity, std::abs(std_normal_loss(z) + z - std_normal_loss(-z)));
    }
    c.at_most(worst_identity, 1e-10, "loss identity L(z) + z = L(-z) on [-8, 8]");

    double worst_deriv = 0.0;
    const double h = 1e-5;
    for (double z = -6.0; z <= 6.0; z += 0.01) {
        const double fd = (std_normal_loss(z + h) - std_normal_loss(z - h)) / (2.0 * h);
        const double analytic = -(1.0 - std_normal_cdf(z));
        worst_deriv = std::max(worst_deriv, std::abs(fd - analytic));
    }
    c.at_most(worst_deriv, 1e-6, "loss derivative vs central finite difference");

    double worst_roundtrip = 0.0;
    for (double z = -8.0; z <= 8.0; z += 0.25) {
        worst_roundtrip =
            std::max(worst_roundtrip, std::abs(inv_std_normal_loss(std_normal_loss(z)) - z));
    }
    c.at_most(worst_roundtrip, 1e-8, "inverse loss roundtrip on [-8, 8]");

    double worst_cdf = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const double z = -8.0 + 16.0 * static_cast<double>(k) / 999.0;
        const double ref = static_cast<double>(testsupport::phi_reference(z));
        worst_cdf = std::max(worst_cdf, std::abs(std_normal_cdf(z) - ref));
    }
    c.at_most(worst_cdf, 1e-12, "normal CDF vs high-precision reference at 1000 points");
    return c.failed;
}

int criterion7(Checker& c) {
    const auto start = std::chrono::steady_clock::now();
    SimulationConfig config;
    config.replications = 1000000;
    config.seed = 321;
    config.negative_demand_policy = NegativeDemandPolicy::allow_negative;
    const CyclePlan plan{{Cycle{1, 1}, Cycle{2, 2}}, {1181.0, 2099.0}};
    const SimulationReport a = simulate(golden_horizon(), plan, kGoldenCosts, config);
    const SimulationReport b = simulate(golden_horizon(), plan, kGoldenCosts, config);
    const double runtime = seconds_since(start);

    const double se1 = a.per_cycle_backorders_mean[0].half_width_95 / 1.96;
    const double se2 = a.per_cycle_backorders_mean[1].half_width_95 / 1.96;
    c.near(a.per_cycle_backorders_mean[0].value, 19.90, 3.0 * se1,
           "cycle 1 backorders within 3 standard errors");
    c.near(a.per_cycle_backorders_mean[1].value, 39.86, 3.0 * se2,
           "cycle 2 backorders within 3 standard errors");
    c.near(a.fill_rate_ratio_of_means.value, 0.98, 0.002, "fill rate, ratio of means");
    c.check(serialize_simulation(a, 0.0) == serialize_simulation(b, 0.0),
            "identical seeds give bit-identical reports");
    c.at_most(runtime, 60.0, "runtime seconds for two million-path runs");
    return c.failed;
}

int criterion8(Checker& c) {
    const auto corpus = random_instances(kCorpusSize, kCorpusSeed);
    int percycle_ok = 0;
    int horizon_ok = 0;
    double worst_cycle_slack = 1e300;
    double worst_horizon_slack = 1e300;
    for (const RandomInstance& inst : corpus) {
        const SolveResult percycle = solve_percycle(inst.horizon, inst.costs, inst.target);
        bool all_cycles = true;
        for (double fill : percycle.evaluation.per_cycle_fill_rate) {
            worst_cycle_slack = std::min(worst_cycle_slack, fill - inst.target.beta);
            if (fill < inst.target.beta - 1e-9) all_cycles = false;
        }
        if (all_cycles) ++percycle_ok;

        const SolveResult pooled = solve_horizon(inst.horizon, inst.costs, inst.target);
        const double slack = pooled.evaluation.horizon_fill_rate - inst.target.beta;
        worst_horizon_slack = std::min(worst_horizon_slack, slack);
        if (slack >= -1e-6) ++horizon_ok;
    }
    {
        std::ostringstream msg;
        msg << "per-cycle plans meet the target on every cycle on " << percycle_ok << "/"
            << corpus.size() << " instances (worst slack " << std::setprecision(4)
            << worst_cycle_slack << ")";
        c.check(percycle_ok == static_cast<int>(corpus.size()), msg.str());
    }
    {
        std::ostringstream msg;
        msg << "pooled plans meet the horizon target on " << horizon_ok << "/" << corpus.size()
            << " instances (worst slack " << std::setprecision(4) << worst_horizon_slack << ")";
        c.check(horizon_ok == static_cast<int>(corpus.size()), msg.str());
    }
    return c.failed;
}

int run_criterion(int n) {
    Checker c;
    switch (n) {
        case 1: criterion1(c); break;
        case 2: criterion2(c); break;
        case 3: criterion3(c); break;
        case 4: criterion4(c); break;
        case 5: criterion5(c); break;
        case 6: criterion6(c); break;
        case 7: criterion7(c); break;
        case 8: criterion8(c); break;
        default:
            std::cerr << "unknown criterion " << n << " (expected 1..8)\n";
            return 2;
    }
    std::cout << "acceptance " << n << ": " << (c.failed == 0 ? "PASS" : "FAIL") << " ("
              << c.passed << "/" << c.passed + c.failed << " checks)\n";
    return c.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::cout << std::setprecision(10);
    if (argc > 1) {
        return run_criterion(std::atoi(argv[1]));
    }
    int rc = 0;
    for (int n = 1; n <= 8; ++n) {
        rc |= run_criterion(n);
        std::cout << "\n";
    }
    return rc;
}
