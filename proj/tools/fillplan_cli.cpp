#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fillplan/errors.hpp"
#include "fillplan/io.hpp"
#include "fillplan/oracle.hpp"
#include "fillplan/simulator.hpp"
#include "fillplan/solver_horizon.hpp"
#include "fillplan/solver_percycle.hpp"

namespace {

using fillplan::CyclePlan;
using fillplan::Instance;
using fillplan::PlanReport;
using fillplan::SolveResult;
using ordered_json = nlohmann::ordered_json;

struct Options {
    std::string mode;
    std::string instance_path;
    std::string plan_path;
    std::optional<double> beta;
    std::int64_t replications = 10000;
    std::uint64_t seed = 1;
    int enum_cap = fillplan::kDefaultEnumCap;
    double grid_step = 0.01;
    std::string output = "human";
    std::string negative_demand = "truncate";
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string cycle_label(const fillplan::Cycle& c) {
    if (c.start == c.end) return std::to_string(c.start);
    return std::to_string(c.start) + "-" + std::to_string(c.end);
}

void print_plan_human(std::ostream& out, const PlanReport& report) {
    const auto& ev = report.evaluation;
    out << "mode: " << report.mode << "\n\n";
    out << std::left << std::setw(10) << "cycle" << std::right << std::setw(12) << "level"
        << std::setw(12) << "buffer" << std::setw(14) << "backorders" << std::setw(12)
        << "fill rate"
        << "\n";
    out << std::string(60, '-') << "\n";
    out << std::fixed;
    for (std::size_t i = 0; i < report.plan.cycles.size(); ++i) {
        out << std::left << std::setw(10) << cycle_label(report.plan.cycles[i]) << std::right
            << std::setprecision(2) << std::setw(12) << report.plan.levels[i] << std::setw(12)
            << report.buffers[i] << std::setw(14) << ev.per_cycle_backorders[i]
            << std::setprecision(4) << std::setw(12) << ev.per_cycle_fill_rate[i] << "\n";
    }
    out << "\n";
    out << "horizon fill rate: " << std::setprecision(4) << ev.horizon_fill_rate << "\n";
    out << std::setprecision(2);
    out << "holding cost:      " << ev.holding_cost << "\n";
    out << "ordering cost:     " << ev.ordering_cost << "\n";
    out << "total cost:        " << ev.total_cost << "\n";
    out << "feasible:          " << (ev.feasible ? "yes" : "no") << "\n";
    out << "partitions:        " << report.partitions_examined << "\n";
    out << std::setprecision(3) << "runtime [s]:       " << report.runtime_seconds << "\n";
    out.unsetf(std::ios::fixed);
}

void print_estimate(std::ostream& out, const char* label, const fillplan::Estimate& e,
                    int precision) {
    out << label << std::setprecision(precision) << e.value << " +/- " << e.half_width_95 << "\n";
}

void print_simulation_human(std::ostream& out, const fillplan::SimulationReport& report,
                            double runtime_seconds) {
    out << "mode: simulate\n";
    out << "replications: " << report.replications << ", seed: " << report.seed << "\n\n";
    out << std::fixed;
    print_estimate(out, "fill rate (ratio of means):  ", report.fill_rate_ratio_of_means, 6);
    print_estimate(out, "fill rate (mean of ratios):  ", report.fill_rate_mean_of_ratios, 6);
    for (std::size_t i = 0; i < report.per_cycle_backorders_mean.size(); ++i) {
        std::ostringstream label;
        label << "cycle " << i + 1 << " backorders:          ";
        print_estimate(out, label.str().c_str(), report.per_cycle_backorders_mean[i], 4);
    }
    print_estimate(out, "holding cost (on hand):      ", report.holding_cost_mean, 2);
    print_estimate(out, "holding cost (net proxy):    ", report.net_holding_cost_mean, 2);
    out << std::setprecision(2) << "ordering cost:               " << report.ordering_cost << "\n";
    out << "excluded zero-demand paths:  " << report.excluded_paths << "\n";
    out << std::setprecision(3) << "runtime [s]:                 " << runtime_seconds << "\n";
    out.unsetf(std::ios::fixed);
}

Instance load_instance_with_overrides(const Options& opt) {
    Instance instance = fillplan::load_instance(opt.instance_path);
    if (opt.beta) {
        instance.target = fillplan::ServiceTarget(*opt.beta);
    }
    return instance;
}

int run_solve(const Options& opt) {
    const Instance instance = load_instance_with_overrides(opt);
    const auto start = std::chrono::steady_clock::now();
    SolveResult result;
    if (opt.mode == "solve-percycle") {
        result = fillplan::solve_percycle(instance.horizon, instance.costs, instance.target);
    } else {
        result = fillplan::solve_horizon(instance.horizon, instance.costs, instance.target,
                                         opt.enum_cap);
    }
    const PlanReport report =
        fillplan::make_report(opt.mode, instance.horizon, instance.costs, result.plan,
                              result.partitions_examined, seconds_since(start));
    if (opt.output == "machine") {
        std::cout << fillplan::serialize_report(report);
    } else {
        print_plan_human(std::cout, report);
    }
    return 0;
}

int run_evaluate(const Options& opt) {
    const Instance instance = load_instance_with_overrides(opt);
    const CyclePlan plan = fillplan::load_plan(opt.plan_path);
    const auto start = std::chrono::steady_clock::now();
    const PlanReport report = fillplan::make_report("evaluate", instance.horizon, instance.costs,
                                                    plan, 0, seconds_since(start));
    if (opt.output == "machine") {
        std::cout << fillplan::serialize_report(report);
    } else {
        print_plan_human(std::cout, report);
    }
    return 0;
}

int run_simulate(const Options& opt) {
    const Instance instance = load_instance_with_overrides(opt);
    const CyclePlan plan = fillplan::load_plan(opt.plan_path);
    fillplan::SimulationConfig config;
    config.replications = opt.replications;
    config.seed = opt.seed;
    config.negative_demand_policy = opt.negative_demand == "allow"
                                        ? fillplan::NegativeDemandPolicy::allow_negative
                                        : fillplan::NegativeDemandPolicy::truncate_at_zero;
    const auto start = std::chrono::steady_clock::now();
    const fillplan::SimulationReport report =
        fillplan::simulate(instance.horizon, plan, instance.costs, config);
    const double runtime = seconds_since(start);
    if (opt.output == "machine") {
        std::cout << fillplan::serialize_simulation(report, runtime);
    } else {
        print_simulation_human(std::cout, report, runtime);
    }
    return 0;
}

int run_oracle(const Options& opt) {
    const Instance instance = load_instance_with_overrides(opt);

    const auto pc_start = std::chrono::steady_clock::now();
    const SolveResult fast_pc =
        fillplan::solve_percycle(instance.horizon, instance.costs, instance.target);
    const SolveResult slow_pc =
        fillplan::brute_force_percycle(instance.horizon, instance.costs, instance.target);
    const double pc_runtime = seconds_since(pc_start);
    const bool pc_agree = fast_pc.plan == slow_pc.plan &&
                          fast_pc.evaluation.total_cost == slow_pc.evaluation.total_cost;

    const PlanReport fast_pc_report =
        fillplan::make_report("solve-percycle", instance.horizon, instance.costs, fast_pc.plan,
                              fast_pc.partitions_examined, pc_runtime);
    const PlanReport slow_pc_report =
        fillplan::make_report("oracle-percycle", instance.horizon, instance.costs, slow_pc.plan,
                              slow_pc.partitions_examined, pc_runtime);

    std::optional<PlanReport> fast_h_report;
    std::optional<PlanReport> slow_h_report;
    std::optional<bool> horizon_agree;
    double horizon_tolerance = 0.0;
    std::string horizon_skip_reason;
    if (instance.horizon.length() <= 3) {
        const auto h_start = std::chrono::steady_clock::now();
        const SolveResult fast_h = fillplan::solve_horizon(instance.horizon, instance.costs,
                                                           instance.target, opt.enum_cap);
        const SolveResult slow_h = fillplan::grid_solve_horizon(instance.horizon, instance.costs,
                                                                instance.target, opt.grid_step);
        const double h_runtime = seconds_since(h_start);
        // The grid restricts levels, so its optimum can sit above the exact
        // one by at most one grid step of holding cost per cycle.
        for (const fillplan::Cycle& c : slow_h.plan.cycles) {
            horizon_tolerance += opt.grid_step * instance.costs.holding_cost * c.length();
        }
        horizon_agree = std::abs(fast_h.evaluation.total_cost - slow_h.evaluation.total_cost) <=
                        horizon_tolerance;
        fast_h_report = fillplan::make_report("solve-horizon", instance.horizon, instance.costs,
                                              fast_h.plan, fast_h.partitions_examined, h_runtime);
        slow_h_report = fillplan::make_report("oracle-horizon", instance.horizon, instance.costs,
                                              slow_h.plan, slow_h.partitions_examined, h_runtime);
    } else {
        horizon_skip_reason = "grid verification supports horizons of at most 3 periods";
    }

    if (opt.output == "machine") {
        ordered_json doc;
        doc["mode"] = "oracle";
        doc["percycle"] = {
            {"solver", ordered_json::parse(fillplan::serialize_report(fast_pc_report))},
            {"oracle", ordered_json::parse(fillplan::serialize_report(slow_pc_report))},
            {"agreement", pc_agree}};
        if (horizon_agree) {
            doc["horizon"] = {
                {"solver", ordered_json::parse(fillplan::serialize_report(*fast_h_report))},
                {"oracle", ordered_json::parse(fillplan::serialize_report(*slow_h_report))},
                {"tolerance", horizon_tolerance},
                {"agreement", *horizon_agree}};
        } else {
            doc["horizon"] = {{"skipped", horizon_skip_reason}};
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "== per-cycle solver vs exhaustive enumeration ==\n";
        print_plan_human(std::cout, fast_pc_report);
        std::cout << "\nagreement: " << (pc_agree ? "yes" : "NO") << "\n";
        if (horizon_agree) {
            std::cout << "\n== horizon solver vs grid search (step " << opt.grid_step << ") ==\n";
            print_plan_human(std::cout, *fast_h_report);
            std::cout << "\ngrid-search cost: " << std::fixed << std::setprecision(4)
                      << slow_h_report->evaluation.total_cost << " (tolerance " << horizon_tolerance
                      << ")\n";
            std::cout.unsetf(std::ios::fixed);
            std::cout << "agreement: " << (*horizon_agree ? "yes" : "NO") << "\n";
        } else {
            std::cout << "\nhorizon grid verification skipped: " << horizon_skip_reason << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Replenishment-cycle planning under fill-rate constraints"};
    app.add_option("--mode", opt.mode, "What to run")
        ->required()
        ->check(CLI::IsMember({"solve-percycle", "solve-horizon", "evaluate", "simulate",
                               "oracle"}));
    app.add_option("--instance", opt.instance_path, "Instance file")->required();
    app.add_option("--plan", opt.plan_path, "Plan file (evaluate and simulate)");
    double beta_flag = 0.0;
    CLI::Option* beta_opt =
        app.add_option("--beta", beta_flag, "Fill-rate target, overrides the instance file");
    app.add_option("--replications", opt.replications, "Simulation replications");
    app.add_option("--seed", opt.seed, "Simulation master seed");
    app.add_option("--enum-cap", opt.enum_cap,
                   "Most boundary bits the horizon solver may enumerate (2^bits partitions)");
    app.add_option("--grid-step", opt.grid_step, "Oracle buffer grid resolution");
    app.add_option("--output", opt.output, "Report style")
        ->check(CLI::IsMember({"human", "machine"}));
    app.add_option("--negative-demand", opt.negative_demand,
                   "Sampled negative demand handling")
        ->check(CLI::IsMember({"truncate", "allow"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (*beta_opt) opt.beta = beta_flag;

    try {
        if (opt.mode == "evaluate" || opt.mode == "simulate") {
            if (opt.plan_path.empty()) {
                std::cerr << "error: --plan is required for mode " << opt.mode << "\n";
                return 2;
            }
        }
        if (opt.mode == "solve-percycle" || opt.mode == "solve-horizon") return run_solve(opt);
        if (opt.mode == "evaluate") return run_evaluate(opt);
        if (opt.mode == "simulate") return run_simulate(opt);
        return run_oracle(opt);
    } catch (const fillplan::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const fillplan::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 4;
    } catch (const fillplan::schema_error& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
