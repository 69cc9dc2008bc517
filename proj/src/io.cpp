#include "fillplan/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "fillplan/errors.hpp"

namespace fillplan {
namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& ctx, const std::string& what) {
    throw schema_error(ctx + ": " + what);
}

ordered_json parse_document(const std::string& text, const std::string& ctx) {
    try {
        return ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        // Covers parse errors and literal overflow alike.
        fail(ctx, e.what());
    }
}

const ordered_json& member(const ordered_json& obj, const std::string& ctx, const char* key) {
    if (!obj.is_object()) fail(ctx, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) fail(ctx, std::string("missing field '") + key + "'");
    return *it;
}

void reject_unknown(const ordered_json& obj, const std::string& ctx,
                    std::initializer_list<std::string_view> keys) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const std::string_view k : keys) {
            if (key == k) {
                known = true;
                break;
            }
        }
        if (!known) fail(ctx, "unknown field '" + key + "'");
    }
}

double number_at(const ordered_json& j, const std::string& ctx) {
    if (!j.is_number()) fail(ctx, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(ctx, "must be finite");
    return v;
}

std::int64_t integer_at(const ordered_json& j, const std::string& ctx) {
    if (!j.is_number_integer()) fail(ctx, "expected an integer");
    return j.get<std::int64_t>();
}

bool bool_at(const ordered_json& j, const std::string& ctx) {
    if (!j.is_boolean()) fail(ctx, "expected a boolean");
    return j.get<bool>();
}

std::vector<double> number_array_at(const ordered_json& j, const std::string& ctx) {
    if (!j.is_array()) fail(ctx, "expected an array");
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(number_at(j[i], ctx + "[" + std::to_string(i) + "]"));
    }
    return out;
}

double parse_csv_field(std::string_view field, const std::string& ctx) {
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) {
        field.remove_prefix(1);
    }
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r')) {
        field.remove_suffix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(value)) {
        fail(ctx, "'" + std::string(field) + "' is not a finite number");
    }
    return value;
}

// Tabular periods block: one "mean,std" line per period.
std::vector<PeriodForecast> periods_from_csv(const std::string& text, const std::string& ctx) {
    std::vector<PeriodForecast> periods;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string line_ctx = ctx + " line " + std::to_string(lineno);
        std::string_view view(line);
        bool blank = true;
        for (const char ch : view) {
            if (ch != ' ' && ch != '\t' && ch != '\r') {
                blank = false;
                break;
            }
        }
        if (blank) continue;
        const std::size_t comma = view.find(',');
        if (comma == std::string_view::npos || view.find(',', comma + 1) != std::string_view::npos) {
            fail(line_ctx, "expected exactly one comma separating mean and std");
        }
        periods.push_back(PeriodForecast{parse_csv_field(view.substr(0, comma), line_ctx),
                                         parse_csv_field(view.substr(comma + 1), line_ctx)});
    }
    return periods;
}

std::vector<PeriodForecast> periods_at(const ordered_json& j, const std::string& ctx) {
    if (j.is_string()) return periods_from_csv(j.get<std::string>(), ctx);
    if (!j.is_array()) fail(ctx, "expected an array of {mean, std} or a CSV string");
    std::vector<PeriodForecast> periods;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string item_ctx = ctx + "[" + std::to_string(i) + "]";
        const ordered_json& item = j[i];
        if (!item.is_object()) fail(item_ctx, "expected an object");
        reject_unknown(item, item_ctx, {"mean", "std"});
        periods.push_back(PeriodForecast{number_at(member(item, item_ctx, "mean"), item_ctx + ".mean"),
                                         number_at(member(item, item_ctx, "std"), item_ctx + ".std")});
    }
    return periods;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw schema_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ordered_json cycles_to_json(const std::vector<Cycle>& cycles) {
    ordered_json arr = ordered_json::array();
    for (const Cycle& c : cycles) {
        arr.push_back(ordered_json{{"start", c.start}, {"end", c.end}});
    }
    return arr;
}

std::vector<Cycle> cycles_at(const ordered_json& j, const std::string& ctx) {
    if (!j.is_array()) fail(ctx, "expected an array");
    std::vector<Cycle> cycles;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string item_ctx = ctx + "[" + std::to_string(i) + "]";
        const ordered_json& item = j[i];
        if (!item.is_object()) fail(item_ctx, "expected an object");
        reject_unknown(item, item_ctx, {"start", "end"});
        Cycle c;
        c.start = static_cast<int>(integer_at(member(item, item_ctx, "start"), item_ctx + ".start"));
        c.end = static_cast<int>(integer_at(member(item, item_ctx, "end"), item_ctx + ".end"));
        cycles.push_back(c);
    }
    return cycles;
}

ordered_json plan_to_json(const CyclePlan& plan) {
    return ordered_json{{"cycles", cycles_to_json(plan.cycles)}, {"levels", plan.levels}};
}

CyclePlan plan_at(const ordered_json& j, const std::string& ctx) {
    if (!j.is_object()) fail(ctx, "expected an object");
    reject_unknown(j, ctx, {"cycles", "levels"});
    CyclePlan plan;
    plan.cycles = cycles_at(member(j, ctx, "cycles"), ctx + ".cycles");
    plan.levels = number_array_at(member(j, ctx, "levels"), ctx + ".levels");
    return plan;
}

ordered_json estimate_to_json(const Estimate& e) {
    return ordered_json{{"value", e.value}, {"half_width_95", e.half_width_95}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

Instance parse_instance(const std::string& text) {
    const std::string ctx = "instance";
    const ordered_json doc = parse_document(text, ctx);
    if (!doc.is_object()) fail(ctx, "expected a top-level object");
    reject_unknown(doc, ctx, {"periods", "ordering_cost", "holding_cost", "beta"});
    const std::vector<PeriodForecast> periods =
        periods_at(member(doc, ctx, "periods"), ctx + ".periods");
    CostParams costs;
    costs.ordering_cost = number_at(member(doc, ctx, "ordering_cost"), ctx + ".ordering_cost");
    costs.holding_cost = number_at(member(doc, ctx, "holding_cost"), ctx + ".holding_cost");
    const double beta = number_at(member(doc, ctx, "beta"), ctx + ".beta");
    try {
        check_cost_params(costs);
        return Instance{Horizon(periods), costs, ServiceTarget(beta)};
    } catch (const std::exception& e) {
        fail(ctx, e.what());
    }
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

std::string serialize_instance(const Instance& instance) {
    ordered_json periods = ordered_json::array();
    for (int t = 1; t <= instance.horizon.length(); ++t) {
        const PeriodForecast& f = instance.horizon.period(t);
        periods.push_back(ordered_json{{"mean", f.mean}, {"std", f.std}});
    }
    return dump(ordered_json{{"periods", periods},
                             {"ordering_cost", instance.costs.ordering_cost},
                             {"holding_cost", instance.costs.holding_cost},
                             {"beta", instance.target.beta}});
}

CyclePlan parse_plan(const std::string& text) {
    return plan_at(parse_document(text, "plan"), "plan");
}

CyclePlan load_plan(const std::string& path) { return parse_plan(read_file(path)); }

std::string serialize_plan(const CyclePlan& plan) { return dump(plan_to_json(plan)); }

PlanReport make_report(std::string mode, const Horizon& horizon, const CostParams& costs,
                       const CyclePlan& plan, std::int64_t partitions_examined,
                       double runtime_seconds) {
    PlanReport report;
    report.mode = std::move(mode);
    report.plan = plan;
    for (std::size_t i = 0; i < plan.cycles.size(); ++i) {
        report.buffers.push_back(plan.levels[i] - aggregate_cycle(horizon, plan.cycles[i]).mu);
    }
    report.evaluation = evaluate_plan(horizon, costs, plan);
    report.partitions_examined = partitions_examined;
    report.runtime_seconds = runtime_seconds;
    return report;
}

std::string serialize_report(const PlanReport& report) {
    const PlanEvaluation& ev = report.evaluation;
    ordered_json evaluation{{"expected_end_inventory", ev.expected_end_inventory},
                            {"per_cycle_backorders", ev.per_cycle_backorders},
                            {"per_cycle_fill_rate", ev.per_cycle_fill_rate},
                            {"horizon_fill_rate", ev.horizon_fill_rate},
                            {"holding_cost", ev.holding_cost},
                            {"ordering_cost", ev.ordering_cost},
                            {"total_cost", ev.total_cost},
                            {"feasible", ev.feasible}};
    ordered_json meta{{"partitions_examined", report.partitions_examined},
                      {"runtime_seconds", report.runtime_seconds}};
    return dump(ordered_json{{"mode", report.mode},
                             {"plan", plan_to_json(report.plan)},
                             {"buffers", report.buffers},
                             {"evaluation", evaluation},
                             {"meta", meta}});
}

PlanReport parse_report(const std::string& text) {
    const std::string ctx = "report";
    const ordered_json doc = parse_document(text, ctx);
    if (!doc.is_object()) fail(ctx, "expected a top-level object");
    reject_unknown(doc, ctx, {"mode", "plan", "buffers", "evaluation", "meta"});
    PlanReport report;
    const ordered_json& mode = member(doc, ctx, "mode");
    if (!mode.is_string()) fail(ctx + ".mode", "expected a string");
    report.mode = mode.get<std::string>();
    report.plan = plan_at(member(doc, ctx, "plan"), ctx + ".plan");
    report.buffers = number_array_at(member(doc, ctx, "buffers"), ctx + ".buffers");

    const std::string ev_ctx = ctx + ".evaluation";
    const ordered_json& ev = member(doc, ctx, "evaluation");
    if (!ev.is_object()) fail(ev_ctx, "expected an object");
    reject_unknown(ev, ev_ctx,
                   {"expected_end_inventory", "per_cycle_backorders", "per_cycle_fill_rate",
                    "horizon_fill_rate", "holding_cost", "ordering_cost", "total_cost",
                    "feasible"});
    PlanEvaluation& out = report.evaluation;
    out.expected_end_inventory = number_array_at(member(ev, ev_ctx, "expected_end_inventory"),
                                                 ev_ctx + ".expected_end_inventory");
    out.per_cycle_backorders =
        number_array_at(member(ev, ev_ctx, "per_cycle_backorders"), ev_ctx + ".per_cycle_backorders");
    out.per_cycle_fill_rate =
        number_array_at(member(ev, ev_ctx, "per_cycle_fill_rate"), ev_ctx + ".per_cycle_fill_rate");
    out.horizon_fill_rate =
        number_at(member(ev, ev_ctx, "horizon_fill_rate"), ev_ctx + ".horizon_fill_rate");
    out.holding_cost = number_at(member(ev, ev_ctx, "holding_cost"), ev_ctx + ".holding_cost");
    out.ordering_cost = number_at(member(ev, ev_ctx, "ordering_cost"), ev_ctx + ".ordering_cost");
    out.total_cost = number_at(member(ev, ev_ctx, "total_cost"), ev_ctx + ".total_cost");
    out.feasible = bool_at(member(ev, ev_ctx, "feasible"), ev_ctx + ".feasible");

    const std::string meta_ctx = ctx + ".meta";
    const ordered_json& meta = member(doc, ctx, "meta");
    if (!meta.is_object()) fail(meta_ctx, "expected an object");
    reject_unknown(meta, meta_ctx, {"partitions_examined", "runtime_seconds"});
    report.partitions_examined =
        integer_at(member(meta, meta_ctx, "partitions_examined"), meta_ctx + ".partitions_examined");
    report.runtime_seconds =
        number_at(member(meta, meta_ctx, "runtime_seconds"), meta_ctx + ".runtime_seconds");
    return report;
}

std::string serialize_simulation(const SimulationReport& report, double runtime_seconds) {
    ordered_json per_cycle = ordered_json::array();
    for (const Estimate& e : report.per_cycle_backorders_mean) {
        per_cycle.push_back(estimate_to_json(e));
    }
    ordered_json meta{{"runtime_seconds", runtime_seconds}};
    return dump(ordered_json{{"mode", "simulate"},
                             {"replications", report.replications},
                             {"seed", report.seed},
                             {"excluded_paths", report.excluded_paths},
                             {"fill_rate_ratio_of_means", estimate_to_json(report.fill_rate_ratio_of_means)},
                             {"fill_rate_mean_of_ratios", estimate_to_json(report.fill_rate_mean_of_ratios)},
                             {"per_cycle_backorders_mean", per_cycle},
                             {"holding_cost_mean", estimate_to_json(report.holding_cost_mean)},
                             {"net_holding_cost_mean", estimate_to_json(report.net_holding_cost_mean)},
                             {"ordering_cost", report.ordering_cost},
                             {"meta", meta}});
}

}  // namespace fillplan
