#pragma once

#include <cstdint>
#include <string>

#include "fillplan/plan.hpp"
#include "fillplan/service.hpp"
#include "fillplan/simulator.hpp"

namespace fillplan {

/// A complete problem statement: forecasts, costs and the fill-rate target.
struct Instance {
    Horizon horizon;
    CostParams costs;
    ServiceTarget target;

    bool operator==(const Instance&) const = default;
};

/// Parse an instance document. The periods block is either a list of
/// {mean, std} objects or one comma-separated "mean,std" line per period.
/// Throws schema_error naming the offending field or line.
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);
std::string serialize_instance(const Instance& instance);

/// Plan documents carry cycle boundaries plus one level per cycle.
CyclePlan parse_plan(const std::string& text);
CyclePlan load_plan(const std::string& path);
std::string serialize_plan(const CyclePlan& plan);

/// Everything a solver or evaluator run reports. Serialization round-trips
/// losslessly; runtime_seconds is the one field allowed to differ between
/// otherwise identical runs.
struct PlanReport {
    std::string mode;
    CyclePlan plan;
    std::vector<double> buffers;  // level minus cycle mean demand
    PlanEvaluation evaluation;
    std::int64_t partitions_examined = 0;
    double runtime_seconds = 0.0;

    bool operator==(const PlanReport&) const = default;
};

PlanReport make_report(std::string mode, const Horizon& horizon, const CostParams& costs,
                       const CyclePlan& plan, std::int64_t partitions_examined,
                       double runtime_seconds);

std::string serialize_report(const PlanReport& report);
PlanReport parse_report(const std::string& text);

std::string serialize_simulation(const SimulationReport& report, double runtime_seconds);

}  // namespace fillplan
