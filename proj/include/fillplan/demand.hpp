#pragma once

#include <vector>

namespace fillplan {

/// Normal demand parameters for one period.
struct PeriodForecast {
    double mean = 0.0;
    double std = 0.0;

    bool operator==(const PeriodForecast&) const = default;
};

/// The planning horizon: an ordered, nonempty sequence of period forecasts.
/// Period indices are 1-based everywhere, matching the reporting convention.
class Horizon {
public:
    explicit Horizon(std::vector<PeriodForecast> periods);

    int length() const { return static_cast<int>(periods_.size()); }
    const PeriodForecast& period(int t) const;  // 1-based, bounds-checked
    double total_mean() const;

    bool operator==(const Horizon&) const = default;

private:
    std::vector<PeriodForecast> periods_;
};

/// A replenishment cycle covering periods [start, end], inclusive, 1-based.
struct Cycle {
    int start = 0;
    int end = 0;

    int length() const { return end - start + 1; }
    bool operator==(const Cycle&) const = default;
};

/// Normal parameters of the total demand over a cycle.
struct CycleDemand {
    double mu = 0.0;
    double sigma = 0.0;
};

/// Sum of period demands over the cycle; variance adds across periods.
CycleDemand aggregate_cycle(const Horizon& horizon, const Cycle& cycle);

/// Sum of period means over [from, to], both 1-based inclusive.
double cumulative_mean(const Horizon& horizon, int from, int to);

}  // namespace fillplan
