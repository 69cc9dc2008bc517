#include "fillplan/demand.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fillplan {

Horizon::Horizon(std::vector<PeriodForecast> periods) : periods_(std::move(periods)) {
    if (periods_.empty()) {
        throw std::invalid_argument("horizon: at least one period required");
    }
    for (std::size_t i = 0; i < periods_.size(); ++i) {
        const auto& p = periods_[i];
        if (!std::isfinite(p.mean) || !std::isfinite(p.std) || p.mean < 0.0 || p.std < 0.0) {
            throw std::invalid_argument("horizon: period " + std::to_string(i + 1) +
                                        " needs finite mean >= 0 and std >= 0");
        }
    }
}

const PeriodForecast& Horizon::period(int t) const {
    if (t < 1 || t > length()) {
        throw std::out_of_range("horizon: period index " + std::to_string(t) +
                                " outside 1.." + std::to_string(length()));
    }
    return periods_[static_cast<std::size_t>(t - 1)];
}

double Horizon::total_mean() const {
    double sum = 0.0;
    for (const auto& p : periods_) sum += p.mean;
    return sum;
}

namespace {

void check_range(const Horizon& horizon, int from, int to, const char* who) {
    if (from < 1 || to > horizon.length() || from > to) {
        throw std::out_of_range(std::string(who) + ": range [" + std::to_string(from) + ", " +
                                std::to_string(to) + "] outside horizon 1.." +
                                std::to_string(horizon.length()));
    }
}

}  // namespace

CycleDemand aggregate_cycle(const Horizon& horizon, const Cycle& cycle) {
    check_range(horizon, cycle.start, cycle.end, "aggregate_cycle");
    double mu = 0.0;
    double var = 0.0;
    for (int t = cycle.start; t <= cycle.end; ++t) {
        const auto& p = horizon.period(t);
        mu += p.mean;
        var += p.std * p.std;
    }
    return {mu, std::sqrt(var)};
}

double cumulative_mean(const Horizon& horizon, int from, int to) {
    check_range(horizon, from, to, "cumulative_mean");
    double sum = 0.0;
    for (int t = from; t <= to; ++t) sum += horizon.period(t).mean;
    return sum;
}

}  // namespace fillplan
