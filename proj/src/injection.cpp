#include "vlasim/injection.hpp"

#include <stdexcept>
#include <string>

#include "vlasim/errors.hpp"

namespace vlasim {

void ErrorSchedule::validate(Step total_steps) const {
    if (total_steps > 0 && phases_.empty())
        throw ConfigError("schedule: at least one phase is required to cover [0, " +
                          std::to_string(total_steps) + ")");
    Step expected_start = 0;
    for (std::size_t i = 0; i < phases_.size(); ++i) {
        const SchedulePhase& p = phases_[i];
        const std::string key = "schedule." + std::to_string(i);
        if (p.start != expected_start)
            throw ConfigError(key + ".start = " + std::to_string(p.start) +
                              " breaks contiguity (expected " + std::to_string(expected_start) + ")");
        if (p.end <= p.start)
            throw ConfigError(key + ".end = " + std::to_string(p.end) +
                              " must be greater than start " + std::to_string(p.start));
        if (!(p.rate >= 0.0 && p.rate <= 1.0))
            throw ConfigError(key + ".rate = " + std::to_string(p.rate) + " is outside [0, 1]");
        expected_start = p.end;
    }
    if (total_steps > 0 && phases_.back().end < total_steps)
        throw ConfigError("schedule: phases end at " + std::to_string(phases_.back().end) +
                          " but must cover [0, " + std::to_string(total_steps) + ")");
}

int ErrorSchedule::phase_index(Step step) const {
    for (std::size_t i = 0; i < phases_.size(); ++i) {
        if (step >= phases_[i].start && step < phases_[i].end) return static_cast<int>(i);
    }
    return -1;
}

double ErrorSchedule::rate_at(Step step) const {
    const int i = phase_index(step);
    if (i < 0)
        throw std::out_of_range("step " + std::to_string(step) + " is outside the schedule coverage");
    return phases_[static_cast<std::size_t>(i)].rate;
}

std::vector<std::pair<int, int>> inject(FarmletState& farmlet, const ErrorSchedule& schedule,
                                        Step step, RngStream& rng) {
    const double rate = schedule.rate_at(step);
    std::vector<std::pair<int, int>> activated;
    for (int slot = 0; slot < farmlet.errors.slots(); ++slot) {
        for (int e = 0; e < farmlet.errors.error_types(); ++e) {
            const double u = rng.uniform01();  // always drawn, even for active pairs
            if (u < rate && farmlet.errors.activate(slot, e, step)) activated.emplace_back(slot, e);
        }
    }
    return activated;
}

}  // namespace vlasim
