#ifndef VLASIM_INJECTION_HPP
#define VLASIM_INJECTION_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "vlasim/core.hpp"

namespace vlasim {

struct SchedulePhase {
    Step start = 0;  // inclusive
    Step end = 0;    // exclusive
    double rate = 0.0;  // per (node, error type) injection probability per step

    bool operator==(const SchedulePhase&) const = default;
};

/// Piecewise-constant injection rate over the run. Phases are contiguous
/// half-open intervals starting at step 0; all error types share the rate.
class ErrorSchedule {
public:
    ErrorSchedule() = default;
    explicit ErrorSchedule(std::vector<SchedulePhase> phases) : phases_(std::move(phases)) {}

    /// Throws ConfigError unless phases are contiguous from 0, have
    /// positive length, rates within [0,1], and cover [0, total_steps).
    void validate(Step total_steps) const;

    double rate_at(Step step) const;
    int phase_index(Step step) const;  // -1 if uncovered

    const std::vector<SchedulePhase>& phases() const { return phases_; }
    bool operator==(const ErrorSchedule&) const = default;

private:
    std::vector<SchedulePhase> phases_;
};

/// Deterministic per-farmlet random stream. Identical (seed, stream) pairs
/// reproduce identical variate sequences; distinct farmlets use distinct
/// streams so they never share draws.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
        : gen_(mix(seed, stream)) {}

    /// Uniform variate in [0, 1) built from the top 53 bits of the
    /// generator output, so the mapping is platform-independent.
    double uniform01() {
        ++draws_;
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    std::uint64_t draw_count() const { return draws_; }

private:
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        // splitmix64 finalizer over (seed, stream) decorrelates farmlet streams
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::mt19937_64 gen_;
    std::uint64_t draws_ = 0;
};

/// One injection pass for `step`: draws one variate per (slot, error type)
/// pair in fixed order (slot ascending, error ascending) and activates
/// inactive pairs whose draw falls below the scheduled rate. Active pairs
/// still consume their draw, so the stream never desynchronizes from the
/// trajectory. Returns the newly activated pairs in draw order.
std::vector<std::pair<int, int>> inject(FarmletState& farmlet, const ErrorSchedule& schedule,
                                        Step step, RngStream& rng);

}  // namespace vlasim

#endif
