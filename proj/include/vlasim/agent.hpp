#ifndef VLASIM_AGENT_HPP
#define VLASIM_AGENT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "vlasim/core.hpp"

namespace vlasim {

/// Constants governing one VLA's sensitivity adaptation and utility weights.
struct AgentParams {
    double d_init = 0.01;
    double d_min = 0.0001;
    double d_max = 1.0;
    double delta_up = 0.005;     // additive d increase when a check finds an error
    double delta_down = 0.0005;  // additive d decrease when a check comes up clean
    bool adaptive = true;        // false = fixed monitoring rate baseline
    double c = 1.0;              // utility weight on check recency
    double expected_data = 5.0;  // D term of the diagnostic utility value

    bool operator==(const AgentParams&) const = default;
};

/// Maps elapsed steps F onto (0,1) urgency with steepness d:
/// 2 * (1 / (1 + e^(-d*F)) - 0.5). Zero at F = 0, approaches 1 as F grows.
double adjusted_sigmoid(double d, double f);

/// Diagnostic reward score D/w + c/F with both denominators guarded by
/// 1e-9. Control decisions use decide_control, not this value.
double utility_value(double expected_data, double watermark, double c, double f);

/// One additive adaptation step, clamped to [d_min, d_max]. Identity when
/// params.adaptive is false.
double update_sensitivity(double d, bool found, const AgentParams& params);

/// One observer's stigmergic memory: per (target slot, error type) a
/// sensitivity d and a counter F of steps since this observer last checked
/// that pair. The observer's own slot has no entries.
class SensitivityMatrix {
public:
    SensitivityMatrix() = default;
    SensitivityMatrix(int observer, int n_slots, int n_errors, double d_init);

    int observer() const { return observer_; }
    int slots() const { return n_slots_; }
    int error_types() const { return n_errors_; }

    double d(int target, int error) const { return d_[idx(target, error)]; }
    Step f(int target, int error) const { return f_[idx(target, error)]; }

    /// Increments every F entry by one.
    void tick();

    /// Applies the outcome of a check: resets F[target,error] and adapts
    /// d[target,error]; every other entry is untouched.
    /// Throws std::invalid_argument for target == observer.
    void record_check(int target, int error, bool found, const AgentParams& params);

    /// Direct entry write, for scenario construction.
    void set_entry(int target, int error, double d, Step f);

private:
    std::size_t idx(int target, int error) const;

    int observer_ = 0;
    int n_slots_ = 0;
    int n_errors_ = 0;
    std::vector<double> d_;
    std::vector<Step> f_;  // entries at target == observer stay unused
};

struct ControlDecision {
    enum class Kind { Pa, VlaCheck };
    Kind kind = Kind::Pa;
    int target = -1;
    int error = -1;
    double score = 0.0;  // winning adjusted sigmoid value for VlaCheck

    bool operator==(const ControlDecision&) const = default;
};

struct CheckTarget {
    int target = 0;
    int error = 0;
    double score = 0.0;
};

/// Most urgent (target, error) pair of the matrix: the entry with maximal
/// adjusted sigmoid, ties broken toward lowest target slot then lowest
/// error id. Empty matrices (single-node farmlets) yield nullopt.
std::optional<CheckTarget> best_check_target(const SensitivityMatrix& matrix);

/// Control-transfer rule: the physics application keeps the step when the
/// buffer watermark w is at least the best adjusted sigmoid value
/// (ties included), otherwise the VLA checks the winning pair.
ControlDecision decide_control(double watermark, const SensitivityMatrix& matrix);

}  // namespace vlasim

#endif
