#include "vlasim/agent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vlasim {

double adjusted_sigmoid(double d, double f) {
    assert(d > 0.0 && f >= 0.0);
    return 2.0 * (1.0 / (1.0 + std::exp(-d * f)) - 0.5);
}

double utility_value(double expected_data, double watermark, double c, double f) {
    constexpr double kEps = 1e-9;
    return expected_data / std::max(watermark, kEps) + c / std::max(f, kEps);
}

double update_sensitivity(double d, bool found, const AgentParams& params) {
    if (!params.adaptive) return d;
    if (found) return std::min(d + params.delta_up, params.d_max);
    return std::max(d - params.delta_down, params.d_min);
}

SensitivityMatrix::SensitivityMatrix(int observer, int n_slots, int n_errors, double d_init)
    : observer_(observer),
      n_slots_(n_slots),
      n_errors_(n_errors),
      d_(static_cast<std::size_t>(n_slots) * n_errors, d_init),
      f_(static_cast<std::size_t>(n_slots) * n_errors, Step{0}) {
    assert(observer >= 0 && observer < n_slots);
}

std::size_t SensitivityMatrix::idx(int target, int error) const {
    if (target == observer_) throw std::invalid_argument("self-check is not modeled: observer " + std::to_string(observer_) + " cannot target itself");
    assert(target >= 0 && target < n_slots_ && error >= 0 && error < n_errors_);
    return static_cast<std::size_t>(target) * n_errors_ + error;
}

void SensitivityMatrix::tick() {
    for (int t = 0; t < n_slots_; ++t) {
        if (t == observer_) continue;
        for (int e = 0; e < n_errors_; ++e) ++f_[static_cast<std::size_t>(t) * n_errors_ + e];
    }
}

void SensitivityMatrix::record_check(int target, int error, bool found, const AgentParams& params) {
    const std::size_t i = idx(target, error);
    f_[i] = 0;
    d_[i] = update_sensitivity(d_[i], found, params);
}

void SensitivityMatrix::set_entry(int target, int error, double d, Step f) {
    const std::size_t i = idx(target, error);
    d_[i] = d;
    f_[i] = f;
}

std::optional<CheckTarget> best_check_target(const SensitivityMatrix& matrix) {
    std::optional<CheckTarget> best;
    for (int t = 0; t < matrix.slots(); ++t) {
        if (t == matrix.observer()) continue;
        for (int e = 0; e < matrix.error_types(); ++e) {
            const double s = adjusted_sigmoid(matrix.d(t, e), static_cast<double>(matrix.f(t, e)));
            // strict > keeps the first pair in (target, error) order on ties
            if (!best || s > best->score) best = CheckTarget{t, e, s};
        }
    }
    return best;
}

ControlDecision decide_control(double watermark, const SensitivityMatrix& matrix) {
    const auto best = best_check_target(matrix);
    if (!best || watermark >= best->score) return ControlDecision{};  // PA, tie included
    return ControlDecision{ControlDecision::Kind::VlaCheck, best->target, best->error, best->score};
}

}  // namespace vlasim
