#ifndef VLASIM_CORE_HPP
#define VLASIM_CORE_HPP

#include <cassert>
#include <cstdint>
#include <vector>

namespace vlasim {

/// Crossing-data amounts are integer units so conservation checks are exact.
using Units = std::int64_t;
/// Discrete simulation time.
using Step = std::int64_t;

struct DspId {
    int farmlet = 0;
    int slot = 0;
    bool operator==(const DspId&) const = default;
};

/// Bounded FIFO-less buffer model: only fill level matters, arrivals that
/// exceed capacity are dropped and counted.
struct CrossingBuffer {
    Units capacity = 0;
    Units fill = 0;
    Units dropped_total = 0;
    Units enqueued_total = 0;

    double watermark() const {
        return capacity > 0 ? static_cast<double>(fill) / static_cast<double>(capacity) : 0.0;
    }
};

/// Adds `amount` units, saturating at capacity. Overflow goes to
/// dropped_total. Returns the amount dropped by this call.
Units enqueue_crossings(CrossingBuffer& buffer, Units amount);

/// Removes up to `amount` units and returns how many were actually taken.
Units dequeue_processed(CrossingBuffer& buffer, Units amount);

/// Per-(slot, error-type) active-error flags for one farmlet. At most one
/// active instance per pair; re-injecting an active pair is a no-op.
class ErrorStateSet {
public:
    ErrorStateSet() = default;
    ErrorStateSet(int n_slots, int n_errors);

    bool active(int slot, int error) const { return onset_[idx(slot, error)] >= 0; }
    Step onset_step(int slot, int error) const { return onset_[idx(slot, error)]; }

    /// Returns true if the pair was inactive and is now active.
    bool activate(int slot, int error, Step onset);
    /// Returns true if the pair was active (and is now cleared).
    bool clear(int slot, int error);

    int slots() const { return n_slots_; }
    int error_types() const { return n_errors_; }

private:
    std::size_t idx(int slot, int error) const {
        assert(slot >= 0 && slot < n_slots_ && error >= 0 && error < n_errors_);
        return static_cast<std::size_t>(slot) * n_errors_ + error;
    }

    int n_slots_ = 0;
    int n_errors_ = 0;
    std::vector<Step> onset_;  // -1 = inactive
};

struct DspNode {
    DspId id;
    CrossingBuffer buffer;
    Units base_rate = 0;  // units processed per healthy step
    Units crossings_processed_total = 0;
};

/// Processing rate of `node` with its currently active errors applied, as
/// base_rate times the product of the slowdown factors of every active
/// error type. The caller floors the result to whole units per step.
double effective_rate(const DspNode& node, const ErrorStateSet& errors,
                      const std::vector<double>& slowdowns);

/// World state of one farmlet: N worker DSPs plus their error flags.
struct FarmletState {
    int index = 0;
    std::vector<DspNode> nodes;
    ErrorStateSet errors;
    Step clock = 0;

    FarmletState() = default;
    FarmletState(int index, int n_slots, int n_errors, Units capacity, Units base_rate);
};

}  // namespace vlasim

#endif
