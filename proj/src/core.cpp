#include "vlasim/core.hpp"

#include <algorithm>

namespace vlasim {

Units enqueue_crossings(CrossingBuffer& buffer, Units amount) {
    assert(amount >= 0);
    buffer.enqueued_total += amount;
    const Units room = buffer.capacity - buffer.fill;
    const Units accepted = std::min(amount, room);
    const Units dropped = amount - accepted;
    buffer.fill += accepted;
    buffer.dropped_total += dropped;
    return dropped;
}

Units dequeue_processed(CrossingBuffer& buffer, Units amount) {
    assert(amount >= 0);
    const Units processed = std::min(buffer.fill, amount);
    buffer.fill -= processed;
    return processed;
}

ErrorStateSet::ErrorStateSet(int n_slots, int n_errors)
    : n_slots_(n_slots),
      n_errors_(n_errors),
      onset_(static_cast<std::size_t>(n_slots) * n_errors, Step{-1}) {}

bool ErrorStateSet::activate(int slot, int error, Step onset) {
    Step& cell = onset_[idx(slot, error)];
    if (cell >= 0) return false;  // already active, keep original onset
    cell = onset;
    return true;
}

bool ErrorStateSet::clear(int slot, int error) {
    Step& cell = onset_[idx(slot, error)];
    if (cell < 0) return false;
    cell = -1;
    return true;
}

double effective_rate(const DspNode& node, const ErrorStateSet& errors,
                      const std::vector<double>& slowdowns) {
    double rate = static_cast<double>(node.base_rate);
    for (int e = 0; e < errors.error_types(); ++e) {
        if (errors.active(node.id.slot, e)) rate *= slowdowns[static_cast<std::size_t>(e)];
    }
    return rate;
}

FarmletState::FarmletState(int index_, int n_slots, int n_errors, Units capacity, Units base_rate)
    : index(index_), errors(n_slots, n_errors) {
    nodes.reserve(static_cast<std::size_t>(n_slots));
    for (int slot = 0; slot < n_slots; ++slot) {
        DspNode node;
        node.id = DspId{index_, slot};
        node.buffer.capacity = capacity;
        node.base_rate = base_rate;
        nodes.push_back(node);
    }
}

}  // namespace vlasim
