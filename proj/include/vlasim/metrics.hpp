#ifndef VLASIM_METRICS_HPP
#define VLASIM_METRICS_HPP

#include <filesystem>
#include <vector>

#include "vlasim/agent.hpp"
#include "vlasim/core.hpp"
#include "vlasim/injection.hpp"

namespace vlasim {

struct DValueRow {
    Step step = 0;
    int farmlet = 0;
    int observer = 0;
    int target = 0;
    int error = 0;
    double d = 0.0;
    Step f = 0;

    bool operator==(const DValueRow&) const = default;
};

struct ThroughputRow {
    Step step = 0;
    int farmlet = 0;
    int slot = 0;
    Units processed = 0;      // units processed this step (0 on VLA steps)
    Units fill = 0;           // buffer fill after the step
    Units dropped = 0;        // cumulative drops so far
    bool vla = false;         // decision this step: true = VLA, false = PA

    bool operator==(const ThroughputRow&) const = default;
};

enum class EventKind { Inject, CheckHit, CheckMiss, OverflowDrop };

struct EventRow {
    Step step = 0;
    int farmlet = 0;
    int slot = 0;  // target node for injections and checks
    EventKind kind = EventKind::Inject;
    int error = -1;  // -1 for overflow_drop

    bool operator==(const EventRow&) const = default;
};

struct NodeTotals {
    int farmlet = 0;
    int slot = 0;
    Units enqueued = 0;
    Units processed = 0;
    Units dropped = 0;
    Units final_fill = 0;
};

struct PhaseDMean {
    int phase = 0;
    int farmlet = 0;
    int observer = 0;
    int target = 0;
    int error = 0;
    double mean_d = 0.0;
};

struct Summary {
    std::vector<NodeTotals> nodes;
    Units total_enqueued = 0;
    Units total_processed = 0;
    Units total_dropped = 0;
    double mean_processed_per_dsp = 0.0;
    std::int64_t check_hits = 0;
    std::int64_t check_misses = 0;
    std::int64_t injects = 0;
    std::int64_t overflow_events = 0;
    std::vector<PhaseDMean> phase_d_means;
};

/// Append-only run record. Sampled series plus the full event log; rows are
/// ordered by (farmlet, step, emission order within the step).
class MetricsLog {
public:
    std::vector<DValueRow> d_series;
    std::vector<ThroughputRow> throughput_series;
    std::vector<EventRow> event_log;
    Summary summary;

    void add_event(EventRow row) { event_log.push_back(row); }

    /// Emits one throughput row per node and one d row per matrix entry
    /// when step is a sampling step (step mod sample_every == 0). Events
    /// are appended as they happen and are never down-sampled.
    void sample(const FarmletState& state, const std::vector<SensitivityMatrix>& agents,
                const std::vector<Units>& step_processed, const std::vector<bool>& step_vla,
                Step step, Step sample_every);
};

/// Folds the completed log and the final farmlet states into the summary:
/// per-node totals, run aggregates, per-phase d means, and check counts.
/// Cross-checks exact per-node conservation
/// (enqueued == processed + fill + dropped) and throws std::logic_error on
/// violation.
Summary summarize(MetricsLog& log, const std::vector<FarmletState>& farmlets,
                  const ErrorSchedule& schedule);

/// Writes d_values.csv, throughput.csv, events.csv and summary.csv into
/// out_dir (created if missing). Output is byte-deterministic: fixed
/// headers, '\n' line ends, C-locale numbers, d with 9 significant digits.
void write_csv(const MetricsLog& log, const std::filesystem::path& out_dir);

}  // namespace vlasim

#endif
