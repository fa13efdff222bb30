#ifndef VLASIM_ENGINE_HPP
#define VLASIM_ENGINE_HPP

#include <vector>

#include "vlasim/agent.hpp"
#include "vlasim/config.hpp"
#include "vlasim/core.hpp"
#include "vlasim/injection.hpp"
#include "vlasim/metrics.hpp"

namespace vlasim {

/// Everything one farmlet needs to advance: world state, one sensitivity
/// matrix per slot, per-slot decision carry-over, and its own RNG stream.
struct FarmletRuntime {
    FarmletState state;
    std::vector<SensitivityMatrix> agents;
    std::vector<ControlDecision::Kind> held;  // kind decided at the last decision step
    std::vector<int> busy;                    // residual busy steps after a check
    RngStream rng;

    FarmletRuntime(const SimConfig& config, int farmlet_index);
};

/// Advances one farmlet by one step. Phase order is fixed:
///   (1) inject scheduled errors,
///   (2) enqueue arrivals into every buffer,
///   (3) compute every node's control decision against the pre-check
///       matrices and the post-arrival watermarks,
///   (4) execute decisions in ascending slot order; error clearing is
///       visible immediately, so a later checker of the same pair misses,
///   (5) tick every F counter,
///   (6) emit metrics rows and advance the clock.
/// A checking node processes zero crossings on its check step.
void step(FarmletRuntime& rt, const SimConfig& config, MetricsLog& log);

/// Validates config, runs every farmlet for total_steps, and returns the
/// completed log with the summary filled in. Farmlets are advanced
/// farmlet-major so log rows come out ordered by (farmlet, step).
MetricsLog run(const SimConfig& config);

}  // namespace vlasim

#endif
