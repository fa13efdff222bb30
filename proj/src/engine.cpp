#include "vlasim/engine.hpp"

#include <cmath>

namespace vlasim {

FarmletRuntime::FarmletRuntime(const SimConfig& config, int farmlet_index)
    : state(farmlet_index, config.nodes_per_farmlet, config.error_types, config.capacity,
            config.base_rate),
      rng(config.seed, static_cast<std::uint64_t>(farmlet_index)) {
    agents.reserve(config.nodes_per_farmlet);
    for (int slot = 0; slot < config.nodes_per_farmlet; ++slot) {
        agents.emplace_back(slot, config.nodes_per_farmlet, config.error_types,
                            config.agent.d_init);
    }
    held.assign(config.nodes_per_farmlet, ControlDecision::Kind::Pa);
    busy.assign(config.nodes_per_farmlet, 0);
}

void step(FarmletRuntime& rt, const SimConfig& config, MetricsLog& log) {
    FarmletState& state = rt.state;
    const Step now = state.clock;
    const int n = static_cast<int>(state.nodes.size());
    const int farmlet = state.index;

    // (1) scheduled error injection
    for (auto [slot, error] : inject(state, config.schedule, now, rt.rng)) {
        log.add_event({now, farmlet, slot, EventKind::Inject, error});
    }

    // (2) arrivals
    for (DspNode& node : state.nodes) {
        if (enqueue_crossings(node.buffer, config.arrival_rate) > 0) {
            log.add_event({now, farmlet, node.id.slot, EventKind::OverflowDrop, -1});
        }
    }

    // (3) decisions, all against pre-check matrices and post-arrival fills
    std::vector<ControlDecision> decisions(static_cast<std::size_t>(n));
    for (int slot = 0; slot < n; ++slot) {
        if (rt.busy[slot] > 0) {
            decisions[slot] = {ControlDecision::Kind::VlaCheck, -1, -1, 0.0};
            continue;
        }
        const double w = state.nodes[slot].buffer.watermark();
        if (now % config.decision_interval == 0) {
            decisions[slot] = decide_control(w, rt.agents[slot]);
            rt.held[slot] = decisions[slot].kind;
        } else if (rt.held[slot] == ControlDecision::Kind::VlaCheck) {
            // a maintained VLA re-targets the currently most urgent pair
            if (auto best = best_check_target(rt.agents[slot])) {
                decisions[slot] = {ControlDecision::Kind::VlaCheck, best->target, best->error,
                                   best->score};
            } else {
                decisions[slot] = {ControlDecision::Kind::Pa, -1, -1, 0.0};
            }
        } else {
            decisions[slot] = {ControlDecision::Kind::Pa, -1, -1, 0.0};
        }
    }

    // (4) execution, slot order; clears are visible to later checkers
    std::vector<Units> step_processed(static_cast<std::size_t>(n), 0);
    std::vector<bool> step_vla(static_cast<std::size_t>(n), false);
    for (int slot = 0; slot < n; ++slot) {
        if (rt.busy[slot] > 0) {
            --rt.busy[slot];
            step_vla[slot] = true;
            continue;
        }
        const ControlDecision& decision = decisions[slot];
        if (decision.kind == ControlDecision::Kind::Pa) {
            DspNode& node = state.nodes[slot];
            const Units rate = static_cast<Units>(
                std::floor(effective_rate(node, state.errors, config.slowdown)));
            const Units processed = dequeue_processed(node.buffer, rate);
            node.crossings_processed_total += processed;
            step_processed[slot] = processed;
        } else {
            const bool found = state.errors.active(decision.target, decision.error);
            if (found) state.errors.clear(decision.target, decision.error);
            rt.agents[slot].record_check(decision.target, decision.error, found, config.agent);
            log.add_event({now, farmlet, decision.target,
                           found ? EventKind::CheckHit : EventKind::CheckMiss, decision.error});
            rt.busy[slot] = config.check_cost_steps - 1;
            step_vla[slot] = true;
        }
    }

    // (5) recency counters
    for (SensitivityMatrix& agent : rt.agents) agent.tick();

    // (6) metrics and clock
    log.sample(state, rt.agents, step_processed, step_vla, now, config.sample_every);
    state.clock = now + 1;
}

MetricsLog run(const SimConfig& config) {
    config.validate();
    MetricsLog log;
    std::vector<FarmletState> finals;
    finals.reserve(config.farmlets);
    for (int farmlet = 0; farmlet < config.farmlets; ++farmlet) {
        FarmletRuntime rt(config, farmlet);
        for (Step t = 0; t < config.total_steps; ++t) step(rt, config, log);
        finals.push_back(std::move(rt.state));
    }
    summarize(log, finals, config.schedule);
    return log;
}

}  // namespace vlasim
