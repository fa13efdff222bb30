#include "vlasim/metrics.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string>

namespace vlasim {

namespace {

void append_int(std::string& out, std::int64_t v) { out += std::to_string(v); }

void append_double(std::string& out, double v, int precision = 9) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision);
    out.append(buf, res.ptr);
}

const char* kind_name(EventKind kind) {
    switch (kind) {
        case EventKind::Inject: return "inject";
        case EventKind::CheckHit: return "check_hit";
        case EventKind::CheckMiss: return "check_miss";
        case EventKind::OverflowDrop: return "overflow_drop";
    }
    return "?";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

void MetricsLog::sample(const FarmletState& state, const std::vector<SensitivityMatrix>& agents,
                        const std::vector<Units>& step_processed, const std::vector<bool>& step_vla,
                        Step step, Step sample_every) {
    assert(sample_every >= 1);
    if (step % sample_every != 0) return;
    for (const SensitivityMatrix& m : agents) {
        for (int t = 0; t < m.slots(); ++t) {
            if (t == m.observer()) continue;
            for (int e = 0; e < m.error_types(); ++e) {
                d_series.push_back(DValueRow{step, state.index, m.observer(), t, e, m.d(t, e), m.f(t, e)});
            }
        }
    }
    for (std::size_t slot = 0; slot < state.nodes.size(); ++slot) {
        const DspNode& node = state.nodes[slot];
        throughput_series.push_back(ThroughputRow{step, state.index, node.id.slot,
                                                  step_processed[slot], node.buffer.fill,
                                                  node.buffer.dropped_total, step_vla[slot]});
    }
}

Summary summarize(MetricsLog& log, const std::vector<FarmletState>& farmlets,
                  const ErrorSchedule& schedule) {
    Summary s;
    int node_count = 0;
    for (const FarmletState& farmlet : farmlets) {
        for (const DspNode& node : farmlet.nodes) {
            NodeTotals t;
            t.farmlet = farmlet.index;
            t.slot = node.id.slot;
            t.enqueued = node.buffer.enqueued_total;
            t.processed = node.crossings_processed_total;
            t.dropped = node.buffer.dropped_total;
            t.final_fill = node.buffer.fill;
            if (t.enqueued != t.processed + t.final_fill + t.dropped)
                throw std::logic_error("conservation violated at farmlet " +
                                       std::to_string(t.farmlet) + " slot " + std::to_string(t.slot));
            s.total_enqueued += t.enqueued;
            s.total_processed += t.processed;
            s.total_dropped += t.dropped;
            s.nodes.push_back(t);
            ++node_count;
        }
    }
    s.mean_processed_per_dsp =
        node_count > 0 ? static_cast<double>(s.total_processed) / node_count : 0.0;

    for (const EventRow& ev : log.event_log) {
        switch (ev.kind) {
            case EventKind::Inject: ++s.injects; break;
            case EventKind::CheckHit: ++s.check_hits; break;
            case EventKind::CheckMiss: ++s.check_misses; break;
            case EventKind::OverflowDrop: ++s.overflow_events; break;
        }
    }

    // per-phase mean of each sampled d trajectory
    if (!schedule.phases().empty() && !log.d_series.empty()) {
        struct Acc {
            double sum = 0.0;
            std::int64_t count = 0;
        };
        const int n_phases = static_cast<int>(schedule.phases().size());
        const int n_farmlets = static_cast<int>(farmlets.size());
        const int n_slots = farmlets.empty() ? 0 : static_cast<int>(farmlets[0].nodes.size());
        const int n_errors = farmlets.empty() ? 0 : farmlets[0].errors.error_types();
        const auto key = [&](int phase, int farmlet, int obs, int target, int error) {
            return (((static_cast<std::size_t>(phase) * n_farmlets + farmlet) * n_slots + obs) *
                        n_slots + target) * n_errors + error;
        };
        std::vector<Acc> acc(static_cast<std::size_t>(n_phases) * n_farmlets * n_slots * n_slots *
                             n_errors);
        for (const DValueRow& row : log.d_series) {
            const int phase = schedule.phase_index(row.step);
            if (phase < 0) continue;
            Acc& a = acc[key(phase, row.farmlet, row.observer, row.target, row.error)];
            a.sum += row.d;
            ++a.count;
        }
        for (int p = 0; p < n_phases; ++p)
            for (int fl = 0; fl < n_farmlets; ++fl)
                for (int o = 0; o < n_slots; ++o)
                    for (int t = 0; t < n_slots; ++t)
                        for (int e = 0; e < n_errors; ++e) {
                            const Acc& a = acc[key(p, fl, o, t, e)];
                            if (a.count == 0) continue;
                            s.phase_d_means.push_back(
                                PhaseDMean{p, fl, o, t, e, a.sum / static_cast<double>(a.count)});
                        }
    }

    log.summary = s;
    return s;
}

void write_csv(const MetricsLog& log, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create directory " + out_dir.string() + ": " + ec.message());

    std::string out;
    out.reserve(1 << 20);

    out = "step,farmlet,observer,target,error,d,F\n";
    for (const DValueRow& r : log.d_series) {
        append_int(out, r.step);
        out += ',';
        append_int(out, r.farmlet);
        out += ',';
        append_int(out, r.observer);
        out += ',';
        append_int(out, r.target);
        out += ',';
        append_int(out, r.error);
        out += ',';
        append_double(out, r.d);
        out += ',';
        append_int(out, r.f);
        out += '\n';
    }
    write_file(out_dir / "d_values.csv", out);

    out = "step,farmlet,slot,processed,fill,dropped,decision\n";
    for (const ThroughputRow& r : log.throughput_series) {
        append_int(out, r.step);
        out += ',';
        append_int(out, r.farmlet);
        out += ',';
        append_int(out, r.slot);
        out += ',';
        append_int(out, r.processed);
        out += ',';
        append_int(out, r.fill);
        out += ',';
        append_int(out, r.dropped);
        out += ',';
        out += r.vla ? "VLA" : "PA";
        out += '\n';
    }
    write_file(out_dir / "throughput.csv", out);

    out = "step,farmlet,slot,kind,error\n";
    for (const EventRow& r : log.event_log) {
        append_int(out, r.step);
        out += ',';
        append_int(out, r.farmlet);
        out += ',';
        append_int(out, r.slot);
        out += ',';
        out += kind_name(r.kind);
        out += ',';
        append_int(out, r.error);
        out += '\n';
    }
    write_file(out_dir / "events.csv", out);

    const Summary& s = log.summary;
    out = "metric,scope,value\n";
    const auto run_row_d = [&](const char* metric, double v) {
        out += metric;
        out += ",run,";
        append_double(out, v);
        out += '\n';
    };
    const auto run_row_i = [&](const char* metric, std::int64_t v) {
        out += metric;
        out += ",run,";
        append_int(out, v);
        out += '\n';
    };
    run_row_d("mean_processed_per_dsp", s.mean_processed_per_dsp);
    run_row_i("total_processed", s.total_processed);
    run_row_i("total_enqueued", s.total_enqueued);
    run_row_i("total_dropped", s.total_dropped);
    run_row_i("check_hits", s.check_hits);
    run_row_i("check_misses", s.check_misses);
    run_row_i("injects", s.injects);
    run_row_i("overflow_events", s.overflow_events);
    for (const NodeTotals& t : s.nodes) {
        const std::string scope =
            "farmlet" + std::to_string(t.farmlet) + ".slot" + std::to_string(t.slot);
        const auto node_row = [&](const char* metric, Units v) {
            out += metric;
            out += ',';
            out += scope;
            out += ',';
            append_int(out, v);
            out += '\n';
        };
        node_row("enqueued", t.enqueued);
        node_row("processed", t.processed);
        node_row("dropped", t.dropped);
        node_row("final_fill", t.final_fill);
    }
    for (const PhaseDMean& m : s.phase_d_means) {
        out += "mean_d,phase";
        out += std::to_string(m.phase);
        out += ".farmlet";
        out += std::to_string(m.farmlet);
        out += ".observer";
        out += std::to_string(m.observer);
        out += ".target";
        out += std::to_string(m.target);
        out += ".error";
        out += std::to_string(m.error);
        out += ',';
        append_double(out, m.mean_d);
        out += '\n';
    }
    write_file(out_dir / "summary.csv", out);
}

}  // namespace vlasim
