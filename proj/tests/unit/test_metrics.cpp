#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "vlasim/engine.hpp"
#include "vlasim/metrics.hpp"

using namespace vlasim;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

std::filesystem::path fresh_dir(const char* name) {
    const auto dir = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(dir);
    return dir;
}

SimConfig tiny_config() {
    SimConfig c;
    c.nodes_per_farmlet = 3;
    c.error_types = 1;
    c.slowdown = {0.5};
    c.total_steps = 1000;
    c.schedule = ErrorSchedule({{0, 1000000, 0.0}});
    c.sample_every = 100;
    return c;
}

}  // namespace

TEST_CASE("sampling cadence: rows only on sampling steps, events always") {
    SimConfig c = tiny_config();
    c.schedule = ErrorSchedule({{0, 1, 1.0}, {1, 1000000, 0.0}});  // burst at step 0 only
    const MetricsLog log = run(c);

    // 10 sampled steps (0, 100, ..., 900), 3 observers x 2 targets x 1 error
    CHECK(log.d_series.size() == 10 * 6);
    CHECK(log.throughput_series.size() == 10 * 3);
    for (const DValueRow& r : log.d_series) CHECK(r.step % 100 == 0);

    // the step-0 injections must be followed by checks at unsampled steps
    CHECK(log.summary.injects == 3);
    bool unsampled_event = false;
    for (const EventRow& r : log.event_log)
        if (r.step % 100 != 0) unsampled_event = true;
    CHECK(unsampled_event);
    CHECK(log.summary.check_hits > 0);
}

TEST_CASE("summarize cross-checks conservation and throws on corruption") {
    std::vector<FarmletState> farmlets;
    FarmletState f(0, 2, 1, 100, 5);
    enqueue_crossings(f.nodes[0].buffer, 10);
    f.nodes[0].crossings_processed_total = dequeue_processed(f.nodes[0].buffer, 4);
    farmlets.push_back(f);

    MetricsLog log;
    CHECK_NOTHROW(summarize(log, farmlets, ErrorSchedule({{0, 10, 0.0}})));
    CHECK(log.summary.total_enqueued == 10);
    CHECK(log.summary.total_processed == 4);
    CHECK(log.summary.nodes[0].final_fill == 6);

    farmlets[0].nodes[0].crossings_processed_total += 1;  // break the books
    CHECK_THROWS_AS(summarize(log, farmlets, ErrorSchedule({{0, 10, 0.0}})), std::logic_error);
}

TEST_CASE("csv headers are pinned and an empty log writes headers only") {
    const auto dir = fresh_dir("vlasim-metrics-empty");
    MetricsLog log;
    write_csv(log, dir);
    CHECK(slurp(dir / "d_values.csv") == "step,farmlet,observer,target,error,d,F\n");
    CHECK(slurp(dir / "throughput.csv") == "step,farmlet,slot,processed,fill,dropped,decision\n");
    CHECK(slurp(dir / "events.csv") == "step,farmlet,slot,kind,error\n");
    CHECK(first_line(slurp(dir / "summary.csv")) == "metric,scope,value");
    std::filesystem::remove_all(dir);
}

TEST_CASE("csv rows use locale-free 9-significant-digit formatting") {
    const auto dir = fresh_dir("vlasim-metrics-fmt");
    MetricsLog log;
    log.d_series.push_back(DValueRow{0, 0, 0, 1, 0, 0.123456789123, 7});
    log.d_series.push_back(DValueRow{50, 0, 0, 1, 0, 0.01, 12});
    log.throughput_series.push_back(ThroughputRow{0, 0, 1, 4, 10, 2, true});
    log.event_log.push_back(EventRow{3, 0, 2, EventKind::OverflowDrop, -1});
    log.event_log.push_back(EventRow{4, 0, 1, EventKind::CheckHit, 2});
    write_csv(log, dir);

    const std::string d_csv = slurp(dir / "d_values.csv");
    CHECK(d_csv.find("0,0,0,1,0,0.123456789,7\n") != std::string::npos);
    CHECK(d_csv.find("50,0,0,1,0,0.01,12\n") != std::string::npos);
    CHECK(slurp(dir / "throughput.csv").find("0,0,1,4,10,2,VLA\n") != std::string::npos);
    const std::string events = slurp(dir / "events.csv");
    CHECK(events.find("3,0,2,overflow_drop,-1\n") != std::string::npos);
    CHECK(events.find("4,0,1,check_hit,2\n") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("rerunning the same config writes byte-identical files") {
    SimConfig c = tiny_config();
    c.schedule = ErrorSchedule({{0, 1000000, 0.01}});
    c.seed = 5;

    const auto dir_a = fresh_dir("vlasim-metrics-a");
    const auto dir_b = fresh_dir("vlasim-metrics-b");
    write_csv(run(c), dir_a);
    write_csv(run(c), dir_b);
    for (const char* name : {"d_values.csv", "throughput.csv", "events.csv", "summary.csv"}) {
        CHECK(slurp(dir_a / name) == slurp(dir_b / name));
        CHECK(slurp(dir_a / name).size() > 40);
    }
    std::filesystem::remove_all(dir_a);
    std::filesystem::remove_all(dir_b);
}

TEST_CASE("summary carries run rows and per-phase d means") {
    SimConfig c = tiny_config();
    c.agent.adaptive = false;
    c.total_steps = 200;
    c.schedule = ErrorSchedule({{0, 100, 0.01}, {100, 1000000, 0.0}});
    c.sample_every = 10;
    const MetricsLog log = run(c);

    // fixed d: every per-phase mean is exactly d_init, both phases sampled
    REQUIRE_FALSE(log.summary.phase_d_means.empty());
    bool saw_phase[2] = {false, false};
    for (const PhaseDMean& m : log.summary.phase_d_means) {
        CHECK(m.mean_d == doctest::Approx(0.01).epsilon(1e-12));
        REQUIRE(m.phase < 2);
        saw_phase[m.phase] = true;
    }
    CHECK(saw_phase[0]);
    CHECK(saw_phase[1]);

    const auto dir = fresh_dir("vlasim-metrics-summary");
    write_csv(log, dir);
    const std::string summary = slurp(dir / "summary.csv");
    CHECK(summary.find("mean_processed_per_dsp,run,") != std::string::npos);
    CHECK(summary.find("processed,farmlet0.slot0,") != std::string::npos);
    CHECK(summary.find("mean_d,phase0.farmlet0.observer0.target1.error0,0.01\n") !=
          std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("io failures name the path") {
    MetricsLog log;
    CHECK_THROWS_WITH_AS(write_csv(log, "/proc/vlasim-cannot-write-here"),
                         doctest::Contains("vlasim-cannot-write-here"), std::runtime_error);
}
