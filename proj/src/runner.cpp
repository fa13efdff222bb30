#include "vlasim/runner.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>

#include "vlasim/engine.hpp"

namespace vlasim {

namespace {

std::string fmt_double(double v, int precision = 9) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision);
    return std::string(buf, res.ptr);
}

SimConfig variant_config(const SimConfig& base, std::uint64_t seed, bool adaptive,
                         const std::filesystem::path& run_dir) {
    SimConfig c = base;
    c.seed = seed;
    c.agent.adaptive = adaptive;
    c.out_dir = run_dir.string();
    return c;
}

CompareRow headline(const SimConfig& config, const Summary& s) {
    return CompareRow{config.seed, config.agent.adaptive, s.mean_processed_per_dsp,
                      s.total_dropped, s.check_hits, s.check_misses};
}

}  // namespace

int cmd_run(const SimConfig& config, std::ostream& out) {
    MetricsLog log = run(config);
    const std::filesystem::path out_dir(config.out_dir);
    write_csv(log, out_dir);
    write_config_echo(config, out_dir / "config.echo");

    const Summary& s = log.summary;
    out << "run complete: " << config.total_steps << " steps, " << config.farmlets
        << " farmlet(s) x " << config.nodes_per_farmlet << " node(s), seed " << config.seed
        << "\n\n";
    out << "  metric                    value\n";
    out << "  mean_processed_per_dsp    " << fmt_double(s.mean_processed_per_dsp) << "\n";
    out << "  total_processed           " << s.total_processed << "\n";
    out << "  total_enqueued            " << s.total_enqueued << "\n";
    out << "  total_dropped             " << s.total_dropped << "\n";
    out << "  check_hits                " << s.check_hits << "\n";
    out << "  check_misses              " << s.check_misses << "\n";
    out << "  injects                   " << s.injects << "\n\n";
    out << "  farmlet  slot  processed  dropped  final_fill\n";
    for (const NodeTotals& t : s.nodes) {
        out << "  " << std::setw(7) << t.farmlet << "  " << std::setw(4) << t.slot << "  "
            << std::setw(9) << t.processed << "  " << std::setw(7) << t.dropped << "  "
            << std::setw(10) << t.final_fill << "\n";
    }
    out << "\noutputs written to " << out_dir.string() << "\n";
    return 0;
}

CompareResult compare_runs(const SimConfig& base, const std::vector<std::uint64_t>& seeds,
                           const std::filesystem::path& out_dir) {
    if (seeds.empty()) throw ConfigError("compare needs at least one seed");
    CompareResult result;
    for (const std::uint64_t seed : seeds) {
        double means[2] = {0.0, 0.0};
        for (const bool adaptive : {true, false}) {
            const std::string name =
                "seed" + std::to_string(seed) + (adaptive ? "-adaptive" : "-fixed");
            const SimConfig config = variant_config(base, seed, adaptive, out_dir / name);
            MetricsLog log = run(config);
            write_csv(log, config.out_dir);
            write_config_echo(config, std::filesystem::path(config.out_dir) / "config.echo");
            result.rows.push_back(headline(config, log.summary));
            means[adaptive ? 0 : 1] = log.summary.mean_processed_per_dsp;
        }
        if (means[0] > means[1]) ++result.adaptive_wins;
    }

    std::string csv = "seed,variant,mean_processed_per_dsp,total_dropped,check_hits,check_misses\n";
    for (const CompareRow& r : result.rows) {
        csv += std::to_string(r.seed);
        csv += r.adaptive ? ",adaptive," : ",fixed,";
        csv += fmt_double(r.mean_processed_per_dsp);
        csv += ',';
        csv += std::to_string(r.total_dropped);
        csv += ',';
        csv += std::to_string(r.check_hits);
        csv += ',';
        csv += std::to_string(r.check_misses);
        csv += '\n';
    }
    std::filesystem::create_directories(out_dir);
    std::ofstream file(out_dir / "compare.csv", std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + (out_dir / "compare.csv").string());
    file << csv;
    return result;
}

int cmd_compare(const SimConfig& base, const std::vector<std::uint64_t>& seeds,
                std::ostream& out) {
    const CompareResult result = compare_runs(base, seeds, base.out_dir);
    out << "  seed      adaptive         fixed         delta\n";
    for (std::size_t i = 0; i + 1 < result.rows.size(); i += 2) {
        const CompareRow& a = result.rows[i];
        const CompareRow& f = result.rows[i + 1];
        out << "  " << std::setw(4) << a.seed << "  " << std::setw(12)
            << fmt_double(a.mean_processed_per_dsp) << "  " << std::setw(12)
            << fmt_double(f.mean_processed_per_dsp) << "  " << std::setw(12)
            << fmt_double(a.mean_processed_per_dsp - f.mean_processed_per_dsp) << "\n";
    }
    out << "adaptive wins " << result.adaptive_wins << " of " << seeds.size() << " seed(s)\n";
    out << "outputs written to " << base.out_dir << "\n";
    return 0;
}

}  // namespace vlasim
