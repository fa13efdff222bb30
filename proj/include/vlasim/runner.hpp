#ifndef VLASIM_RUNNER_HPP
#define VLASIM_RUNNER_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "vlasim/config.hpp"
#include "vlasim/metrics.hpp"

namespace vlasim {

/// One row of compare.csv: a (seed, variant) run's headline numbers.
struct CompareRow {
    std::uint64_t seed = 0;
    bool adaptive = false;
    double mean_processed_per_dsp = 0.0;
    Units total_dropped = 0;
    std::int64_t check_hits = 0;
    std::int64_t check_misses = 0;
};

struct CompareResult {
    std::vector<CompareRow> rows;  // adaptive then fixed, per seed in input order
    int adaptive_wins = 0;         // seeds where adaptive mean > fixed mean
};

/// Runs config, writes the four CSVs plus config.echo into config.out_dir,
/// and prints the summary table to `out`. Returns the process exit code.
int cmd_run(const SimConfig& config, std::ostream& out);

/// For each seed, runs the adaptive and the fixed-baseline variant of
/// `base` (everything else identical). Each run's CSVs land in
/// out_dir/seed<S>-<variant>/, and out_dir/compare.csv collects the
/// headline rows.
CompareResult compare_runs(const SimConfig& base, const std::vector<std::uint64_t>& seeds,
                           const std::filesystem::path& out_dir);

/// compare_runs plus the per-seed delta table and win count on `out`.
int cmd_compare(const SimConfig& base, const std::vector<std::uint64_t>& seeds, std::ostream& out);

}  // namespace vlasim

#endif
