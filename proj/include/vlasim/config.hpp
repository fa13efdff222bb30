#ifndef VLASIM_CONFIG_HPP
#define VLASIM_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "vlasim/agent.hpp"
#include "vlasim/errors.hpp"
#include "vlasim/injection.hpp"

namespace vlasim {

/// Full experiment parameterization. The defaults are the fluctuating-rate
/// scenario: 1 farmlet of 6 DSPs, 3 error types, 100000 steps, phase rates
/// 5e-4 / 5e-6 / 5e-3.
struct SimConfig {
    int farmlets = 1;
    int nodes_per_farmlet = 6;
    int error_types = 3;
    Step total_steps = 100000;
    std::uint64_t seed = 1;

    Units capacity = 1000;
    Units arrival_rate = 4;  // units enqueued per node per step
    Units base_rate = 5;     // units a healthy node processes per step
    // per error type, in (0, 1]; calibrated so any active error costs one
    // unit of integer rate (floor of 5 x product stays at 4), keeping an
    // errored node at arrival pace rather than underwater
    std::vector<double> slowdown = {0.9, 0.95, 0.95};

    AgentParams agent;
    int decision_interval = 1;   // steps between control decisions
    int check_cost_steps = 1;    // whole steps a check costs the checker

    ErrorSchedule schedule{{
        {0, 35000, 5e-4},
        {35000, 70000, 5e-6},
        {70000, 100000, 5e-3},
    }};

    Step sample_every = 50;
    std::string out_dir = "out";

    /// Throws ConfigError naming the offending field and bound.
    void validate() const;

    bool operator==(const SimConfig&) const = default;
};

/// Built-in scenarios: "paper-fluctuating" (adaptive agents, the default)
/// and "paper-fixed-baseline" (identical but with the monitoring rate
/// pinned at d_init). Throws ConfigError for unknown names.
SimConfig preset_config(const std::string& name);

/// Parses the flat `key = value` config format. Unknown keys, malformed
/// values, and partial schedule phases are ConfigErrors; the result is
/// validated before being returned.
SimConfig parse_config(std::istream& in, const std::string& source_name);
SimConfig load_config_file(const std::filesystem::path& path);

/// Serializes every field in the same `key = value` format the parser
/// reads. Floating-point values round-trip exactly.
std::string encode_config(const SimConfig& config);

/// Writes encode_config(config) to `path` (for the out_dir/config.echo
/// provenance file).
void write_config_echo(const SimConfig& config, const std::filesystem::path& path);

}  // namespace vlasim

#endif
