#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vlasim/config.hpp"
#include "vlasim/runner.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string preset;
    std::uint64_t seed = 0;
    std::int64_t steps = 0;
    std::string out_dir;
    std::int64_t sample_every = 0;

    CLI::Option* seed_opt = nullptr;
    CLI::Option* steps_opt = nullptr;
    CLI::Option* out_opt = nullptr;
    CLI::Option* sample_opt = nullptr;

    void attach(CLI::App* sub) {
        auto* config_opt =
            sub->add_option("--config", config_path, "flat key=value config file");
        auto* preset_opt = sub->add_option(
            "--preset", preset, "built-in scenario: paper-fluctuating or paper-fixed-baseline");
        config_opt->excludes(preset_opt);
        seed_opt = sub->add_option("--seed", seed, "RNG seed override");
        steps_opt = sub->add_option("--steps", steps, "total step count override");
        out_opt = sub->add_option("--out", out_dir, "output directory override");
        sample_opt = sub->add_option("--sample-every", sample_every, "sampling stride override");
    }

    // flag > config file > built-in default
    vlasim::SimConfig build() const {
        vlasim::SimConfig config;
        if (!preset.empty()) config = vlasim::preset_config(preset);
        else if (!config_path.empty()) config = vlasim::load_config_file(config_path);
        if (seed_opt->count() > 0) config.seed = seed;
        if (steps_opt->count() > 0) config.total_steps = steps;
        if (out_opt->count() > 0) config.out_dir = out_dir;
        if (sample_opt->count() > 0) config.sample_every = sample_every;
        config.validate();
        return config;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"farmlet self-monitoring simulator"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    CLI::App* run_cmd = app.add_subcommand("run", "single simulation run, four CSV outputs");
    run_flags.attach(run_cmd);

    CommonFlags compare_flags;
    std::vector<std::uint64_t> seeds;
    CLI::App* compare_cmd =
        app.add_subcommand("compare", "adaptive vs fixed-rate runs over a seed list");
    compare_flags.attach(compare_cmd);
    compare_cmd->add_option("--seeds", seeds, "comma separated seed list (default 1,2,3,4,5)")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run_cmd->parsed()) return vlasim::cmd_run(run_flags.build(), std::cout);
        if (seeds.empty()) seeds = {1, 2, 3, 4, 5};
        return vlasim::cmd_compare(compare_flags.build(), seeds, std::cout);
    } catch (const vlasim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
