#include "vlasim/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace vlasim {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
    std::int64_t out = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    const auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ConfigError(key + " = '" + value + "' is not an integer");
    return out;
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    const auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ConfigError(key + " = '" + value + "' is not an unsigned integer");
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    const auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ConfigError(key + " = '" + value + "' is not a number");
    return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError(key + " = '" + value + "' is not a boolean (true/false)");
}

void append_double_exact(std::string& out, double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);  // shortest round-trip form
    out.append(buf, res.ptr);
}

struct PartialPhase {
    std::optional<Step> start;
    std::optional<Step> end;
    std::optional<double> rate;
};

}  // namespace

void SimConfig::validate() const {
    if (farmlets < 1) throw ConfigError("farmlets = " + std::to_string(farmlets) + " must be >= 1");
    if (nodes_per_farmlet < 1)
        throw ConfigError("nodes_per_farmlet = " + std::to_string(nodes_per_farmlet) + " must be >= 1");
    if (error_types < 1)
        throw ConfigError("error_types = " + std::to_string(error_types) + " must be >= 1");
    if (total_steps < 0)
        throw ConfigError("total_steps = " + std::to_string(total_steps) + " must be >= 0");
    if (capacity < 1) throw ConfigError("capacity = " + std::to_string(capacity) + " must be >= 1");
    if (arrival_rate < 0)
        throw ConfigError("arrival_rate = " + std::to_string(arrival_rate) + " must be >= 0");
    if (base_rate < 1) throw ConfigError("base_rate = " + std::to_string(base_rate) + " must be >= 1");
    if (static_cast<int>(slowdown.size()) != error_types)
        throw ConfigError("slowdown needs exactly error_types = " + std::to_string(error_types) +
                          " entries, got " + std::to_string(slowdown.size()));
    for (std::size_t i = 0; i < slowdown.size(); ++i) {
        if (!(slowdown[i] > 0.0 && slowdown[i] <= 1.0))
            throw ConfigError("slowdown." + std::to_string(i) + " = " + std::to_string(slowdown[i]) +
                              " is outside (0, 1]");
    }
    if (!(agent.d_min > 0.0))
        throw ConfigError("d_min = " + std::to_string(agent.d_min) + " must be > 0");
    if (!(agent.d_min <= agent.d_init && agent.d_init <= agent.d_max))
        throw ConfigError("d_init = " + std::to_string(agent.d_init) +
                          " must satisfy d_min <= d_init <= d_max");
    if (!(agent.delta_up > 0.0))
        throw ConfigError("delta_up = " + std::to_string(agent.delta_up) + " must be > 0");
    if (!(agent.delta_down > 0.0))
        throw ConfigError("delta_down = " + std::to_string(agent.delta_down) + " must be > 0");
    if (!(agent.c >= 0.0)) throw ConfigError("c = " + std::to_string(agent.c) + " must be >= 0");
    if (!(agent.expected_data >= 0.0))
        throw ConfigError("D = " + std::to_string(agent.expected_data) + " must be >= 0");
    if (decision_interval < 1)
        throw ConfigError("decision_interval = " + std::to_string(decision_interval) + " must be >= 1");
    if (check_cost_steps < 1)
        throw ConfigError("check_cost_steps = " + std::to_string(check_cost_steps) + " must be >= 1");
    if (sample_every < 1)
        throw ConfigError("sample_every = " + std::to_string(sample_every) + " must be >= 1");
    schedule.validate(total_steps);
}

SimConfig preset_config(const std::string& name) {
    SimConfig config;  // defaults are the fluctuating scenario
    if (name == "paper-fluctuating") return config;
    if (name == "paper-fixed-baseline") {
        config.agent.adaptive = false;
        return config;
    }
    throw ConfigError("unknown preset '" + name +
                      "' (available: paper-fluctuating, paper-fixed-baseline)");
}

SimConfig parse_config(std::istream& in, const std::string& source_name) {
    SimConfig config;
    config.slowdown.clear();  // rebuilt from slowdown.N keys, defaults restored below if absent
    std::map<int, double> slowdowns;
    std::map<int, PartialPhase> phases;
    bool schedule_given = false;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw ConfigError(source_name + ":" + std::to_string(line_no) +
                              ": expected 'key = value', got '" + text + "'");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty())
            throw ConfigError(source_name + ":" + std::to_string(line_no) + ": empty key");

        if (key == "farmlets") config.farmlets = static_cast<int>(parse_int(key, value));
        else if (key == "nodes_per_farmlet") config.nodes_per_farmlet = static_cast<int>(parse_int(key, value));
        else if (key == "error_types") config.error_types = static_cast<int>(parse_int(key, value));
        else if (key == "total_steps") config.total_steps = parse_int(key, value);
        else if (key == "seed") config.seed = parse_uint(key, value);
        else if (key == "capacity") config.capacity = parse_int(key, value);
        else if (key == "arrival_rate") config.arrival_rate = parse_int(key, value);
        else if (key == "base_rate") config.base_rate = parse_int(key, value);
        else if (key == "d_init") config.agent.d_init = parse_double(key, value);
        else if (key == "d_min") config.agent.d_min = parse_double(key, value);
        else if (key == "d_max") config.agent.d_max = parse_double(key, value);
        else if (key == "delta_up") config.agent.delta_up = parse_double(key, value);
        else if (key == "delta_down") config.agent.delta_down = parse_double(key, value);
        else if (key == "adaptive") config.agent.adaptive = parse_bool(key, value);
        else if (key == "c") config.agent.c = parse_double(key, value);
        else if (key == "D") config.agent.expected_data = parse_double(key, value);
        else if (key == "decision_interval") config.decision_interval = static_cast<int>(parse_int(key, value));
        else if (key == "check_cost_steps") config.check_cost_steps = static_cast<int>(parse_int(key, value));
        else if (key == "sample_every") config.sample_every = parse_int(key, value);
        else if (key == "out_dir") config.out_dir = value;
        else if (key.rfind("slowdown.", 0) == 0) {
            const int i = static_cast<int>(parse_int(key, key.substr(9)));
            slowdowns[i] = parse_double(key, value);
        } else if (key.rfind("schedule.", 0) == 0) {
            const auto dot = key.find('.', 9);
            if (dot == std::string::npos)
                throw ConfigError(source_name + ": malformed schedule key '" + key + "'");
            const int i = static_cast<int>(parse_int(key, key.substr(9, dot - 9)));
            const std::string field = key.substr(dot + 1);
            PartialPhase& phase = phases[i];
            if (field == "start") phase.start = parse_int(key, value);
            else if (field == "end") phase.end = parse_int(key, value);
            else if (field == "rate") phase.rate = parse_double(key, value);
            else throw ConfigError(source_name + ": unknown schedule field '" + key + "'");
            schedule_given = true;
        } else {
            throw ConfigError(source_name + ":" + std::to_string(line_no) +
                              ": unknown config key '" + key + "'");
        }
    }

    if (slowdowns.empty()) {
        config.slowdown = SimConfig{}.slowdown;
    } else {
        int expected = 0;
        for (const auto& [i, factor] : slowdowns) {
            if (i != expected)
                throw ConfigError(source_name + ": slowdown indices must be contiguous from 0, got " +
                                  std::to_string(i));
            config.slowdown.push_back(factor);
            ++expected;
        }
    }

    if (schedule_given) {
        std::vector<SchedulePhase> list;
        int expected = 0;
        for (const auto& [i, phase] : phases) {
            if (i != expected)
                throw ConfigError(source_name + ": schedule indices must be contiguous from 0, got " +
                                  std::to_string(i));
            if (!phase.start || !phase.end || !phase.rate)
                throw ConfigError(source_name + ": schedule." + std::to_string(i) +
                                  " needs start, end and rate");
            list.push_back(SchedulePhase{*phase.start, *phase.end, *phase.rate});
            ++expected;
        }
        config.schedule = ErrorSchedule(std::move(list));
    }

    config.validate();
    return config;
}

SimConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    return parse_config(in, path.string());
}

std::string encode_config(const SimConfig& config) {
    std::string out;
    const auto line_i = [&](const char* key, std::int64_t v) {
        out += key;
        out += " = ";
        out += std::to_string(v);
        out += '\n';
    };
    const auto line_d = [&](const char* key, double v) {
        out += key;
        out += " = ";
        append_double_exact(out, v);
        out += '\n';
    };
    line_i("farmlets", config.farmlets);
    line_i("nodes_per_farmlet", config.nodes_per_farmlet);
    line_i("error_types", config.error_types);
    line_i("total_steps", config.total_steps);
    out += "seed = " + std::to_string(config.seed) + "\n";
    line_i("capacity", config.capacity);
    line_i("arrival_rate", config.arrival_rate);
    line_i("base_rate", config.base_rate);
    for (std::size_t i = 0; i < config.slowdown.size(); ++i)
        line_d(("slowdown." + std::to_string(i)).c_str(), config.slowdown[i]);
    line_d("d_init", config.agent.d_init);
    line_d("d_min", config.agent.d_min);
    line_d("d_max", config.agent.d_max);
    line_d("delta_up", config.agent.delta_up);
    line_d("delta_down", config.agent.delta_down);
    out += config.agent.adaptive ? "adaptive = true\n" : "adaptive = false\n";
    line_d("c", config.agent.c);
    line_d("D", config.agent.expected_data);
    line_i("decision_interval", config.decision_interval);
    line_i("check_cost_steps", config.check_cost_steps);
    const auto& phases = config.schedule.phases();
    for (std::size_t i = 0; i < phases.size(); ++i) {
        const std::string prefix = "schedule." + std::to_string(i);
        line_i((prefix + ".start").c_str(), phases[i].start);
        line_i((prefix + ".end").c_str(), phases[i].end);
        line_d((prefix + ".rate").c_str(), phases[i].rate);
    }
    line_i("sample_every", config.sample_every);
    out += "out_dir = ";
    out += config.out_dir;
    out += '\n';
    return out;
}

void write_config_echo(const SimConfig& config, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    const std::string text = encode_config(config);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace vlasim
