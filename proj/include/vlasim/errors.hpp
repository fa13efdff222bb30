#ifndef VLASIM_ERRORS_HPP
#define VLASIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vlasim {

/// Invalid configuration, reported at load time. Messages name the
/// offending field and the violated bound. Maps to exit code 2 in the CLI.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vlasim

#endif
