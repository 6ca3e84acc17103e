#pragma once

#include <stdexcept>
#include <string>

namespace dpd {

// bad user input: parameters, config files, CLI values
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// two particles at exactly zero separation, pair direction undefined
struct DegeneratePairError : std::runtime_error {
    explicit DegeneratePairError(const std::string& what) : std::runtime_error(what) {}
};

// neighbor list queried after particles moved past the skin guarantee
struct StaleListError : std::logic_error {
    explicit StaleListError(const std::string& what) : std::logic_error(what) {}
};

// estimator asked for a value it cannot form (no samples, zero denominator)
struct EstimateError : std::runtime_error {
    explicit EstimateError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dpd
