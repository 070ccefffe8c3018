#pragma once

#include <stdexcept>
#include <string>

namespace tripsim {

/// Raised for malformed scenario input: bad files, inconsistent matrices,
/// unknown categories, invalid configuration.
class ScenarioError : public std::runtime_error {
public:
    explicit ScenarioError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace tripsim
