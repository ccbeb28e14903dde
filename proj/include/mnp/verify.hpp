#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mnp {

struct VerifyConfig {
    std::uint64_t seed = 20240901;
    long samples = 1000;
};

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail; // counterexample payload or summary
};

/// Static registry of named property checks. Order is fixed; each check is
/// deterministic given the config.
std::vector<std::string> property_names();
PropertyResult run_property(const std::string& name, const VerifyConfig& cfg);
std::vector<PropertyResult> run_all_properties(const VerifyConfig& cfg);

} // namespace mnp
