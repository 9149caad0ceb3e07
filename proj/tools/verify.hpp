#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinlab/signature.hpp"

namespace spinlab::cli {

enum class Level { quick, full };

struct VerifyOptions {
    std::uint64_t seed = 0;
    Level level = Level::quick;
    double tolerance_scale = 1.0;
    std::string suite = "all";  // all, clifford, classify, rep, spin, dirac
    BladeProductFn kernel = &blade_product;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    double residual = 0;
    double tolerance = 0;
    std::string detail;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    Level level = Level::quick;
    std::vector<CheckResult> checks;

    bool passed() const;
    nlohmann::json to_json() const;
};

VerifyReport run_verify(const VerifyOptions& options);

Level level_from_string(const std::string& name);
std::string to_string(Level level);

}  // namespace spinlab::cli
