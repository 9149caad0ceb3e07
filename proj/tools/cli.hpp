#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinlab/signature.hpp"

namespace spinlab::cli {

enum class Status { ok, error, indeterminate };

std::string to_string(Status s);

struct CommandResult {
    Status status = Status::ok;
    nlohmann::json payload;                // written to stdout
    std::vector<std::string> diagnostics;  // written to stderr
    std::string text;                      // plain stdout text (help), replaces the payload
    bool compact = false;

    int exit_code() const { return status == Status::ok ? 0 : status == Status::error ? 1 : 2; }
    std::string render() const;
};

inline constexpr int kDefaultMaxL = 64;
/// Environment variable holding the lattice-size cap for `dirac` subcommands.
inline constexpr const char* kMaxLEnv = "SPINLAB_MAX_L";

struct DispatchOptions {
    // Blade product used by `mv product` and the anticommutation check of `verify`.
    BladeProductFn kernel = &blade_product;
};

/// Parse argv (without the program name) and run the selected subcommand.
CommandResult dispatch(const std::vector<std::string>& args, const DispatchOptions& options = {});

}  // namespace spinlab::cli
