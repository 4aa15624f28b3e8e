#ifndef BRIDGEFLOW_COMMANDS_HPP
#define BRIDGEFLOW_COMMANDS_HPP

#include "bridgeflow/config.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace bridgeflow {

struct CommandOptions {
    std::string config;
    std::optional<std::string> out;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
};

enum ExitCode : int {
    exit_ok = 0,
    exit_error = 1,
    exit_uncontrollable = 2,
};

/// Loads the config and applies --out / --seed overrides.
RunConfig resolve_config(const CommandOptions& options);

/// 16 hex digits of the config hash; identical across reruns of the same configuration.
std::string run_id(const RunConfig& config);

int cmd_check(const RunConfig& config, std::ostream& out);
int cmd_bridge(const RunConfig& config, unsigned threads, std::ostream& out);
int cmd_train(const RunConfig& config, unsigned threads, std::ostream& out);
int cmd_rollout(const RunConfig& config, unsigned threads, std::ostream& out);
int cmd_eval(const RunConfig& config, unsigned threads, std::ostream& out);

/// Dispatches by name and converts exceptions into a message on `err` plus exit_error.
int run_command(const std::string& name, const CommandOptions& options, std::ostream& out,
                std::ostream& err);

}  // namespace bridgeflow

#endif  // BRIDGEFLOW_COMMANDS_HPP
