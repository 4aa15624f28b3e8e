#ifndef BRIDGEFLOW_CONFIG_HPP
#define BRIDGEFLOW_CONFIG_HPP

#include "bridgeflow/distributions.hpp"
#include "bridgeflow/systems.hpp"
#include "bridgeflow/trainer.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace bridgeflow {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SystemConfig {
    std::optional<std::string> name;  ///< builtin name, or empty when A/B are explicit
    Matrix A;
    Matrix B;
    double epsilon = 0.0;
    std::size_t grid_size = BridgeKernel::kDefaultGridSize;
    double delta = BridgeKernel::kDefaultDelta;

    LinearSystem build() const;
};

enum class LawType { closed_form, learned };

struct LawConfig {
    LawType type = LawType::learned;
    std::string params_path;  ///< empty → <output_dir>/params.json
    TrainConfig train;
};

struct RolloutConfig {
    Eigen::Index paths = 2000;
    double dt = 1e-3;
    std::size_t csv_stride = 10;
    bool full_resolution = false;
};

struct EvalConfig {
    double mmd_bandwidth = 2.0;
    bool w2 = true;
    Eigen::Index w2_subsample = 512;
    int w2_repeats = 4;
    bool w2_exact = false;
    std::size_t max_points = 50;
    double kde_bandwidth = 0.25;
    Eigen::Index density_cells = 100;
    std::vector<Eigen::Index> projection;  ///< two coordinates; empty → last two
};

struct BridgeConfig {
    Vector x;
    Vector y;
    std::size_t paths = 5;
    double dt = 1e-3;
};

struct RunConfig {
    std::uint64_t seed = 0;
    SystemConfig system;
    DistributionSpec initial;
    DistributionSpec target;
    LawConfig law;
    RolloutConfig rollout;
    EvalConfig eval;
    std::optional<BridgeConfig> bridge;
    std::string output_dir = "out";
    std::string base_dir;  ///< directory relative paths resolve against (not serialised)

    Coupling coupling() const { return {initial, target}; }
    std::string params_path() const;
    std::vector<Eigen::Index> projection() const;
};

/// Parses a JSON document. Errors carry line:column for syntax problems and the dotted key path
/// for semantic ones.
RunConfig parse_config(const std::string& text, const std::string& origin = "config",
                       const std::string& base_dir = ".");

RunConfig load_config(const std::string& path);

nlohmann::ordered_json to_json(const RunConfig& config);

/// FNV-1a 64 of the canonical serialisation, output_dir excluded.
std::uint64_t config_hash(const RunConfig& config);

std::string resolve_path(const std::string& base_dir, const std::string& path);

}  // namespace bridgeflow

#endif  // BRIDGEFLOW_CONFIG_HPP
