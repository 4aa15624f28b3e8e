#ifndef BRIDGEFLOW_IO_HPP
#define BRIDGEFLOW_IO_HPP
// Self-describing artifact files. Every CSV begins with
//   # bridgeflow run_id=<id> kind=<kind> [key=value ...]
// followed by a column header row; numbers are written with 17 significant digits.

#include "bridgeflow/bridges.hpp"
#include "bridgeflow/metrics.hpp"
#include "bridgeflow/mlp.hpp"
#include "bridgeflow/rollout.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bridgeflow {

inline constexpr const char* kToolVersion = "1.0.0";

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string format_number(double value);

struct CsvTable {
    std::string run_id;
    std::string kind;
    std::map<std::string, std::string> attributes;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    /// Index of a named column; throws IoError when absent.
    std::size_t column(const std::string& name) const;
};

/// Writes header line, column row and data rows in one go.
void write_csv(const std::string& path, const std::string& run_id, const std::string& kind,
               const std::vector<std::string>& columns, const std::vector<std::vector<double>>& rows,
               const std::map<std::string, std::string>& attributes = {});

CsvTable read_csv(const std::string& path);

/// Columns path_id, t, x_1..x_n for every recorded time.
void write_trajectories(const std::string& path, const std::string& run_id,
                        const TrajectoryBatch& batch);
TrajectoryBatch read_trajectories(const std::string& path);

/// One sample (column of `samples`) per row: x_1..x_n.
void write_samples(const std::string& path, const std::string& run_id, const std::string& kind,
                   const Matrix& samples);
Matrix read_samples(const std::string& path);

/// Columns iteration, loss, loss_avg (trailing mean over `window` iterations).
void write_loss_trace(const std::string& path, const std::string& run_id,
                      const std::vector<double>& trace, std::size_t window = 100);

/// Columns pair_id, x_1..x_n, y_1..y_n.
void write_pairs(const std::string& path, const std::string& run_id, const PairSet& pairs);
PairSet read_pairs(const std::string& path);

/// Columns t, mmd, mmd_normalized, w2 (w2 is nan when not computed).
void write_metrics(const std::string& path, const std::string& run_id, const MetricCurve& curve);

/// Columns x, y, kde, exact_log_density (nan when no exact density is known), one row per cell.
void write_density(const std::string& path, const std::string& run_id, const Grid2& grid,
                   const Matrix& kde, const std::optional<Matrix>& exact_log_density,
                   const std::vector<Eigen::Index>& projection);

/// Columns path_id, t, x_1..x_n, u_1..u_m.
void write_bridge(const std::string& path, const std::string& run_id, const BridgePaths& paths);

/// JSON with an architecture header, the layer layout and the flat parameter array.
void write_params(const std::string& path, const std::string& run_id, const Mlp& net);
Mlp read_params(const std::string& path);

struct ManifestEntry {
    std::string path;  ///< relative to the manifest's directory
    std::string role;
};

struct Manifest {
    std::string run_id;
    std::string config_hash;
    std::string tool_version = kToolVersion;
    std::vector<ManifestEntry> files;
};

std::optional<Manifest> read_manifest(const std::string& dir);

/// Merges `update` into any manifest already in `dir` (entries with the same path are replaced;
/// a different run id discards the old entries) and writes it atomically via rename.
void write_manifest(const std::string& dir, const Manifest& update);

}  // namespace bridgeflow

#endif  // BRIDGEFLOW_IO_HPP
