#ifndef BRIDGEFLOW_METRICS_HPP
#define BRIDGEFLOW_METRICS_HPP

#include "bridgeflow/linalg.hpp"
#include "bridgeflow/rollout.hpp"

#include <cstdint>
#include <vector>

namespace bridgeflow {

/// Gaussian kernel k(a, b) = exp(−‖a − b‖² / (2h²)).
struct MmdConfig {
    double bandwidth = 2.0;
    unsigned threads = 1;
};

/// Biased (V-statistic) squared MMD before clamping. Samples are columns.
double mmd2_raw(const Matrix& X, const Matrix& Y, const MmdConfig& cfg = {});

/// max(0, mmd2_raw). Symmetric in its arguments bit for bit.
double mmd2(const Matrix& X, const Matrix& Y, const MmdConfig& cfg = {});

struct W2Config {
    Eigen::Index subsample = 512;
    int repeats = 4;
    bool exact = false;  ///< full-size exact assignment regardless of sample count
    std::uint64_t seed = 0;
};

/// Optimal assignment for a square cost matrix; returns column assigned to each row.
std::vector<Eigen::Index> solve_assignment(const Matrix& cost);

/// √(min_σ (1/N) Σ_i ‖x_i − y_σ(i)‖²) for equal-size sample sets.
double w2_exact(const Matrix& X, const Matrix& Y);

/// W2 under squared Euclidean cost. Exact when both sets fit in cfg.subsample (the larger set is
/// subsampled down to the smaller); otherwise the mean over cfg.repeats random subsamples.
double w2(const Matrix& X, const Matrix& Y, const W2Config& cfg = {});

struct Grid2 {
    double x_min = -1.0, x_max = 1.0;
    Eigen::Index nx = 100;
    double y_min = -1.0, y_max = 1.0;
    Eigen::Index ny = 100;

    double dx() const { return (x_max - x_min) / static_cast<double>(nx); }
    double dy() const { return (y_max - y_min) / static_cast<double>(ny); }
    /// Cell centres.
    double x(Eigen::Index i) const { return x_min + (static_cast<double>(i) + 0.5) * dx(); }
    double y(Eigen::Index j) const { return y_min + (static_cast<double>(j) + 0.5) * dy(); }

    /// Square-ish grid covering ±span sample standard deviations around the sample mean.
    static Grid2 covering(const Matrix& points, double span, Eigen::Index cells);
};

/// Isotropic Gaussian KDE of 2-D points (columns) on cell centres; result is ny × nx.
Matrix kde2(const Matrix& points, const Grid2& grid, double bandwidth);

/// Midpoint-rule integral of a density sampled by kde2 / density_on_grid.
double grid_integral(const Matrix& density, const Grid2& grid);

struct MetricCurve {
    std::vector<double> times;
    std::vector<double> mmd;             ///< √mmd2
    std::vector<double> mmd_normalized;  ///< mmd / normalizer
    std::vector<double> w2;              ///< empty unless requested
    double normalizer = 1.0;
};

/// Reference samples (e.g. regenerated X^{z^i}_t) at a set of times.
struct ReferenceSamples {
    std::vector<double> times;
    std::vector<Matrix> samples;
};

/// Up to max_points recorded times, evenly spread and always including the first and last.
std::vector<double> curve_times(const TrajectoryBatch& batch, std::size_t max_points = 50);

/// √mmd2(batch at t, reference at t) for every reference time, divided by `normalizer`
/// (√mmd2 between initial and target samples). Optionally the W2 distance as well.
MetricCurve mmd_curve(const TrajectoryBatch& batch, const ReferenceSamples& reference,
                      double normalizer, const MmdConfig& cfg, const W2Config* w2cfg = nullptr);

}  // namespace bridgeflow

#endif  // BRIDGEFLOW_METRICS_HPP
