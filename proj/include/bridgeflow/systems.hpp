#ifndef BRIDGEFLOW_SYSTEMS_HPP
#define BRIDGEFLOW_SYSTEMS_HPP

#include "bridgeflow/linalg.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bridgeflow {

/// dX = A X dt + B (u dt + ε dW), W an m-dimensional Brownian motion.
/// epsilon == 0 gives the deterministic system dX/dt = A X + B u.
struct LinearSystem {
    Matrix A;
    Matrix B;
    double epsilon = 0.0;
    std::string name;

    Eigen::Index state_dim() const { return A.rows(); }
    Eigen::Index input_dim() const { return B.cols(); }

    /// Throws DimensionError / std::invalid_argument on inconsistent or non-finite data.
    void validate() const;
};

struct ControllabilityReport {
    bool controllable = false;
    Eigen::Index rank = 0;
    Eigen::Index state_dim = 0;
    Vector singular_values;  ///< of the Kalman matrix [B, AB, …, A^{n-1}B]
};

/// Kalman rank test with threshold 1e-10·σ_max.
ControllabilityReport is_controllable(const Matrix& A, const Matrix& B);

/// One of "double_integrator", "oscillator", "nyquist_johnson", "mass_spring(d)".
LinearSystem builtin_system(const std::string& name, double epsilon = 0.0);

std::vector<std::string> builtin_system_names();

class UncontrollableSystemError : public std::invalid_argument {
public:
    explicit UncontrollableSystemError(ControllabilityReport report);
    const ControllabilityReport& report() const noexcept { return report_; }

private:
    ControllabilityReport report_;
};

/// Every time-dependent matrix the bridge and feedback formulas need at a single time t.
/// With s = 1 − t:
///   S = Φ_t e^{sAᵀ} Φ_1⁻¹,  R = e^{tA} − S e^{A},
///   Σ = Φ_t − Φ_t e^{sAᵀ} Φ_1⁻¹ e^{sA} Φ_t,
///   gain = Bᵀ e^{sAᵀ} Φ_s⁻¹   (only when s ≥ δ).
struct KernelNode {
    double t = 0.0;
    Matrix exp_t;     ///< e^{tA}
    Matrix exp_rest;  ///< e^{(1-t)A}
    Matrix gram_t;    ///< Φ_t
    Matrix gram_rest; ///< Φ_{1-t}
    Matrix R;
    Matrix S;
    Matrix sigma;       ///< Σ_t (unscaled by ε²)
    Matrix sigma_sqrt;  ///< Σ_t^{1/2}
    std::optional<Matrix> gain;  ///< m×n; absent for t > 1 − δ
};

/// Time-grid cache of KernelNode values on [0, 1] for one controllable system.
/// Immutable after construction and safe to share between threads.
class BridgeKernel {
public:
    static constexpr std::size_t kDefaultGridSize = 1001;
    static constexpr double kDefaultDelta = 1e-3;

    BridgeKernel(LinearSystem system, std::size_t grid_size = kDefaultGridSize,
                 double delta = kDefaultDelta);

    const LinearSystem& system() const { return system_; }
    Eigen::Index state_dim() const { return system_.state_dim(); }
    Eigen::Index input_dim() const { return system_.input_dim(); }
    double epsilon() const { return system_.epsilon; }
    double delta() const { return delta_; }

    const std::vector<double>& grid() const { return grid_; }
    const KernelNode& node(std::size_t k) const { return nodes_.at(k); }

    /// min(t, 1 − δ); feedback laws are never evaluated past this.
    double clamp(double t) const { return std::min(t, 1.0 - delta_); }

    /// Grid node when t sits on the grid, otherwise a freshly computed node (never interpolated).
    KernelNode at(double t) const;

    /// Node evaluated at clamp(t); always carries a gain.
    KernelNode law_node(double t) const { return at(clamp(t)); }

    const Matrix& exp_one() const { return exp_one_; }    ///< e^{A}
    const Matrix& gram_one() const { return gram_one_; }  ///< Φ_1

private:
    KernelNode compute(double t) const;
    std::optional<std::size_t> grid_index(double t) const;

    LinearSystem system_;
    double delta_;
    std::vector<double> grid_;
    Matrix exp_one_;
    Matrix gram_one_;
    std::shared_ptr<const SpdFactor<double>> gram_one_factor_;
    std::vector<KernelNode> nodes_;
};

}  // namespace bridgeflow

#endif  // BRIDGEFLOW_SYSTEMS_HPP
