#ifndef BRIDGEFLOW_ROLLOUT_HPP
#define BRIDGEFLOW_ROLLOUT_HPP

#include "bridgeflow/mixture_law.hpp"
#include "bridgeflow/mlp.hpp"
#include "bridgeflow/systems.hpp"

#include <memory>
#include <string>
#include <variant>

namespace bridgeflow {

/// A feedback law u = k(t, ξ), evaluated at clamp(t).
class FlowField {
public:
    struct ClosedForm {
        std::shared_ptr<const MixtureLaw> law;
    };
    struct Learned {
        Mlp net;
    };
    struct PointBridge {
        Vector target;
    };
    using Variant = std::variant<ClosedForm, Learned, PointBridge>;

    static FlowField closed_form(std::shared_ptr<const MixtureLaw> law);
    static FlowField learned(Mlp net);
    static FlowField point_bridge(Vector target);

    const Variant& variant() const { return law_; }
    std::string id() const;

    /// Column-wise law for a batch of states (n × N → m × N).
    Matrix evaluate(const BridgeKernel& kernel, double t, const Matrix& states) const;
    Vector evaluate(const BridgeKernel& kernel, double t, const Vector& xi) const;

    void check_compatible(const BridgeKernel& kernel) const;

private:
    explicit FlowField(Variant v) : law_(std::move(v)) {}
    Variant law_;
};

struct TrajectoryMetadata {
    std::uint64_t seed = 0;
    std::string system;
    std::string law;
    double dt = 0.0;
    double epsilon = 0.0;
};

/// Recorded states of N' paths: states[k] is n × N' at times[k].
struct TrajectoryBatch {
    std::vector<double> times;
    std::vector<Matrix> states;
    TrajectoryMetadata metadata;

    Eigen::Index path_count() const { return states.empty() ? 0 : states.front().cols(); }
    Eigen::Index state_dim() const { return states.empty() ? 0 : states.front().rows(); }
    /// Index of the recorded time equal to t (within 1e-9); throws std::out_of_range otherwise.
    std::size_t time_index(double t) const;
};

struct RolloutOptions {
    std::size_t record_stride = 1;  ///< keep every k-th step; the final step is always kept
    unsigned threads = 1;
};

class RolloutError : public std::runtime_error {
public:
    RolloutError(const std::string& what, std::size_t step, Eigen::Index path)
        : std::runtime_error(what), step_(step), path_(path) {}
    std::size_t step() const noexcept { return step_; }
    Eigen::Index path() const noexcept { return path_; }

private:
    std::size_t step_;
    Eigen::Index path_;
};

/// Euler–Maruyama: X_{k+1} = X_k + (A X_k + B k(t_k, X_k)) dt + ε B √dt ξ_k, ξ_k ~ N(0, I_m).
/// Path p draws its noise from its own stream split from `seed`, so results do not depend on the
/// thread count.
TrajectoryBatch rollout(const BridgeKernel& kernel, const FlowField& law, const Matrix& init,
                        double dt, std::uint64_t seed, const RolloutOptions& options = {});

struct SampleMoments {
    Vector mean;
    Matrix cov;  ///< unbiased (N − 1) normalisation
};

SampleMoments sample_moments(const Matrix& samples);

/// Sample mean and covariance at recorded time t.
SampleMoments moments(const TrajectoryBatch& batch, double t);

}  // namespace bridgeflow

#endif  // BRIDGEFLOW_ROLLOUT_HPP
