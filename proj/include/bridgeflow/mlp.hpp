#ifndef BRIDGEFLOW_MLP_HPP
#define BRIDGEFLOW_MLP_HPP

#include "bridgeflow/linalg.hpp"
#include "bridgeflow/random.hpp"

#include <string>
#include <vector>

namespace bridgeflow {

/// Residual MLP  [t, ξ] ↦ u:
///   h_0 = W_in x + b_in
///   h_{k+1} = h_k + W_k2 elu(W_k1 h_k + b_k1) + b_k2,   k = 0..blocks-1
///   u = W_out h_blocks + b_out
struct MlpArchitecture {
    Eigen::Index input_dim = 1;
    Eigen::Index width = 32;
    Eigen::Index blocks = 3;
    Eigen::Index output_dim = 1;

    Eigen::Index parameter_count() const;
    bool operator==(const MlpArchitecture&) const = default;
};

/// One entry per weight or bias array, in storage order. Weights are row-major (out × in).
struct ParameterBlock {
    std::string name;
    Eigen::Index rows = 0;
    Eigen::Index cols = 0;
    Eigen::Index offset = 0;
};

std::vector<ParameterBlock> parameter_layout(const MlpArchitecture& arch);

class Mlp {
public:
    using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    using ConstWeights = Eigen::Map<const RowMajor>;
    using ConstBias = Eigen::Map<const Vector>;

    /// All parameters zero.
    explicit Mlp(MlpArchitecture arch);
    Mlp(MlpArchitecture arch, Vector parameters);

    /// Glorot-uniform weights in ±√(6/(fan_in+fan_out)), zero biases.
    static Mlp glorot(MlpArchitecture arch, Rng& rng);

    const MlpArchitecture& architecture() const { return arch_; }
    const Vector& parameters() const { return theta_; }
    Vector& parameters() { return theta_; }

    /// inputs: input_dim × batch → output_dim × batch.
    Matrix forward(const Matrix& inputs) const;
    /// Convenience for a single query with input [t, ξ].
    Vector forward(double t, const Vector& xi) const;

    ConstWeights weights(std::size_t block_index) const;
    ConstBias bias(std::size_t block_index) const;

private:
    MlpArchitecture arch_;
    std::vector<ParameterBlock> layout_;
    Vector theta_;
};

double elu(double x);

/// Stacks [t; ξ] column-wise for batch evaluation.
Matrix make_inputs(const Vector& times, const Matrix& states);

struct LossAndGrad {
    double loss = 0.0;
    Vector grad;  ///< same layout as Mlp::parameters()
};

/// loss = (1/B) Σ_i ‖f(x_i) − u_i‖² and its exact gradient by reverse-mode accumulation.
LossAndGrad loss_and_grad(const Mlp& net, const Matrix& inputs, const Matrix& targets);

struct AdamConfig {
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

struct AdamState {
    Vector first;
    Vector second;
    long step = 0;

    explicit AdamState(Eigen::Index size = 0)
        : first(Vector::Zero(size)), second(Vector::Zero(size)) {}
};

/// Bias-corrected ADAM update of params in place.
void adam_step(Vector& params, const Vector& grad, AdamState& state, double lr,
               const AdamConfig& cfg = {});

}  // namespace bridgeflow

#endif  // BRIDGEFLOW_MLP_HPP
