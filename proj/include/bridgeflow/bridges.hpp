#ifndef BRIDGEFLOW_BRIDGES_HPP
#define BRIDGEFLOW_BRIDGES_HPP

// Point-to-point bridges through a linear system: the shared feedback gain, the deterministic
// interpolant, the Gaussian marginal of the stochastic bridge and regression samples drawn from it.

#include "bridgeflow/distributions.hpp"
#include "bridgeflow/systems.hpp"

namespace bridgeflow {

/// k(t, ξ) = Bᵀ e^{(1-t)Aᵀ} Φ_{1-t}⁻¹ (y − e^{(1-t)A} ξ), evaluated at clamp(t).
/// The same gain serves ε = 0 and ε > 0.
Vector bridge_gain(const BridgeKernel& kernel, double t, const Vector& xi, const Vector& y);

/// Same gain from an already computed node (node.gain must be present).
Vector bridge_gain(const KernelNode& node, const Vector& xi, const Vector& y);

/// Minimum-energy interpolant e^{tA}x + Φ_t e^{(1-t)Aᵀ} Φ_1⁻¹ (y − e^{A}x) = R_t x + S_t y.
Vector det_interpolate(const BridgeKernel& kernel, const EndpointPair& pair, double t);

struct GaussianMarginal {
    Vector mean;
    Matrix cov;
};

/// Law of the stochastic bridge at time t: N(det_interpolate, ε² Σ_t).
GaussianMarginal bridge_marginal(const BridgeKernel& kernel, const EndpointPair& pair, double t);

struct BridgeSample {
    double t = 0.0;
    Vector state;    ///< X^z_t
    Vector control;  ///< u^z_t = bridge_gain(t, X^z_t, y)
    EndpointPair pair;
};

/// One (X^z_t, u^z_t) regression sample. Requires t ≤ 1 − δ.
BridgeSample sample_training_pair(const BridgeKernel& kernel, const EndpointPair& pair, double t,
                                  Rng& rng);

/// Same draw against a precomputed node.
BridgeSample sample_training_pair(const KernelNode& node, double epsilon, const EndpointPair& pair,
                                  Rng& rng);

/// X^{z^i}_t for every pair at a single time (one column per pair).
Matrix interpolant_samples(const BridgeKernel& kernel, const PairSet& pairs, double t, Rng& rng);

/// Euler–Maruyama paths of dX = AX dt + B(u dt + ε dW) under the point bridge gain towards y.
struct BridgePaths {
    std::vector<double> times;
    std::vector<Matrix> states;    ///< per path: n × (steps+1)
    std::vector<Matrix> controls;  ///< per path: m × (steps+1); last column repeats the clamped law
};

BridgePaths simulate_bridge(const BridgeKernel& kernel, const EndpointPair& pair, double dt,
                            std::size_t path_count, std::uint64_t seed);

}  // namespace bridgeflow

#endif  // BRIDGEFLOW_BRIDGES_HPP
