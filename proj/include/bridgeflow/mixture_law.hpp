#ifndef BRIDGEFLOW_MIXTURE_LAW_HPP
#define BRIDGEFLOW_MIXTURE_LAW_HPP

#include "bridgeflow/bridges.hpp"
#include "bridgeflow/distributions.hpp"
#include "bridgeflow/systems.hpp"

#include <memory>
#include <optional>

namespace bridgeflow {

class DegenerateQueryError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Closed-form flow-matching feedback for a Gaussian initial law and a Gaussian-mixture target:
///
///   k̄(t, ξ) = Bᵀ e^{(1-t)Aᵀ} Φ_{1-t}⁻¹ (E[y | X^z_t = ξ] − e^{(1-t)A} ξ)
///
/// with E[y | X^z_t = ξ] = Σ_l w'_l (m_l + K_l (ξ − R_t m_0 − S_t m_l)) / Σ_l w'_l,
///   C_l = R_t Q_0 R_tᵀ + S_t Q_l S_tᵀ + ε² Σ_t,   K_l = Q_l S_tᵀ C_l⁻¹,
///   w'_l = w_l N(ξ; R_t m_0 + S_t m_l, C_l).
class MixtureLaw {
public:
    struct Component {
        double log_weight = 0.0;
        Vector offset;    ///< R_t m_0 + S_t m_l
        Vector mean;      ///< m_l
        Matrix gain;      ///< K_l
        std::optional<SpdFactor<double>> cov;  ///< C_l, absent when not needed
        double log_det = 0.0;
    };

    /// Everything about a query that depends on t only; reuse it across many ξ.
    struct Prepared {
        KernelNode node;
        std::vector<Component> components;
    };

    MixtureLaw(std::shared_ptr<const BridgeKernel> kernel, GaussianMixture initial,
               GaussianMixture target);

    const BridgeKernel& kernel() const { return *kernel_; }
    const GaussianMixture& initial() const { return initial_; }
    const GaussianMixture& target() const { return target_; }

    /// Evaluates at clamp(t).
    Prepared prepare(double t) const;

    /// Normalised responsibilities w'_l / Σ w'_l (zero-weight components get 0).
    Vector responsibilities(const Prepared& p, const Vector& xi) const;

    Vector posterior_mean_y(const Prepared& p, const Vector& xi) const;
    Vector posterior_mean_y(double t, const Vector& xi) const;

    Vector feedback(const Prepared& p, const Vector& xi) const;
    Vector feedback(double t, const Vector& xi) const;

    /// Column-wise feedback for a batch of states (n × N → m × N).
    Matrix feedback_batch(const Prepared& p, const Matrix& states) const;

    /// Law of X^z_t = R_t x + S_t y + ε Σ_t^{1/2} Z under Π = P0 ⊗ P1 (unclamped t ∈ [0,1]).
    GaussianMixture interpolant_marginal(double t) const;

private:
    std::shared_ptr<const BridgeKernel> kernel_;
    GaussianMixture initial_;
    GaussianMixture target_;
};

}  // namespace bridgeflow

#endif  // BRIDGEFLOW_MIXTURE_LAW_HPP
