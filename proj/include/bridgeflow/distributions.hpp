#ifndef BRIDGEFLOW_DISTRIBUTIONS_HPP
#define BRIDGEFLOW_DISTRIBUTIONS_HPP

#include "bridgeflow/linalg.hpp"
#include "bridgeflow/random.hpp"

#include <string>
#include <vector>

namespace bridgeflow {

struct GaussianComponent {
    double weight = 1.0;
    Vector mean;
    Matrix cov;
};

/// Σ_l w_l N(m_l, Q_l). A single component is a plain Gaussian.
class GaussianMixture {
public:
    GaussianMixture() = default;
    explicit GaussianMixture(std::vector<GaussianComponent> components);

    static GaussianMixture gaussian(Vector mean, Matrix cov);

    const std::vector<GaussianComponent>& components() const { return components_; }
    std::size_t size() const { return components_.size(); }
    Eigen::Index dim() const { return components_.empty() ? 0 : components_.front().mean.size(); }

    /// Mixture restricted to the given coordinates (exact marginal).
    GaussianMixture marginal(const std::vector<Eigen::Index>& coords) const;

private:
    std::vector<GaussianComponent> components_;
};

/// log Σ_l w_l N(ξ; m_l, Q_l), max-shifted log-sum-exp. Every Q_l must be strictly PD.
double log_density(const GaussianMixture& gm, const Vector& xi);

enum class DistributionKind { gaussian, mixture, uniform_circle, empirical };

struct DistributionSpec {
    DistributionKind kind = DistributionKind::gaussian;
    GaussianMixture mixture;  ///< gaussian and mixture kinds
    Vector center;            ///< uniform_circle
    double radius = 1.0;      ///< uniform_circle
    std::string path;         ///< empirical: CSV source
    Matrix samples;           ///< empirical: loaded data, one sample per column

    static DistributionSpec gaussian(Vector mean, Matrix cov);
    static DistributionSpec from_mixture(GaussianMixture gm);
    static DistributionSpec uniform_circle(Vector center, double radius);
    static DistributionSpec empirical(std::string path);  ///< loads the CSV immediately
    static DistributionSpec empirical(Matrix samples);

    Eigen::Index dim() const;
    bool is_gaussian_family() const {
        return kind == DistributionKind::gaussian || kind == DistributionKind::mixture;
    }
};

/// One sample per row, comma separated; a non-numeric first line is treated as a header.
Matrix load_samples_csv(const std::string& path);

/// i.i.d. draws, one per column (n × count).
Matrix sample(const DistributionSpec& spec, Eigen::Index count, Rng& rng);

struct EndpointPair {
    Vector x;
    Vector y;
};

/// N endpoint pairs stored column-wise: pair i is (x.col(i), y.col(i)).
struct PairSet {
    Matrix x;
    Matrix y;

    Eigen::Index size() const { return x.cols(); }
    EndpointPair pair(Eigen::Index i) const { return {x.col(i), y.col(i)}; }
};

/// Independent coupling Π = P0 ⊗ P1.
struct Coupling {
    DistributionSpec initial;
    DistributionSpec target;
};

PairSet draw_pairs(const Coupling& coupling, Eigen::Index count, Rng& rng);

}  // namespace bridgeflow

#endif  // BRIDGEFLOW_DISTRIBUTIONS_HPP
