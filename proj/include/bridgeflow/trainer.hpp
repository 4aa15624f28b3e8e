#ifndef BRIDGEFLOW_TRAINER_HPP
#define BRIDGEFLOW_TRAINER_HPP

#include "bridgeflow/bridges.hpp"
#include "bridgeflow/distributions.hpp"
#include "bridgeflow/mlp.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace bridgeflow {

struct TrainConfig {
    long iterations = 10000;
    Eigen::Index dataset_size = 2000;
    Eigen::Index batch_size = 64;
    double lr0 = 1e-2;
    double decay = 0.999;  ///< lr_k = lr0 · decay^k
    Eigen::Index width = 32;
    Eigen::Index blocks = 3;
    std::uint64_t seed = 0;

    void validate() const;
};

struct TrainResult {
    Mlp net;
    std::vector<double> loss_trace;  ///< one entry per iteration
    PairSet pairs;                   ///< the frozen endpoint pairs z^i
};

class TrainingError : public std::runtime_error {
public:
    TrainingError(const std::string& what, std::vector<double> trace)
        : std::runtime_error(what), trace_(std::move(trace)) {}
    const std::vector<double>& trace() const noexcept { return trace_; }

private:
    std::vector<double> trace_;
};

/// Least-squares regression of the bridge controls u^{z}_t on (t, X^{z}_t).
/// Each iteration draws batch_size pair indices with replacement, a fresh t ~ U[0, 1−δ] and fresh
/// bridge noise per row, then takes one ADAM step with lr0·decay^iter.
TrainResult train(const BridgeKernel& kernel, const PairSet& pairs, const TrainConfig& config);

/// Draws the N frozen pairs from the coupling first (seeded), then trains.
TrainResult train(const BridgeKernel& kernel, const Coupling& coupling, const TrainConfig& config);

/// Trailing moving average of the loss trace (window clipped at the start).
std::vector<double> moving_average(const std::vector<double>& values, std::size_t window);

}  // namespace bridgeflow

#endif  // BRIDGEFLOW_TRAINER_HPP
