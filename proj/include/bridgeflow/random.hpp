#ifndef BRIDGEFLOW_RANDOM_HPP
#define BRIDGEFLOW_RANDOM_HPP

#include "bridgeflow/linalg.hpp"

#include <cstdint>
#include <random>

namespace bridgeflow {

using Rng = std::mt19937_64;

/// SplitMix64 finaliser applied to (seed, stream). Used to derive one independent generator per
/// path / purpose so results do not depend on how work is split across threads.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream) { return Rng(split_seed(seed, stream)); }

/// Named streams so independent consumers of one run seed never share a generator.
enum class Stream : std::uint64_t {
    pairs = 1,
    training = 2,
    init_params = 3,
    rollout_init = 4,
    rollout_paths = 5,
    reference = 6,
    metrics = 7,
    bridge = 8,
};

inline Rng make_rng(std::uint64_t seed, Stream stream) {
    return make_rng(seed, static_cast<std::uint64_t>(stream));
}

inline Vector standard_normal(Eigen::Index n, Rng& rng) {
    std::normal_distribution<double> normal;
    Vector z(n);
    for (Eigen::Index i = 0; i < n; ++i) z(i) = normal(rng);
    return z;
}

inline Matrix standard_normal(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    std::normal_distribution<double> normal;
    Matrix z(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) z(i, j) = normal(rng);
    return z;
}

}  // namespace bridgeflow

#endif  // BRIDGEFLOW_RANDOM_HPP
