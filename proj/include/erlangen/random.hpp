#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace erlangen {

using Rng = std::mt19937_64;

/// Seed-splitting rule: per-trial seeds are splitmix64(seed ^ mix(index)).
/// Any caller that needs an independent stream for trial `index` of a run
/// seeded with `seed` uses this, so runs are reproducible trial by trial.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

double uniform(Rng& rng, double lo, double hi);
/// Log-uniform on [lo, hi].
double log_uniform(Rng& rng, double lo, double hi);
double gaussian(Rng& rng);
/// Fair coin.
bool coin(Rng& rng);

/// Haar-distributed orthogonal matrix. With `allow_reflection` the
/// determinant is -1 with probability 1/2, otherwise it is +1.
Eigen::MatrixXd random_orthogonal(Rng& rng, int n, bool allow_reflection);

/// Element of O(p, q) for the form diag(+1 x p, -1 x q): a KAK product
/// K1 * exp(boosts) * K2 with K in O(p) x O(q) and min(p, q) commuting boosts
/// whose rapidities are log of a log-uniform factor in [1/4, 4].
Eigen::MatrixXd random_indefinite_orthogonal(Rng& rng, int p, int q);

}  // namespace erlangen
