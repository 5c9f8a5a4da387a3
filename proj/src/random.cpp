#include "erlangen/random.hpp"

#include <algorithm>
#include <cmath>

namespace erlangen {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

// The distributions are written out rather than taken from <random> so the
// streams are identical across standard library implementations.

double uniform(Rng& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double log_uniform(Rng& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

double gaussian(Rng& rng) {
  // Box-Muller; u1 is kept away from zero.
  const double u1 = uniform(rng, 0x1.0p-53, 1.0);
  const double u2 = uniform(rng, 0.0, 1.0);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

bool coin(Rng& rng) { return (rng() >> 63) != 0; }

Eigen::MatrixXd random_orthogonal(Rng& rng, int n, bool allow_reflection) {
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = gaussian(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Sign fix makes the distribution Haar.
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0) q.col(j) *= -1.0;
  }
  const double det = q.determinant();
  const bool want_reflection = allow_reflection && coin(rng);
  if ((det < 0) != want_reflection) q.col(0) *= -1.0;
  return q;
}

Eigen::MatrixXd random_indefinite_orthogonal(Rng& rng, int p, int q) {
  const int n = p + q;
  auto block = [&]() {
    Eigen::MatrixXd k = Eigen::MatrixXd::Identity(n, n);
    k.topLeftCorner(p, p) = random_orthogonal(rng, p, true);
    k.bottomRightCorner(q, q) = random_orthogonal(rng, q, true);
    return k;
  };
  const Eigen::MatrixXd k1 = block();
  Eigen::MatrixXd boost = Eigen::MatrixXd::Identity(n, n);
  for (int j = 0; j < std::min(p, q); ++j) {
    const double rapidity = std::log(log_uniform(rng, 0.25, 4.0));
    const int a = p - 1 - j;
    const int b = p + j;
    boost(a, a) = std::cosh(rapidity);
    boost(b, b) = std::cosh(rapidity);
    boost(a, b) = std::sinh(rapidity);
    boost(b, a) = std::sinh(rapidity);
  }
  const Eigen::MatrixXd k2 = block();
  return k1 * boost * k2;
}

}  // namespace erlangen
