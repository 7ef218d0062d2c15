#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

namespace wbpdn {

// Seed-splitting mix (splitmix64). Used to derive independent per-cell /
// per-trial streams from one base seed so results are schedule-independent.
std::uint64_t splitmix64(std::uint64_t x);

// Documented splitting rule: stream(base, a, b) = sm(sm(base ^ sm(a+1)) ^ sm(b+1)).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b);

// Deterministic random stream. mt19937_64 is bit-exactly specified by the
// standard; the transforms below avoid std::*_distribution so the produced
// doubles are identical across standard-library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (no cached second value).
  double normal();

  /// Uniform integer in [0, bound).
  int below(int bound);

  /// `count` distinct indices drawn uniformly from `pool`, returned ascending.
  std::vector<int> sample(std::vector<int> pool, int count);

  Eigen::VectorXd normal_vector(int n);
  Eigen::MatrixXd normal_matrix(int rows, int cols, double stddev);

private:
  std::mt19937_64 engine_;
};

} // namespace wbpdn
