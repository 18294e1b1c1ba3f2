#pragma once

// Seeded generators for test and verification models. All draws go through
// std::mt19937_64 with hand-rolled uniform/normal transforms so the generated
// models are identical on every standard library.

#include <cstdint>
#include <random>

#include "vbs/fock.hpp"
#include "vbs/vibmodel.hpp"

namespace vbs {

struct RandomModelSpec {
  std::size_t modes = 2;
  double base_frequency = 1000.0;
  /// ln ω and ln ω' are drawn uniformly in [0, log_frequency_spread] above
  /// ln base_frequency, which keeps every singular value of J within
  /// exp(±log_frequency_spread).
  double log_frequency_spread = 0.3;
  /// δ_k uniform in [-delta_max, delta_max].
  double delta_max = 1.5;
  /// ω = ω' = base_frequency for every mode.
  bool equal_frequencies = false;
};

double uniform01(std::mt19937_64& rng);
double standard_normal(std::mt19937_64& rng);

/// Haar-distributed orthogonal matrix (QR of a Gaussian matrix, signs fixed).
Matrix random_orthogonal(std::mt19937_64& rng, std::size_t n);

MolecularModel random_model(std::mt19937_64& rng, const RandomModelSpec& spec);

/// Random permutation of 0..n-1 (Fisher-Yates).
std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n);

}  // namespace vbs
