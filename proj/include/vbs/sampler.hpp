#pragma once

// Classical stand-in for the sampling device: photon-number patterns are drawn
// from the exact, truncated output distribution and histogrammed on the
// vibrational-frequency axis.
//
// Random numbers: samples are processed in fixed chunks of kSampleChunk. Chunk
// c draws from a std::mt19937_64 seeded with splitmix64(seed + (c+1)·φ64),
// φ64 = 0x9E3779B97F4A7C15, and each sample consumes one 64-bit output turned
// into a uniform double by (x >> 11) · 2⁻⁵³. The sequence therefore depends
// only on (seed, n, distribution), not on the number of worker threads.

#include <cstdint>
#include <vector>

#include "vbs/doktorov.hpp"
#include "vbs/fcf.hpp"
#include "vbs/fock.hpp"
#include "vbs/spectrum.hpp"

namespace vbs {

inline constexpr std::size_t kSampleChunk = 4096;

struct TruncatedDistribution {
  std::vector<FockState> states;
  std::vector<double> probabilities;
  std::vector<double> cumulative;
  double captured_mass = 0.0;
  /// False when the cutoff was hit before 1 − epsilon of the mass was captured.
  bool target_reached = false;
};

/// Enumerates shells Σm = 0, 1, ... until captured_mass ≥ 1 − epsilon_trunc or
/// `cutoff` is reached. Does not throw on truncation; check target_reached.
TruncatedDistribution build_distribution(const DoktorovParameters& params, int cutoff, double epsilon_trunc,
                                         const FcfOptions& options = {});

struct SampleRun {
  std::uint64_t seed = 0;
  std::size_t n_samples = 0;
  std::vector<FockState> samples;
  /// Index of each sample in the distribution's state list.
  std::vector<std::size_t> state_indices;
  /// Histogram resolution requested for this run, 0 when unset.
  double bin_width = 0.0;
};

/// Inverse-CDF sampling from the renormalized truncated distribution.
/// Throws EmptyDistribution when there is no probability mass.
SampleRun draw_samples(const TruncatedDistribution& dist, std::size_t n, std::uint64_t seed, unsigned threads = 1);

/// Histogram over Σ ω'_k m_k; each sample adds 1/N (or 1 with `counts`).
BinnedSpectrum estimate_fcp(const SampleRun& run, const Vector& omega_final, double bin_width, bool counts = false);

/// Sticks of the distribution, renormalized to unit total when `renormalize`.
StickSpectrum distribution_sticks(const TruncatedDistribution& dist, const Vector& omega_final,
                                  bool renormalize = true);

/// ceil(Var(f) / ε²) with the bound Var(f) ≤ 1.
std::uint64_t required_samples(double epsilon_fcp);

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace vbs
