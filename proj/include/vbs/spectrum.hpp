#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vbs/fcf.hpp"
#include "vbs/fock.hpp"

namespace vbs {

inline constexpr std::size_t kEnumerationGuard = 10'000'000;
/// Convolved sticks closer than this (cm⁻¹) are merged.
inline constexpr double kStickMergeTolerance = 1e-6;

struct Stick {
  double omega_vib;  ///< cm⁻¹
  double intensity;
  std::optional<FockState> state;
};

struct StickSpectrum {
  std::vector<Stick> sticks;

  double total_intensity() const;
};

/// Values on the uniform grid origin + i·bin_width. For histograms, entry i
/// covers [origin + i·Δ, origin + (i+1)·Δ).
struct BinnedSpectrum {
  double bin_width = 1.0;
  double origin = 0.0;
  std::vector<double> values;

  double bin_left(std::size_t i) const { return origin + static_cast<double>(i) * bin_width; }
  double total() const;
};

/// Sampling grid for broadened spectra.
struct SpectrumGrid {
  double origin = 0.0;
  double spacing = 1.0;
  std::size_t points = 0;
};

enum class LineShape { Lorentzian, Gaussian };

StickSpectrum sticks_from_fcp(const FcpResult& fcp, const Vector& omega_final);

/// Stick at ω lands in bin floor(ω / Δ); the result has max(min_bins,
/// highest occupied bin + 1) bins starting at 0.
BinnedSpectrum bin_sticks(const StickSpectrum& sticks, double bin_width, std::size_t min_bins = 0);

/// Every occupation vector with Σ m_k ω'_k in [lo, hi) and Σ m_k ≤
/// max_quanta, in lexicographic order. Throws ExplosionGuard when more than
/// `guard` states qualify.
std::vector<FockState> enumerate_bin_states(const Vector& omega_final, double lo, double hi, int max_quanta,
                                            std::size_t guard = kEnumerationGuard);

/// Spectrum of the product distribution of two independent blocks, sorted by
/// frequency. Sticks within 1e-6 cm⁻¹ are merged (the merged stick keeps the
/// lowest frequency and drops its state); merged sticks below `prob_floor`
/// are removed. Unmerged sticks carry the concatenated states of a and b.
StickSpectrum convolve_blocks(const StickSpectrum& a, const StickSpectrum& b, double prob_floor);

/// Σ_s I_s L(x − ω_s) sampled at the grid points. Lorentzian
/// L(x) = γ / (π (x² + γ²)); Gaussian with the same half width at half maximum.
BinnedSpectrum broaden(const StickSpectrum& sticks, LineShape shape, double hwhm, const SpectrumGrid& grid);

}  // namespace vbs
