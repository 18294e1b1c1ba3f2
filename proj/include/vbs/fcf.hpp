#pragma once

// Franck-Condon amplitudes <m;out|n;in> from the Gaussian generating function
//
//   <0;out|0;in> exp(-½ xᵀ W x + rᵀ x),   x = (α, γ*),
//
// whose normalized Taylor coefficients are multivariate Hermite polynomials at
// the origin. Coefficients are built one quantum at a time with
//
//   c(k + e_i) = [ r_i c(k) − Σ_j W_ij √k_j c(k − e_j) ] / √(k_i + 1),
//
// where c(k) = ∂^k G(0) / √(k!).

#include <cstdint>
#include <vector>

#include "vbs/doktorov.hpp"
#include "vbs/fock.hpp"

namespace vbs {

struct GeneratingFunction {
  Matrix w_matrix;   ///< 2M x 2M, self-inverse
  Vector r_vector;   ///< 2M
  double prefactor;  ///< vacuum overlap <0;out|0;in>

  std::size_t mode_count() const noexcept { return static_cast<std::size_t>(r_vector.size() / 2); }
};

GeneratingFunction generating_function(const DoktorovParameters& params);

struct FcfOptions {
  int max_quanta_per_mode = 12;
  int max_total_quanta = 16;
  /// Worker threads for shell evaluation; results do not depend on it.
  unsigned threads = 1;
};

/// <m;out|n;in>. Throws QuantaLimitExceeded when an occupation exceeds
/// `options.max_quanta_per_mode`.
double fc_amplitude(const GeneratingFunction& gf, const FockState& n, const FockState& m,
                    const FcfOptions& options = {});

/// Amplitudes <m;out|0;in> for successive total-quanta shells Σm = 0, 1, 2, ...
/// Each shell holds its states in ShellIndex rank order.
class VacuumShellRecursion {
 public:
  VacuumShellRecursion(const GeneratingFunction& gf, int max_shell, unsigned threads = 1);

  /// Shell currently held; 0 right after construction.
  int shell() const noexcept { return shell_; }
  int max_shell() const noexcept { return max_shell_; }
  const std::vector<FockState>& states() const noexcept { return states_; }
  /// Physical amplitudes (prefactor included), parallel to states().
  const std::vector<double>& amplitudes() const noexcept { return amplitudes_; }

  /// Advances to the next shell. Returns false once `max_shell` is held.
  bool advance();

 private:
  Matrix w_;  // γ*γ* block of W
  Vector r_;  // γ* part of r
  double prefactor_;
  int max_shell_;
  unsigned threads_;
  ShellIndex index_;
  int shell_ = 0;
  std::vector<FockState> states_;
  std::vector<double> amplitudes_;
  // normalized coefficients of shells shell_ - 1 and shell_
  std::vector<double> coeff_prev_;
  std::vector<double> coeff_cur_;
};

struct FcfEntry {
  FockState state;
  double fcf;
};

struct FcpResult {
  /// Entries with FCF ≥ prob_floor, by shell, then ShellIndex order.
  std::vector<FcfEntry> entries;
  /// Σ FCF over every enumerated state, floor or not.
  double captured_probability = 0.0;
  int cutoff = 0;
};

/// 0 K Franck-Condon profile: all final states with Σm ≤ cutoff from the
/// initial vacuum. Throws QuantaLimitExceeded when cutoff exceeds
/// `options.max_total_quanta`.
FcpResult fcp_exact(const DoktorovParameters& params, int cutoff, double prob_floor,
                    const FcfOptions& options = {});

struct HermiteTermCounts {
  std::uint64_t kan_terms;
  std::uint64_t wick_terms;
};

/// Term counts of the collective-variable moment algorithm,
/// (1 + [S/2]) Π (n_k+1)(m_k+1), and of the plain Wick expansion, (S-1)!!,
/// with S = Σ (n_k + m_k) and [x] rounded half away from zero.
HermiteTermCounts estimate_hermite_terms(const FockState& n, const FockState& m);

}  // namespace vbs
