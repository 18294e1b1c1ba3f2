#pragma once

// Direct numerical overlap of harmonic-oscillator eigenfunctions, independent
// of the generating-function route.

#include <vector>

#include "vbs/fock.hpp"
#include "vbs/vibmodel.hpp"

namespace vbs {

inline constexpr int kDefaultQuadratureOrder = 80;

struct GaussHermiteRule {
  std::vector<double> nodes;    ///< ascending
  std::vector<double> weights;  ///< for weight function exp(-x²)
};

/// `order`-point Gauss-Hermite rule; exact for polynomials of degree < 2·order.
GaussHermiteRule gauss_hermite(int order);

/// <m;out|n;in> = ∫ Ψ'_m(U q + d) Ψ_n(q) dq in mass-weighted coordinates with
/// ħ = 1 and d = diag(ω')^(-1/2) δ. The Gaussian factor of the integrand is
/// absorbed into a shifted, Cholesky-scaled tensor-product rule, leaving a
/// polynomial that the rule integrates exactly. Throws DimensionTooLarge for
/// M > 2.
double quadrature_overlap(const MolecularModel& model, const FockState& n, const FockState& m,
                          int order = kDefaultQuadratureOrder);

}  // namespace vbs
