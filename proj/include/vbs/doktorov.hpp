#pragma once

// Doktorov decomposition of the Duschinsky relation and its compilation into a
// boson-sampling apparatus: squeezed coherent input states followed by a
// linear network.

#include <string>

#include "vbs/fock.hpp"
#include "vbs/vibmodel.hpp"

namespace vbs {

/// J beyond this condition number is treated as singular.
inline constexpr double kMaxConditionNumber = 1e12;

struct DoktorovParameters {
  Matrix j_matrix;  ///< J = Ω' U Ω⁻¹, Ω = diag(√ω)
  Vector delta;     ///< dimensionless displacement
  Matrix q_matrix;  ///< Q = (I + JᵀJ)⁻¹
  Matrix p_matrix;  ///< P = J Q Jᵀ
  Matrix r_matrix;  ///< R = Q Jᵀ
  Matrix w_matrix;  ///< 2M x 2M, [[I-2Q, -2R], [-2Rᵀ, I-2P]]
  Vector r_vector;  ///< √2 (-Rδ, (I-P)δ)
  double vacuum_overlap = 0.0;  ///< <0;out|0;in>

  std::size_t mode_count() const noexcept { return static_cast<std::size_t>(j_matrix.rows()); }
};

/// Optical-apparatus description: J = C_L diag(sigma) C_Rᵀ; the input modes
/// carry coherent amplitudes `input_coherent` and are squeezed by ln(sigma)
/// before entering the network C_L.
struct CircuitSpec {
  Matrix rotation_left;
  Vector sigma;
  Matrix rotation_right;
  Vector log_squeezing;
  Vector input_coherent;

  std::size_t mode_count() const noexcept { return static_cast<std::size_t>(sigma.size()); }
};

/// Throws SingularJ (cond(J) > 1e12) or InconsistentUnits (d without ħ).
DoktorovParameters build_doktorov(const MolecularModel& model);

/// Singular values descending; each C_L column is signed so that its
/// largest-magnitude entry is positive, with the paired C_R column flipped
/// alongside.
CircuitSpec compile_circuit(const DoktorovParameters& params);

/// Plain-text listing of per-mode state preparation and the network C_L.
std::string apparatus_report(const CircuitSpec& spec);

/// JSON object with the CircuitSpec fields; matrices are arrays of rows.
std::string circuit_to_json(const CircuitSpec& spec);

/// Condition number σ_max / σ_min (infinity when singular).
double condition_number(const Matrix& a);

}  // namespace vbs
