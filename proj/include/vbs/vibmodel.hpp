#pragma once

// Two-electronic-state harmonic model: frequencies of both surfaces, the
// Duschinsky matrix relating their normal coordinates (q' = U q + d), and the
// displacement between equilibria.

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vbs/fock.hpp"

namespace vbs {

inline constexpr double kDefaultOrthogonalityTolerance = 5e-3;

/// Displacement already expressed in the dimensionless oscillator units of the
/// final state.
struct DimensionlessDisplacement {
  Vector delta;
};

/// Mass-weighted displacement d. `hbar` is ħ expressed in the units of
/// d² · cm⁻¹, so that δ_k = sqrt(ω'_k / ħ) · d_k is dimensionless.
struct MassWeightedDisplacement {
  Vector d;
  std::optional<double> hbar;
};

using Displacement = std::variant<DimensionlessDisplacement, MassWeightedDisplacement>;

struct ModelOptions {
  double orthogonality_tolerance = kDefaultOrthogonalityTolerance;
  /// Replace U by its nearest orthogonal matrix (polar factor) after validation.
  bool reorthogonalize = false;
};

class MolecularModel {
 public:
  /// Validates and stores a model. Throws Error with DimensionMismatch,
  /// NonPositiveFrequency or NotOrthogonal.
  MolecularModel(Vector omega_initial, Vector omega_final, Matrix duschinsky,
                 Displacement displacement, std::vector<std::string> block_labels = {},
                 const ModelOptions& options = {});

  std::size_t mode_count() const noexcept { return static_cast<std::size_t>(omega_initial_.size()); }
  const Vector& omega_initial() const noexcept { return omega_initial_; }
  const Vector& omega_final() const noexcept { return omega_final_; }
  const Matrix& duschinsky() const noexcept { return duschinsky_; }
  const Displacement& displacement() const noexcept { return displacement_; }
  const std::vector<std::string>& block_labels() const noexcept { return block_labels_; }

  /// ‖UᵀU − I‖_max of the stored U.
  double orthogonality_error() const;

 private:
  Vector omega_initial_;
  Vector omega_final_;
  Matrix duschinsky_;
  Displacement displacement_;
  std::vector<std::string> block_labels_;
};

struct SymmetryBlockSet {
  std::vector<MolecularModel> blocks;
  std::vector<std::string> labels;
  /// Parent-model mode indices of each block, ascending.
  std::vector<std::vector<std::size_t>> modes;
};

MolecularModel parse_molecule(const std::filesystem::path& path, const ModelOptions& options = {});
MolecularModel parse_molecule_json(std::string_view text, const ModelOptions& options = {});

/// JSON document in the molecule file format; doubles are written with
/// round-trip precision.
std::string serialize_molecule(const MolecularModel& model);

/// Dimensionless δ = ħ^(-1/2) diag(√ω') d, or the stored δ unchanged.
Vector delta_from_displacement(const MolecularModel& model);

/// ‖UᵀU − I‖_max.
double orthogonality_error(const Matrix& u);

/// Nearest orthogonal matrix in the Frobenius norm (polar factor of `u`).
Matrix nearest_orthogonal(const Matrix& u);

/// Splits `model` by a per-mode label assignment. Blocks appear in order of
/// first occurrence of their label. Throws NotBlockDiagonal when U couples
/// modes with different labels by more than `tolerance`.
SymmetryBlockSet split_blocks(const MolecularModel& model, std::span<const std::string> assignment,
                              double tolerance = kDefaultOrthogonalityTolerance);

/// Uses the model's own `block_labels`.
SymmetryBlockSet split_blocks(const MolecularModel& model,
                              double tolerance = kDefaultOrthogonalityTolerance);

}  // namespace vbs
