#pragma once

// Oracle-equivalence suite: the generating-function amplitudes are compared
// against direct quadrature and against permanents of the network matrix, and
// the compiled parameters are checked for their structural identities.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vbs/vibmodel.hpp"

namespace vbs {

enum class Oracle { Quadrature, Permanent, None };

struct VerifyOptions {
  Oracle oracle = Oracle::Quadrature;
  std::uint64_t seed = 42;
  /// Random models per oracle comparison.
  int oracle_models = 50;
  /// Random models for the structural checks (M = 1..6).
  int structural_models = 100;
  /// Highest total quanta per state in the oracle sweeps.
  int quadrature_max_quanta = 4;
  int permanent_max_quanta = 3;
  /// Negative control: perturb W so that it is no longer self-inverse.
  bool corrupt_w = false;
  /// Extra model (e.g. from the command line) included in the structural checks.
  std::optional<MolecularModel> model;
};

struct OracleCheck {
  std::string name;
  std::size_t comparisons = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed() const { return max_error <= tolerance; }
};

struct VerifyReport {
  std::vector<OracleCheck> checks;

  bool passed() const;
  std::string to_text() const;
};

VerifyReport run_oracle_suite(const VerifyOptions& options);

}  // namespace vbs
