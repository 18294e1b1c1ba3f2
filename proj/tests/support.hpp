#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "vbs/fock.hpp"
#include "vbs/vibmodel.hpp"

namespace vbs::testing {

inline std::string data_path(const std::string& name) { return std::string(VBS_DATA_DIR) + "/" + name; }

inline MolecularModel formic_acid() { return parse_molecule(data_path("formic_acid_a1.json")); }

struct ReferenceFcf {
  FockState state;
  double fcf;
};

// Published Franck-Condon factors (>= 0.01) of the formic acid a' block.
inline std::vector<ReferenceFcf> formic_reference_fcfs() {
  return {
      {{0, 0, 0, 0, 0, 0, 0}, 0.2152}, {{0, 0, 1, 0, 0, 0, 0}, 0.2717}, {{0, 0, 2, 0, 0, 0, 0}, 0.1649},
      {{0, 0, 3, 0, 0, 0, 0}, 0.0640}, {{0, 0, 4, 0, 0, 0, 0}, 0.0178}, {{0, 0, 1, 1, 0, 0, 0}, 0.0211},
      {{0, 0, 1, 0, 1, 0, 0}, 0.0281}, {{0, 0, 1, 0, 0, 1, 0}, 0.0145}, {{0, 0, 2, 0, 1, 0, 0}, 0.0237},
      {{0, 0, 3, 0, 1, 0, 0}, 0.0123}, {{0, 0, 0, 1, 0, 0, 0}, 0.0242}, {{0, 0, 0, 0, 1, 0, 0}, 0.0153},
      {{0, 0, 0, 0, 0, 1, 0}, 0.0112},
  };
}

inline std::vector<double> formic_reference_log_squeezing() { return {0.10, 0.07, 0.02, -0.06, -0.08, -0.11, -0.19}; }

inline std::vector<double> formic_reference_sigma() {
  return {1.1020, 1.0728, 1.0214, 0.9420, 0.9276, 0.8941, 0.8296};
}

inline Matrix formic_reference_left() {
  Matrix m(7, 7);
  m << -0.0786, 0.6624, -0.1910, 0.0194, -0.7022, 0.1170, 0.1069,  //
      0.1918, -0.1188, -0.8128, -0.5265, 0.0841, 0.0637, 0.0039,   //
      0.6084, 0.0851, -0.1492, 0.3436, -0.0404, -0.6888, 0.0792,   //
      0.6373, -0.0386, 0.4649, -0.4920, -0.2417, 0.2050, -0.1839,  //
      0.3455, 0.2308, -0.1980, 0.4883, 0.2781, 0.5577, -0.4017,    //
      -0.0348, -0.6595, -0.1588, 0.2914, -0.6007, 0.0687, -0.2968, //
      -0.2454, 0.2240, 0.0069, -0.1973, 0.0396, -0.3874, -0.8361;
  return m;
}

inline Matrix formic_reference_right() {
  Matrix m(7, 7);
  m << -0.0691, 0.5634, -0.1635, 0.0188, -0.7859, 0.1322, 0.1248,  //
      0.1446, -0.0943, -0.7600, -0.6104, 0.0841, 0.1129, 0.0120,   //
      0.1759, 0.0478, -0.2556, 0.1972, -0.0150, -0.8645, 0.3390,   //
      0.0237, 0.0326, -0.5446, 0.7256, 0.1295, 0.1946, -0.3474,    //
      -0.6311, 0.3592, -0.1218, 0.0398, 0.4392, 0.1241, 0.4979,    //
      0.6132, 0.6591, 0.1373, -0.0571, 0.3982, 0.0877, -0.0333,    //
      0.4104, -0.3268, -0.0111, 0.2383, -0.0825, 0.4017, 0.7069;
  return m;
}

/// Largest entry-wise difference after flipping each column pair (left, right)
/// jointly so that the computed left column best matches the reference.
inline double paired_column_error(const Matrix& left, const Matrix& right, const Matrix& ref_left,
                                  const Matrix& ref_right) {
  double worst = 0.0;
  for (Eigen::Index c = 0; c < left.cols(); ++c) {
    const double sign = left.col(c).dot(ref_left.col(c)) >= 0.0 ? 1.0 : -1.0;
    worst = std::max(worst, (sign * left.col(c) - ref_left.col(c)).cwiseAbs().maxCoeff());
    worst = std::max(worst, (sign * right.col(c) - ref_right.col(c)).cwiseAbs().maxCoeff());
  }
  return worst;
}

inline MolecularModel identity_model(std::size_t modes, double omega = 1000.0) {
  const auto m = static_cast<Eigen::Index>(modes);
  return MolecularModel(Vector::Constant(m, omega), Vector::Constant(m, omega), Matrix::Identity(m, m),
                        DimensionlessDisplacement{Vector::Zero(m)});
}

inline MolecularModel single_mode(double omega, double omega_final, double delta) {
  return MolecularModel(Vector::Constant(1, omega), Vector::Constant(1, omega_final), Matrix::Identity(1, 1),
                        DimensionlessDisplacement{Vector::Constant(1, delta)});
}

/// All occupation vectors with total quanta <= max_total.
inline std::vector<FockState> states_up_to(std::size_t modes, int max_total) {
  ShellIndex index(modes, max_total);
  std::vector<FockState> out;
  for (int s = 0; s <= max_total; ++s) {
    auto shell = index.enumerate(s);
    out.insert(out.end(), shell.begin(), shell.end());
  }
  return out;
}

}  // namespace vbs::testing
