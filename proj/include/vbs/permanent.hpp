#pragma once

#include <complex>

#include "vbs/fock.hpp"

namespace vbs {

using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr int kMaxPermanentSize = 20;

/// Permanent by Ryser's inclusion-exclusion formula with Gray-code subset
/// updates, O(2^n n). Throws SizeLimitExceeded above 20x20.
double ryser_permanent(const Matrix& a);
std::complex<double> ryser_permanent(const ComplexMatrix& a);

/// N x N matrix with column k of `u` repeated n_k times and the rows of the
/// result taken as row l repeated m_l times.
ComplexMatrix transition_submatrix(const ComplexMatrix& u, const FockState& n, const FockState& m);

/// <m;out|n;in> for a linear network `u`:
/// conj(Per([U]_{n,m})) / sqrt(Π n_k! m_k!). Throws PhotonNumberMismatch when
/// Σn ≠ Σm, SizeLimitExceeded when N > 20.
std::complex<double> rotation_amplitude(const ComplexMatrix& u, const FockState& n, const FockState& m);

}  // namespace vbs
