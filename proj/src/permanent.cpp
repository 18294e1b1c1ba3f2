#include "vbs/permanent.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "numeric.hpp"
#include "vbs/error.hpp"

namespace vbs {

namespace {

template <typename Scalar>
Scalar ryser(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
  if (a.rows() != a.cols()) throw Error(Errc::DimensionMismatch, "permanent needs a square matrix");
  const auto n = static_cast<int>(a.rows());
  if (n > kMaxPermanentSize) {
    throw Error(Errc::SizeLimitExceeded, "permanent of a " + std::to_string(n) + "x" + std::to_string(n) +
                                             " matrix exceeds the 20x20 limit");
  }
  if (n == 0) return Scalar(1);

  // row_sums[i] = Σ_{j∈S} a(i,j) for the current Gray-code subset S.
  std::vector<Scalar> row_sums(n, Scalar(0));
  Scalar total(0);
  std::uint32_t gray = 0;
  const std::uint32_t subsets = std::uint32_t{1} << n;
  for (std::uint32_t k = 1; k < subsets; ++k) {
    const int j = std::countr_zero(k);
    const std::uint32_t bit = std::uint32_t{1} << j;
    gray ^= bit;
    const double sign_change = (gray & bit) ? 1.0 : -1.0;
    Scalar prod(1);
    for (int i = 0; i < n; ++i) {
      row_sums[i] += sign_change * a(i, j);
      prod *= row_sums[i];
    }
    // (-1)^{|S|}
    if (std::popcount(gray) & 1) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  return (n & 1) ? -total : total;
}

}  // namespace

double ryser_permanent(const Matrix& a) { return ryser(a); }

std::complex<double> ryser_permanent(const ComplexMatrix& a) { return ryser(a); }

ComplexMatrix transition_submatrix(const ComplexMatrix& u, const FockState& n, const FockState& m) {
  if (static_cast<std::size_t>(u.cols()) != n.modes() || static_cast<std::size_t>(u.rows()) != m.modes()) {
    throw Error(Errc::DimensionMismatch, "Fock states do not match the network size");
  }
  const int total = n.total_quanta();
  std::vector<Eigen::Index> cols, rows;
  for (std::size_t k = 0; k < n.modes(); ++k) cols.insert(cols.end(), n[k], static_cast<Eigen::Index>(k));
  for (std::size_t l = 0; l < m.modes(); ++l) rows.insert(rows.end(), m[l], static_cast<Eigen::Index>(l));
  ComplexMatrix sub(total, total);
  for (int i = 0; i < total; ++i) {
    for (int j = 0; j < total; ++j) sub(i, j) = u(rows[i], cols[j]);
  }
  return sub;
}

std::complex<double> rotation_amplitude(const ComplexMatrix& u, const FockState& n, const FockState& m) {
  if (n.total_quanta() != m.total_quanta()) {
    throw Error(Errc::PhotonNumberMismatch, "input carries " + std::to_string(n.total_quanta()) +
                                                " photons, output " + std::to_string(m.total_quanta()));
  }
  if (n.total_quanta() > kMaxPermanentSize) {
    throw Error(Errc::SizeLimitExceeded, "photon number exceeds 20");
  }
  double log_norm = 0.0;
  for (std::size_t k = 0; k < n.modes(); ++k) log_norm += detail::log_factorial(n[k]);
  for (std::size_t l = 0; l < m.modes(); ++l) log_norm += detail::log_factorial(m[l]);
  return std::conj(ryser_permanent(transition_submatrix(u, n, m))) * std::exp(-0.5 * log_norm);
}

}  // namespace vbs
