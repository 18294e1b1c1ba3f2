#include "vbs/random_models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace vbs {

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double standard_normal(std::mt19937_64& rng) {
  // Box-Muller; 1 - u keeps the logarithm finite.
  const double u1 = 1.0 - uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Matrix random_orthogonal(std::mt19937_64& rng, std::size_t n) {
  const auto dim = static_cast<Eigen::Index>(n);
  Matrix g(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) g(i, j) = standard_normal(rng);
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  return q;
}

MolecularModel random_model(std::mt19937_64& rng, const RandomModelSpec& spec) {
  const auto dim = static_cast<Eigen::Index>(spec.modes);
  Vector wi(dim), wf(dim), delta(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    if (spec.equal_frequencies) {
      wi[k] = wf[k] = spec.base_frequency;
    } else {
      wi[k] = spec.base_frequency * std::exp(spec.log_frequency_spread * uniform01(rng));
      wf[k] = spec.base_frequency * std::exp(spec.log_frequency_spread * uniform01(rng));
    }
  }
  for (Eigen::Index k = 0; k < dim; ++k) delta[k] = spec.delta_max * (2.0 * uniform01(rng) - 1.0);
  Matrix u = random_orthogonal(rng, spec.modes);
  return MolecularModel(std::move(wi), std::move(wf), std::move(u), DimensionlessDisplacement{std::move(delta)});
}

std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(i));
    std::swap(p[i - 1], p[std::min(j, i - 1)]);
  }
  return p;
}

}  // namespace vbs
