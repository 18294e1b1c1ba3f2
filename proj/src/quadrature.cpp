#include "vbs/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "vbs/error.hpp"

namespace vbs {

namespace {

// Orthonormal Hermite polynomials p_k(x) = H_k(x) / sqrt(2^k k!), k = 0..max.
void hermite_polynomials(double x, int max, std::vector<double>& out) {
  out.assign(max + 1, 0.0);
  out[0] = 1.0;
  if (max >= 1) out[1] = std::sqrt(2.0) * x;
  for (int k = 1; k < max; ++k) {
    out[k + 1] = std::sqrt(2.0 / (k + 1)) * x * out[k] - std::sqrt(static_cast<double>(k) / (k + 1)) * out[k - 1];
  }
}

}  // namespace

GaussHermiteRule gauss_hermite(int order) {
  if (order < 1) throw Error(Errc::InvalidArgument, "quadrature order must be positive");
  constexpr double kPiM4 = 0.7511255444649425;  // π^(-1/4)
  constexpr int kMaxIterations = 100;
  const int n = order;
  std::vector<double> x(n), w(n);
  double z = 0.0;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Initial guesses for the largest roots, then extrapolation from the
    // previously converged ones.
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1) - 1.85575 * std::pow(2.0 * n + 1, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * x[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * x[1];
    } else {
      z = 2.0 * z - x[i - 2];
    }
    double pp = 0.0;
    for (int it = 0; it < kMaxIterations; ++it) {
      double p1 = kPiM4, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    x[i] = z;
    x[n - 1 - i] = -z;
    w[i] = 2.0 / (pp * pp);
    w[n - 1 - i] = w[i];
  }
  GaussHermiteRule rule;
  rule.nodes.assign(x.rbegin(), x.rend());
  rule.weights.assign(w.rbegin(), w.rend());
  return rule;
}

double quadrature_overlap(const MolecularModel& model, const FockState& n, const FockState& m, int order) {
  const std::size_t modes = model.mode_count();
  if (modes > 2) {
    throw Error(Errc::DimensionTooLarge, "quadrature oracle supports at most 2 modes, model has " +
                                             std::to_string(modes));
  }
  if (n.modes() != modes || m.modes() != modes) {
    throw Error(Errc::DimensionMismatch, "Fock states do not match the model's mode count");
  }
  const auto dim = static_cast<Eigen::Index>(modes);
  const Vector& wi = model.omega_initial();
  const Vector& wf = model.omega_final();
  const Matrix& u = model.duschinsky();
  const Vector d = delta_from_displacement(model).cwiseQuotient(wf.cwiseSqrt());

  // Ψ_n(q) Ψ'_m(Uq + d) = poly(q) · exp(-½ qᵀAq - bᵀq - c)
  const Matrix a = Matrix(wi.asDiagonal()) + u.transpose() * wf.asDiagonal() * u;
  const Vector b = u.transpose() * (wf.cwiseProduct(d));
  const double c = 0.5 * d.dot(wf.cwiseProduct(d));
  Eigen::LLT<Matrix> llt(a);
  const Matrix lower = llt.matrixL();
  const Vector a_inv_b = llt.solve(b);
  const Vector center = -a_inv_b;
  // q = center + √2 L⁻ᵀ y maps the Gaussian onto exp(-|y|²).
  const Matrix map = std::sqrt(2.0) * lower.transpose().triangularView<Eigen::Upper>().solve(Matrix::Identity(dim, dim));

  double log_scale = 0.5 * b.dot(a_inv_b) - c;
  log_scale += 0.5 * static_cast<double>(modes) * std::log(2.0) - std::log(lower.diagonal().prod());
  log_scale += 0.25 * (wi.array().log().sum() + wf.array().log().sum());
  log_scale -= 0.5 * static_cast<double>(modes) * std::log(std::numbers::pi);

  const GaussHermiteRule rule = gauss_hermite(order);
  const int points = order;
  const int max_n = n.max_occupation();
  const int max_m = m.max_occupation();

  std::vector<int> idx(modes, 0);
  std::vector<double> hn, hm;
  Vector y(dim);
  double sum = 0.0;
  const long long total_points = modes == 1 ? points : static_cast<long long>(points) * points;
  for (long long flat = 0; flat < total_points; ++flat) {
    long long rem = flat;
    double weight = 1.0;
    for (Eigen::Index k = 0; k < dim; ++k) {
      const int node = static_cast<int>(rem % points);
      rem /= points;
      y[k] = rule.nodes[node];
      weight *= rule.weights[node];
    }
    const Vector q = center + map * y;
    const Vector qf = u * q + d;
    double poly = 1.0;
    for (Eigen::Index k = 0; k < dim; ++k) {
      hermite_polynomials(std::sqrt(wi[k]) * q[k], max_n, hn);
      hermite_polynomials(std::sqrt(wf[k]) * qf[k], max_m, hm);
      poly *= hn[n[k]] * hm[m[k]];
    }
    sum += weight * poly;
  }
  return std::exp(log_scale) * sum;
}

}  // namespace vbs
