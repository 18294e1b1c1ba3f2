#include "vbs/doktorov.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "vbs/error.hpp"

namespace vbs {

namespace {

constexpr double kReportZero = 1e-12;

std::string format(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

nlohmann::json matrix_json(const Matrix& a) {
  auto rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json vector_json(const Vector& v) {
  auto a = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

}  // namespace

double condition_number(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 1.0;
  const double smin = s[s.size() - 1];
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return s[0] / smin;
}

DoktorovParameters build_doktorov(const MolecularModel& model) {
  const auto m = static_cast<Eigen::Index>(model.mode_count());
  const Vector& wi = model.omega_initial();
  const Vector& wf = model.omega_final();

  DoktorovParameters p;
  // One rounding per entry: J_ij = U_ij sqrt(ω'_i / ω_j).
  p.j_matrix.resize(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index i = 0; i < m; ++i) p.j_matrix(i, j) = model.duschinsky()(i, j) * std::sqrt(wf[i] / wi[j]);
  }
  const double cond = condition_number(p.j_matrix);
  if (!(cond <= kMaxConditionNumber)) {
    throw Error(Errc::SingularJ, "condition number of J is " + std::to_string(cond));
  }
  p.delta = delta_from_displacement(model);

  const Matrix id = Matrix::Identity(m, m);
  const Matrix jt = p.j_matrix.transpose();
  // I + JᵀJ is symmetric positive definite.
  Eigen::LDLT<Matrix> ldlt(id + jt * p.j_matrix);
  p.q_matrix = ldlt.solve(id);
  p.q_matrix = 0.5 * (p.q_matrix + p.q_matrix.transpose());
  p.p_matrix = p.j_matrix * p.q_matrix * jt;
  p.r_matrix = p.q_matrix * jt;

  p.w_matrix.resize(2 * m, 2 * m);
  p.w_matrix.topLeftCorner(m, m) = id - 2.0 * p.q_matrix;
  p.w_matrix.topRightCorner(m, m) = -2.0 * p.r_matrix;
  p.w_matrix.bottomLeftCorner(m, m) = -2.0 * p.r_matrix.transpose();
  p.w_matrix.bottomRightCorner(m, m) = id - 2.0 * p.p_matrix;

  const Vector i_minus_p_delta = (id - p.p_matrix) * p.delta;
  p.r_vector.resize(2 * m);
  p.r_vector.head(m) = -std::sqrt(2.0) * (p.r_matrix * p.delta);
  p.r_vector.tail(m) = std::sqrt(2.0) * i_minus_p_delta;

  // Mode count is the block's M.
  const double det_r = std::abs(p.r_matrix.partialPivLu().determinant());
  p.vacuum_overlap = std::pow(2.0, 0.5 * static_cast<double>(m)) * std::sqrt(det_r) *
                     std::exp(-0.5 * p.delta.dot(i_minus_p_delta));
  return p;
}

CircuitSpec compile_circuit(const DoktorovParameters& params) {
  const Matrix& j = params.j_matrix;
  const double cond = condition_number(j);
  if (!(cond <= kMaxConditionNumber)) {
    throw Error(Errc::SingularJ, "condition number of J is " + std::to_string(cond));
  }
  Eigen::JacobiSVD<Matrix> svd(j, Eigen::ComputeFullU | Eigen::ComputeFullV);

  CircuitSpec spec;
  spec.rotation_left = svd.matrixU();
  spec.sigma = svd.singularValues();
  spec.rotation_right = svd.matrixV();
  for (Eigen::Index c = 0; c < spec.rotation_left.cols(); ++c) {
    Eigen::Index pivot = 0;
    spec.rotation_left.col(c).cwiseAbs().maxCoeff(&pivot);
    if (spec.rotation_left(pivot, c) < 0.0) {
      spec.rotation_left.col(c) *= -1.0;
      spec.rotation_right.col(c) *= -1.0;
    }
  }
  spec.log_squeezing = spec.sigma.unaryExpr([](double s) { return std::log(s); });
  const Vector j_inv_delta = j.partialPivLu().solve(params.delta);
  spec.input_coherent = spec.rotation_right.transpose() * j_inv_delta / std::sqrt(2.0);
  return spec;
}

std::string apparatus_report(const CircuitSpec& spec) {
  const auto m = static_cast<Eigen::Index>(spec.mode_count());
  std::string out;
  out += "Boson-sampling apparatus: " + std::to_string(m) + " modes\n\n";
  out += "State preparation (displace, then squeeze, then network C_L)\n";
  out += "  mode      ln_sigma   coherent_amp  input state\n";
  for (Eigen::Index k = 0; k < m; ++k) {
    const bool squeezed = std::abs(spec.log_squeezing[k]) > kReportZero;
    const bool displaced = std::abs(spec.input_coherent[k]) > kReportZero;
    const char* label = squeezed && displaced ? "squeezed coherent state"
                        : squeezed            ? "squeezed vacuum"
                        : displaced           ? "coherent state, no squeezing"
                                              : "no squeezing, no displacement";
    char line[160];
    std::snprintf(line, sizeof line, "  %4lld  %12.6f  %12.6f  %s\n", static_cast<long long>(k + 1),
                  spec.log_squeezing[k], spec.input_coherent[k], label);
    out += line;
  }
  out += "\nNetwork rotation C_L\n";
  for (Eigen::Index i = 0; i < m; ++i) {
    out += " ";
    for (Eigen::Index c = 0; c < m; ++c) out += format(" %9.5f", spec.rotation_left(i, c));
    out += "\n";
  }
  return out;
}

std::string circuit_to_json(const CircuitSpec& spec) {
  nlohmann::json doc;
  doc["modes"] = spec.mode_count();
  doc["rotation_left"] = matrix_json(spec.rotation_left);
  doc["sigma"] = vector_json(spec.sigma);
  doc["rotation_right"] = matrix_json(spec.rotation_right);
  doc["log_squeezing"] = vector_json(spec.log_squeezing);
  doc["input_coherent"] = vector_json(spec.input_coherent);
  return doc.dump(2) + "\n";
}

}  // namespace vbs
