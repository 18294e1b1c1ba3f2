#include "vbs/verify.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "vbs/doktorov.hpp"
#include "vbs/fcf.hpp"
#include "vbs/permanent.hpp"
#include "vbs/quadrature.hpp"
#include "vbs/random_models.hpp"

namespace vbs {

namespace {

constexpr double kStructuralTolerance = 1e-10;
constexpr double kQuadratureTolerance = 1e-8;
constexpr double kPermanentTolerance = 1e-10;
constexpr double kHomTolerance = 1e-12;
constexpr double kCorruption = 1e-3;

std::vector<FockState> states_up_to(std::size_t modes, int max_quanta) {
  ShellIndex index(modes, max_quanta);
  std::vector<FockState> out;
  for (int s = 0; s <= max_quanta; ++s) {
    auto shell = index.enumerate(s);
    out.insert(out.end(), shell.begin(), shell.end());
  }
  return out;
}

DoktorovParameters maybe_corrupt(DoktorovParameters p, bool corrupt) {
  if (corrupt) {
    const auto last = p.w_matrix.cols() - 1;
    p.w_matrix(0, last) += kCorruption;
    p.w_matrix(last, 0) += kCorruption;
  }
  return p;
}

void structural(const MolecularModel& model, bool corrupt, OracleCheck& w_check, OracleCheck& svd_check) {
  const DoktorovParameters p = maybe_corrupt(build_doktorov(model), corrupt);
  const auto dim = p.w_matrix.rows();
  const double w_err = (p.w_matrix * p.w_matrix - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  const CircuitSpec spec = compile_circuit(p);
  const Matrix rebuilt = spec.rotation_left * spec.sigma.asDiagonal() * spec.rotation_right.transpose();
  const double svd_err = (rebuilt - p.j_matrix).cwiseAbs().maxCoeff();
  w_check.max_error = std::max(w_check.max_error, w_err);
  svd_check.max_error = std::max(svd_check.max_error, svd_err);
  ++w_check.comparisons;
  ++svd_check.comparisons;
}

}  // namespace

bool VerifyReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return true;
}

std::string VerifyReport::to_text() const {
  std::string out;
  char line[200];
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "%-24s %-4s comparisons=%-7zu max_error=%.3e tolerance=%.1e\n", c.name.c_str(),
                  c.passed() ? "PASS" : "FAIL", c.comparisons, c.max_error, c.tolerance);
    out += line;
  }
  out += passed() ? "all checks passed\n" : "verification FAILED\n";
  return out;
}

VerifyReport run_oracle_suite(const VerifyOptions& options) {
  VerifyReport report;
  std::mt19937_64 rng(options.seed);

  OracleCheck w_check{"w_self_inverse", 0, 0.0, kStructuralTolerance};
  OracleCheck svd_check{"svd_reconstruction", 0, 0.0, kStructuralTolerance};
  for (int i = 0; i < options.structural_models; ++i) {
    RandomModelSpec spec;
    spec.modes = 1 + static_cast<std::size_t>(i % 6);
    structural(random_model(rng, spec), options.corrupt_w, w_check, svd_check);
  }
  if (options.model) structural(*options.model, options.corrupt_w, w_check, svd_check);
  report.checks.push_back(w_check);
  report.checks.push_back(svd_check);

  if (options.oracle == Oracle::Quadrature) {
    OracleCheck check{"fc_vs_quadrature", 0, 0.0, kQuadratureTolerance};
    for (int i = 0; i < options.oracle_models; ++i) {
      RandomModelSpec spec;
      spec.modes = 1 + static_cast<std::size_t>(i % 2);
      spec.log_frequency_spread = 0.5;
      const MolecularModel model = random_model(rng, spec);
      const GeneratingFunction gf = generating_function(maybe_corrupt(build_doktorov(model), options.corrupt_w));
      const auto states = states_up_to(spec.modes, options.quadrature_max_quanta);
      for (const auto& n : states) {
        for (const auto& m : states) {
          const double err = std::abs(fc_amplitude(gf, n, m) - quadrature_overlap(model, n, m));
          check.max_error = std::max(check.max_error, err);
          ++check.comparisons;
        }
      }
    }
    report.checks.push_back(check);
  }

  if (options.oracle == Oracle::Permanent) {
    OracleCheck check{"fc_vs_permanent", 0, 0.0, kPermanentTolerance};
    constexpr std::size_t kModes = 3;
    const auto states = states_up_to(kModes, options.permanent_max_quanta);
    for (int i = 0; i < options.oracle_models; ++i) {
      RandomModelSpec spec;
      spec.modes = kModes;
      spec.equal_frequencies = true;
      spec.delta_max = 0.0;
      const MolecularModel model = random_model(rng, spec);
      const GeneratingFunction gf = generating_function(maybe_corrupt(build_doktorov(model), options.corrupt_w));
      const ComplexMatrix u = model.duschinsky().cast<std::complex<double>>();
      for (const auto& n : states) {
        for (const auto& m : states) {
          const double reference =
              n.total_quanta() == m.total_quanta() ? rotation_amplitude(u, n, m).real() : 0.0;
          const double err = std::abs(fc_amplitude(gf, n, m) - reference);
          check.max_error = std::max(check.max_error, err);
          ++check.comparisons;
        }
      }
    }
    report.checks.push_back(check);

    OracleCheck hom{"hong_ou_mandel", 0, 0.0, kHomTolerance};
    const double s = 1.0 / std::sqrt(2.0);
    Matrix bs(2, 2);
    bs << s, s, s, -s;
    const FockState one_one{1, 1};
    hom.max_error = std::abs(rotation_amplitude(bs.cast<std::complex<double>>(), one_one, one_one));
    const MolecularModel bs_model(Vector::Constant(2, 1000.0), Vector::Constant(2, 1000.0), bs,
                                  DimensionlessDisplacement{Vector::Zero(2)});
    const GeneratingFunction gf = generating_function(maybe_corrupt(build_doktorov(bs_model), options.corrupt_w));
    hom.max_error = std::max(hom.max_error, std::abs(fc_amplitude(gf, one_one, one_one)));
    hom.comparisons = 2;
    report.checks.push_back(hom);
  }
  return report;
}

}  // namespace vbs
