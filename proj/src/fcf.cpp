#include "vbs/fcf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "numeric.hpp"
#include "parallel.hpp"
#include "vbs/error.hpp"

namespace vbs {

namespace {

// Dense coefficient tables above this size are refused.
constexpr std::size_t kMaxBoxEntries = std::size_t{1} << 26;

void check_modes(const GeneratingFunction& gf, const FockState& s, const char* which) {
  if (s.modes() != gf.mode_count()) {
    throw Error(Errc::DimensionMismatch, std::string(which) + " has " + std::to_string(s.modes()) +
                                             " modes, generating function has " +
                                             std::to_string(gf.mode_count()));
  }
}

}  // namespace

GeneratingFunction generating_function(const DoktorovParameters& params) {
  return GeneratingFunction{params.w_matrix, params.r_vector, params.vacuum_overlap};
}

double fc_amplitude(const GeneratingFunction& gf, const FockState& n, const FockState& m,
                    const FcfOptions& options) {
  check_modes(gf, n, "initial state");
  check_modes(gf, m, "final state");
  if (n.max_occupation() > options.max_quanta_per_mode || m.max_occupation() > options.max_quanta_per_mode) {
    throw Error(Errc::QuantaLimitExceeded, "occupation above max_quanta_per_mode = " +
                                               std::to_string(options.max_quanta_per_mode));
  }
  const std::size_t modes = gf.mode_count();
  const std::size_t dims = 2 * modes;

  // Target multi-index (n, m) and the mixed-radix box [0, target] holding
  // every coefficient the recursion touches.
  std::vector<int> target(dims);
  for (std::size_t k = 0; k < modes; ++k) {
    target[k] = n[k];
    target[modes + k] = m[k];
  }
  std::vector<std::size_t> stride(dims);
  std::size_t size = 1;
  for (std::size_t d = 0; d < dims; ++d) {
    stride[d] = size;
    size *= static_cast<std::size_t>(target[d] + 1);
    if (size > kMaxBoxEntries) {
      throw Error(Errc::QuantaLimitExceeded, "amplitude needs more than 2^26 intermediate coefficients");
    }
  }

  std::vector<double> coeff(size);
  std::vector<int> digit(dims, 0);
  coeff[0] = 1.0;
  for (std::size_t idx = 1; idx < size; ++idx) {
    for (std::size_t d = 0; d < dims; ++d) {
      if (++digit[d] <= target[d]) break;
      digit[d] = 0;
    }
    std::size_t i = dims;
    while (digit[--i] == 0) {}
    const std::size_t prev = idx - stride[i];
    --digit[i];
    double sum = gf.r_vector[i] * coeff[prev];
    for (std::size_t j = 0; j < dims; ++j) {
      if (digit[j] > 0) sum -= gf.w_matrix(i, j) * std::sqrt(static_cast<double>(digit[j])) * coeff[prev - stride[j]];
    }
    ++digit[i];
    coeff[idx] = sum / std::sqrt(static_cast<double>(digit[i]));
  }
  return gf.prefactor * coeff[size - 1];
}

VacuumShellRecursion::VacuumShellRecursion(const GeneratingFunction& gf, int max_shell, unsigned threads)
    : prefactor_(gf.prefactor),
      max_shell_(max_shell),
      threads_(threads == 0 ? 1 : threads),
      index_(gf.mode_count(), std::max(max_shell, 0)) {
  if (max_shell < 0) throw Error(Errc::InvalidArgument, "negative shell bound");
  const auto m = static_cast<Eigen::Index>(gf.mode_count());
  w_ = gf.w_matrix.bottomRightCorner(m, m);
  r_ = gf.r_vector.tail(m);
  states_ = index_.enumerate(0);
  coeff_cur_ = {1.0};
  amplitudes_ = {prefactor_};
}

bool VacuumShellRecursion::advance() {
  if (shell_ >= max_shell_) return false;
  const int shell = shell_ + 1;
  std::vector<FockState> states = index_.enumerate(shell);
  std::vector<double> coeff(states.size());
  const std::size_t modes = index_.modes();

  detail::parallel_for(states.size(), threads_, [&](std::size_t begin, std::size_t end) {
    std::vector<int> k(modes);
    for (std::size_t t = begin; t < end; ++t) {
      const auto occ = states[t].occupations();
      std::copy(occ.begin(), occ.end(), k.begin());
      std::size_t i = modes;
      while (k[--i] == 0) {}
      --k[i];
      double sum = r_[i] * coeff_cur_[index_.rank(k, shell - 1)];
      for (std::size_t j = 0; j < modes; ++j) {
        if (k[j] == 0) continue;
        const double weight = w_(i, j) * std::sqrt(static_cast<double>(k[j]));
        --k[j];
        sum -= weight * coeff_prev_[index_.rank(k, shell - 2)];
        ++k[j];
      }
      coeff[t] = sum / std::sqrt(static_cast<double>(occ[i]));
    }
  });

  coeff_prev_ = std::move(coeff_cur_);
  coeff_cur_ = std::move(coeff);
  states_ = std::move(states);
  amplitudes_.resize(coeff_cur_.size());
  for (std::size_t t = 0; t < coeff_cur_.size(); ++t) amplitudes_[t] = prefactor_ * coeff_cur_[t];
  shell_ = shell;
  return true;
}

FcpResult fcp_exact(const DoktorovParameters& params, int cutoff, double prob_floor, const FcfOptions& options) {
  if (cutoff < 0) throw Error(Errc::InvalidArgument, "cutoff must be non-negative");
  if (cutoff > options.max_total_quanta) {
    throw Error(Errc::QuantaLimitExceeded, "cutoff " + std::to_string(cutoff) + " exceeds max_total_quanta " +
                                               std::to_string(options.max_total_quanta));
  }
  if (!(prob_floor >= 0.0)) throw Error(Errc::InvalidArgument, "prob_floor must be non-negative");

  FcpResult result;
  result.cutoff = cutoff;
  VacuumShellRecursion shells(generating_function(params), cutoff, options.threads);
  do {
    const auto& states = shells.states();
    const auto& amps = shells.amplitudes();
    for (std::size_t t = 0; t < states.size(); ++t) {
      const double fcf = amps[t] * amps[t];
      result.captured_probability += fcf;
      if (fcf >= prob_floor) result.entries.push_back({states[t], fcf});
    }
  } while (shells.advance());
  return result;
}

HermiteTermCounts estimate_hermite_terms(const FockState& n, const FockState& m) {
  if (n.modes() != m.modes()) throw Error(Errc::DimensionMismatch, "states differ in mode count");
  const int total = n.total_quanta() + m.total_quanta();

  auto mul = [](std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw Error(Errc::SizeLimitExceeded, "term count overflows 64 bits");
    return out;
  };

  std::uint64_t kan = static_cast<std::uint64_t>(1 + std::llround(0.5 * total));
  for (std::size_t k = 0; k < n.modes(); ++k) {
    kan = mul(kan, static_cast<std::uint64_t>(n[k] + 1) * static_cast<std::uint64_t>(m[k] + 1));
  }
  std::uint64_t wick = 1;
  for (int f = total - 1; f > 1; f -= 2) wick = mul(wick, static_cast<std::uint64_t>(f));
  return {kan, wick};
}

}  // namespace vbs
