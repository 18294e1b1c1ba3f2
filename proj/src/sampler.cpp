#include "vbs/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "parallel.hpp"
#include "vbs/error.hpp"

namespace vbs {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

double to_unit_interval(std::uint64_t x) noexcept { return static_cast<double>(x >> 11) * 0x1.0p-53; }

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

TruncatedDistribution build_distribution(const DoktorovParameters& params, int cutoff, double epsilon_trunc,
                                         const FcfOptions& options) {
  if (!(epsilon_trunc > 0.0 && epsilon_trunc < 0.5)) {
    throw Error(Errc::InvalidArgument, "epsilon_trunc must lie in (0, 0.5)");
  }
  if (cutoff < 0) throw Error(Errc::InvalidArgument, "cutoff must be non-negative");
  if (cutoff > options.max_total_quanta) {
    throw Error(Errc::QuantaLimitExceeded, "cutoff " + std::to_string(cutoff) + " exceeds max_total_quanta " +
                                               std::to_string(options.max_total_quanta));
  }

  TruncatedDistribution dist;
  VacuumShellRecursion shells(generating_function(params), cutoff, options.threads);
  double mass = 0.0;
  for (;;) {
    const auto& states = shells.states();
    const auto& amps = shells.amplitudes();
    for (std::size_t t = 0; t < states.size(); ++t) {
      const double p = amps[t] * amps[t];
      mass += p;
      dist.states.push_back(states[t]);
      dist.probabilities.push_back(p);
      dist.cumulative.push_back(mass);
    }
    if (mass >= 1.0 - epsilon_trunc) {
      dist.target_reached = true;
      break;
    }
    if (!shells.advance()) break;
  }
  dist.captured_mass = mass;
  return dist;
}

SampleRun draw_samples(const TruncatedDistribution& dist, std::size_t n, std::uint64_t seed, unsigned threads) {
  if (n == 0) throw Error(Errc::InvalidArgument, "need at least one sample");
  if (dist.states.empty() || !(dist.captured_mass > 0.0)) {
    throw Error(Errc::EmptyDistribution, "distribution carries no probability mass");
  }
  // Last state with positive probability; guards against u·mass rounding up.
  std::size_t last = dist.probabilities.size() - 1;
  while (last > 0 && !(dist.probabilities[last] > 0.0)) --last;

  SampleRun run;
  run.seed = seed;
  run.n_samples = n;
  run.state_indices.resize(n);
  const std::size_t chunks = (n + kSampleChunk - 1) / kSampleChunk;
  detail::parallel_for(
      chunks, threads,
      [&](std::size_t begin, std::size_t end) {
        for (std::size_t c = begin; c < end; ++c) {
          std::mt19937_64 engine(splitmix64(seed + (c + 1) * kGolden));
          const std::size_t lo = c * kSampleChunk;
          const std::size_t hi = std::min(n, lo + kSampleChunk);
          for (std::size_t i = lo; i < hi; ++i) {
            const double target = to_unit_interval(engine()) * dist.captured_mass;
            auto it = std::upper_bound(dist.cumulative.begin(), dist.cumulative.end(), target);
            run.state_indices[i] = std::min(static_cast<std::size_t>(it - dist.cumulative.begin()), last);
          }
        }
      },
      1);
  run.samples.reserve(n);
  for (std::size_t idx : run.state_indices) run.samples.push_back(dist.states[idx]);
  return run;
}

BinnedSpectrum estimate_fcp(const SampleRun& run, const Vector& omega_final, double bin_width, bool counts) {
  if (!(bin_width > 0.0)) throw Error(Errc::InvalidArgument, "bin width must be positive");
  StickSpectrum sticks;
  sticks.sticks.reserve(run.samples.size());
  for (const auto& s : run.samples) sticks.sticks.push_back({s.transition_frequency(omega_final), 1.0, std::nullopt});
  BinnedSpectrum out = bin_sticks(sticks, bin_width);
  if (!counts) {
    const auto n = static_cast<double>(run.samples.size());
    for (double& v : out.values) v /= n;
  }
  return out;
}

StickSpectrum distribution_sticks(const TruncatedDistribution& dist, const Vector& omega_final, bool renormalize) {
  StickSpectrum out;
  const double scale = renormalize ? 1.0 / dist.captured_mass : 1.0;
  out.sticks.reserve(dist.states.size());
  for (std::size_t t = 0; t < dist.states.size(); ++t) {
    out.sticks.push_back({dist.states[t].transition_frequency(omega_final), dist.probabilities[t] * scale, dist.states[t]});
  }
  return out;
}

std::uint64_t required_samples(double epsilon_fcp) {
  if (!(epsilon_fcp > 0.0)) throw Error(Errc::InvalidArgument, "epsilon must be positive");
  const double bound = 1.0 / (epsilon_fcp * epsilon_fcp);
  // Absorb representation error in ε² (0.1² is not exactly 0.01).
  const double n = std::ceil(bound * (1.0 - 1e-12));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(n));
}

}  // namespace vbs
