#pragma once

// Command-line front end. Each command reads one molecule file, writes its
// artifacts into the output directory and returns a stable exit code.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "vbs/verify.hpp"

namespace vbs::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 2,
  kValidationError = 3,
  kTruncation = 4,
  kVerificationFailed = 5,
};

enum class Command { Compile, Spectrum, Sample, Verify };

/// Minimum captured probability accepted without --allow-truncation.
inline constexpr double kMinCapturedProbability = 0.9;
/// Bin width of the sample histogram when --bin is not given.
inline constexpr double kDefaultSampleBin = 200.0;

struct RunConfig {
  Command command = Command::Spectrum;
  std::string input_path;
  std::string output_path = ".";
  std::optional<double> bin_width;  ///< spectrum: 1 cm⁻¹, sample: 200 cm⁻¹
  int cutoff = 10;
  double prob_floor = 1e-4;
  std::size_t n_samples = 300;
  std::uint64_t seed = 42;
  Oracle oracle = Oracle::Quadrature;
  /// Sampling stops adding shells once this much mass is missing.
  double epsilon_trunc = 1e-4;
  unsigned threads = 1;
  bool counts = false;
  bool allow_truncation = false;
  bool corrupt_w = false;
};

int run_compile(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_sample(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.command.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Usage errors map to kValidationError.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vbs::cli
