#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>

#include "vbs/doktorov.hpp"
#include "vbs/error.hpp"
#include "vbs/fcf.hpp"
#include "vbs/io.hpp"
#include "vbs/sampler.hpp"
#include "vbs/spectrum.hpp"
#include "vbs/vibmodel.hpp"

namespace vbs::cli {

namespace {

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::Io:
    case Errc::Parse:
    case Errc::MissingField:
    case Errc::ConflictingFields:
      return kIoError;
    default:
      return kValidationError;
  }
}

void validate(const RunConfig& c) {
  if (c.bin_width && !(*c.bin_width > 0.0)) throw Error(Errc::InvalidArgument, "--bin must be positive");
  if (c.cutoff < 0) throw Error(Errc::InvalidArgument, "--cutoff must be non-negative");
  if (!(c.prob_floor >= 0.0)) throw Error(Errc::InvalidArgument, "--floor must be non-negative");
  if (c.n_samples == 0) throw Error(Errc::InvalidArgument, "--samples must be positive");
  if (c.threads == 0) throw Error(Errc::InvalidArgument, "--threads must be positive");
}

std::filesystem::path output_file(const RunConfig& c, const char* name) {
  std::error_code ec;
  std::filesystem::create_directories(c.output_path, ec);
  if (ec) throw Error(Errc::Io, "cannot create output directory " + c.output_path + ": " + ec.message());
  return std::filesystem::path(c.output_path) / name;
}

void write_file(const RunConfig& c, const char* name, const std::function<void(std::ostream&)>& body) {
  const auto path = output_file(c, name);
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(Errc::Io, "cannot open " + path.string() + " for writing");
  body(os);
  os.flush();
  if (!os) throw Error(Errc::Io, "write to " + path.string() + " failed");
}

FcfOptions fcf_options(const RunConfig& c) {
  FcfOptions o;
  o.threads = c.threads;
  return o;
}

template <class F>
int guarded(const RunConfig& config, std::ostream& err, F&& body) {
  try {
    validate(config);
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
}

bool truncation_rejected(const RunConfig& c, double captured, std::ostream& err) {
  if (captured >= kMinCapturedProbability || c.allow_truncation) return false;
  err << "error: captured probability " << format_double(captured) << " below " << kMinCapturedProbability
      << "; raise --cutoff or pass --allow-truncation\n";
  return true;
}

}  // namespace

int run_compile(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(config, err, [&] {
    const MolecularModel model = parse_molecule(config.input_path);
    const CircuitSpec spec = compile_circuit(build_doktorov(model));
    const std::string report = apparatus_report(spec);
    write_file(config, "circuit.json", [&](std::ostream& os) { os << circuit_to_json(spec); });
    write_file(config, "apparatus.txt", [&](std::ostream& os) { os << report; });
    out << report;
    return int{kOk};
  });
}

int run_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(config, err, [&] {
    const MolecularModel model = parse_molecule(config.input_path);
    const FcpResult fcp = fcp_exact(build_doktorov(model), config.cutoff, config.prob_floor, fcf_options(config));
    out << "captured probability: " << format_double(fcp.captured_probability) << '\n';
    if (truncation_rejected(config, fcp.captured_probability, err)) return int{kTruncation};

    const StickSpectrum sticks = sticks_from_fcp(fcp, model.omega_final());
    const BinnedSpectrum binned = bin_sticks(sticks, config.bin_width.value_or(1.0));
    write_file(config, "fcp.csv", [&](std::ostream& os) { write_fcp_csv(os, fcp, model.omega_final()); });
    write_file(config, "sticks.csv", [&](std::ostream& os) { write_sticks_csv(os, sticks); });
    write_file(config, "binned.csv", [&](std::ostream& os) { write_binned_csv(os, binned); });
    return int{kOk};
  });
}

int run_sample(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(config, err, [&] {
    const MolecularModel model = parse_molecule(config.input_path);
    const TruncatedDistribution dist =
        build_distribution(build_doktorov(model), config.cutoff, config.epsilon_trunc, fcf_options(config));
    out << "captured probability: " << format_double(dist.captured_mass) << '\n';
    if (truncation_rejected(config, dist.captured_mass, err)) return int{kTruncation};

    const double bin = config.bin_width.value_or(kDefaultSampleBin);
    SampleRun run = draw_samples(dist, config.n_samples, config.seed, config.threads);
    run.bin_width = bin;
    const BinnedSpectrum histogram = estimate_fcp(run, model.omega_final(), bin, config.counts);
    const BinnedSpectrum exact = bin_sticks(distribution_sticks(dist, model.omega_final()), bin);
    write_file(config, "samples.csv", [&](std::ostream& os) { write_samples_csv(os, run, model.omega_final()); });
    write_file(config, "histogram.csv", [&](std::ostream& os) { write_binned_csv(os, histogram); });
    write_file(config, "exact.csv", [&](std::ostream& os) { write_binned_csv(os, exact); });
    return int{kOk};
  });
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(config, err, [&] {
    VerifyOptions options;
    options.oracle = config.oracle;
    options.seed = config.seed;
    options.corrupt_w = config.corrupt_w;
    if (!config.input_path.empty()) options.model = parse_molecule(config.input_path);
    const VerifyReport report = run_oracle_suite(options);
    const std::string text = report.to_text();
    write_file(config, "verify.txt", [&](std::ostream& os) { os << text; });
    out << text;
    return report.passed() ? int{kOk} : int{kVerificationFailed};
  });
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::Compile: return run_compile(config, out, err);
    case Command::Spectrum: return run_spectrum(config, out, err);
    case Command::Sample: return run_sample(config, out, err);
    case Command::Verify: return run_verify(config, out, err);
  }
  return kValidationError;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vibronic spectra from a modified boson-sampling circuit", "vbs"};
  app.require_subcommand(1);

  RunConfig config;
  double bin = 0.0;
  const std::map<std::string, Oracle> oracles{
      {"quadrature", Oracle::Quadrature}, {"permanent", Oracle::Permanent}, {"none", Oracle::None}};

  auto common = [&](CLI::App* sub, bool input_required) {
    auto* in = sub->add_option("input", config.input_path, "molecule JSON file");
    if (input_required) in->required();
    sub->add_option("-o,--out", config.output_path, "output directory")->capture_default_str();
    sub->add_option("--seed", config.seed, "random seed")->capture_default_str();
    sub->add_option("--threads", config.threads, "worker threads")->capture_default_str();
  };
  auto exact = [&](CLI::App* sub) {
    sub->add_option("--cutoff", config.cutoff, "largest total quanta enumerated")->capture_default_str();
    sub->add_flag("--allow-truncation", config.allow_truncation, "accept captured probability below 0.9");
  };

  auto* compile = app.add_subcommand("compile", "write the circuit specification and apparatus report");
  common(compile, true);

  auto* spectrum = app.add_subcommand("spectrum", "exact Franck-Condon profile");
  common(spectrum, true);
  exact(spectrum);
  spectrum->add_option("--bin", bin, "bin width in cm^-1 (default 1)");
  spectrum->add_option("--floor", config.prob_floor, "smallest factor listed")->capture_default_str();

  auto* sample = app.add_subcommand("sample", "Monte Carlo estimate from simulated samples");
  common(sample, true);
  exact(sample);
  sample->add_option("--bin", bin, "bin width in cm^-1 (default 200)");
  sample->add_option("--samples", config.n_samples, "number of samples")->capture_default_str();
  sample->add_option("--epsilon", config.epsilon_trunc, "tolerated missing mass")->capture_default_str();
  sample->add_flag("--counts", config.counts, "histogram holds raw counts instead of frequencies");

  auto* verify = app.add_subcommand("verify", "oracle-equivalence suite");
  common(verify, false);
  verify->add_option("--oracle", config.oracle, "quadrature, permanent or none")
      ->transform(CLI::CheckedTransformer(oracles, CLI::ignore_case));
  verify->add_flag("--corrupt-w", config.corrupt_w, "negative control: break W before checking");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }

  for (auto* sub : app.get_subcommands()) {
    if (sub->count_all() == 0) continue;
    if (auto* opt = sub->get_option_no_throw("--bin"); opt && opt->count() > 0) config.bin_width = bin;
    if (sub == compile) config.command = Command::Compile;
    if (sub == spectrum) config.command = Command::Spectrum;
    if (sub == sample) config.command = Command::Sample;
    if (sub == verify) config.command = Command::Verify;
  }
  return run(config, out, err);
}

}  // namespace vbs::cli
