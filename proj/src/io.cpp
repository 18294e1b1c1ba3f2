#include "vbs/io.hpp"

#include <charconv>

namespace vbs {

std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

void write_fcp_csv(std::ostream& os, const FcpResult& fcp, const Vector& omega_final) {
  os << "occupations,omega_vib_cm1,fcf\n";
  for (const auto& e : fcp.entries) {
    os << e.state.to_string() << ',' << format_double(e.state.transition_frequency(omega_final)) << ','
       << format_double(e.fcf) << '\n';
  }
}

void write_sticks_csv(std::ostream& os, const StickSpectrum& sticks) {
  os << "omega_cm1,intensity\n";
  for (const auto& s : sticks.sticks) os << format_double(s.omega_vib) << ',' << format_double(s.intensity) << '\n';
}

void write_binned_csv(std::ostream& os, const BinnedSpectrum& binned) {
  os << "bin_left_cm1,value\n";
  for (std::size_t i = 0; i < binned.values.size(); ++i) {
    os << format_double(binned.bin_left(i)) << ',' << format_double(binned.values[i]) << '\n';
  }
}

void write_samples_csv(std::ostream& os, const SampleRun& run, const Vector& omega_final) {
  os << "sample_index,occupations,omega_vib_cm1\n";
  for (std::size_t i = 0; i < run.samples.size(); ++i) {
    os << i << ',' << run.samples[i].to_string() << ','
       << format_double(run.samples[i].transition_frequency(omega_final)) << '\n';
  }
}

}  // namespace vbs
