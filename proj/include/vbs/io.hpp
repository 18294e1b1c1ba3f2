#pragma once

// CSV exports. Numbers use the shortest round-trip decimal form, so equal
// inputs always give byte-identical files.

#include <ostream>
#include <string>

#include "vbs/fcf.hpp"
#include "vbs/sampler.hpp"
#include "vbs/spectrum.hpp"

namespace vbs {

std::string format_double(double v);

/// occupations,omega_vib_cm1,fcf
void write_fcp_csv(std::ostream& os, const FcpResult& fcp, const Vector& omega_final);
/// omega_cm1,intensity
void write_sticks_csv(std::ostream& os, const StickSpectrum& sticks);
/// bin_left_cm1,value
void write_binned_csv(std::ostream& os, const BinnedSpectrum& binned);
/// sample_index,occupations,omega_vib_cm1
void write_samples_csv(std::ostream& os, const SampleRun& run, const Vector& omega_final);

}  // namespace vbs
