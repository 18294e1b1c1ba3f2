#include "vbs/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "vbs/error.hpp"

namespace vbs {

double StickSpectrum::total_intensity() const {
  double sum = 0.0;
  for (const auto& s : sticks) sum += s.intensity;
  return sum;
}

double BinnedSpectrum::total() const { return std::accumulate(values.begin(), values.end(), 0.0); }

StickSpectrum sticks_from_fcp(const FcpResult& fcp, const Vector& omega_final) {
  StickSpectrum out;
  out.sticks.reserve(fcp.entries.size());
  for (const auto& e : fcp.entries) {
    out.sticks.push_back({e.state.transition_frequency(omega_final), e.fcf, e.state});
  }
  return out;
}

BinnedSpectrum bin_sticks(const StickSpectrum& sticks, double bin_width, std::size_t min_bins) {
  if (!(bin_width > 0.0)) throw Error(Errc::InvalidArgument, "bin width must be positive");
  BinnedSpectrum out;
  out.bin_width = bin_width;
  out.values.assign(min_bins, 0.0);
  for (const auto& s : sticks.sticks) {
    if (!(s.omega_vib >= 0.0)) throw Error(Errc::InvalidArgument, "negative stick frequency");
    const auto k = static_cast<std::size_t>(std::floor(s.omega_vib / bin_width));
    if (k >= out.values.size()) out.values.resize(k + 1, 0.0);
    out.values[k] += s.intensity;
  }
  return out;
}

namespace {

struct BinEnumerator {
  std::vector<double> freq;        // descending
  std::vector<std::size_t> order;  // freq[p] belongs to original mode order[p]
  double lo, hi;
  std::size_t guard;
  std::vector<int> current;
  std::vector<FockState> found;

  void emit() {
    if (found.size() >= guard) {
      throw Error(Errc::ExplosionGuard, "more than " + std::to_string(guard) + " states in window");
    }
    std::vector<int> occ(current.size());
    for (std::size_t p = 0; p < current.size(); ++p) occ[order[p]] = current[p];
    found.emplace_back(std::move(occ));
  }

  void descend(std::size_t p, int quanta_left, double partial) {
    const std::size_t modes = freq.size();
    if (p + 1 == modes) {
      // lo ≤ partial + v ω < hi
      for (int v = 0; v <= quanta_left; ++v) {
        const double s = partial + v * freq[p];
        if (s >= hi) break;
        if (s >= lo) {
          current[p] = v;
          emit();
        }
      }
      current[p] = 0;
      return;
    }
    const double next_max = freq[p + 1];
    for (int v = 0; v <= quanta_left; ++v) {
      const double s = partial + v * freq[p];
      if (s >= hi) break;
      // Remaining quanta placed in the highest remaining mode is the best
      // reachable total; larger v only raises it.
      if (s + (quanta_left - v) * next_max < lo) continue;
      current[p] = v;
      descend(p + 1, quanta_left - v, s);
    }
    current[p] = 0;
  }
};

}  // namespace

std::vector<FockState> enumerate_bin_states(const Vector& omega_final, double lo, double hi, int max_quanta,
                                            std::size_t guard) {
  if (!(lo >= 0.0) || !(hi > lo)) throw Error(Errc::InvalidArgument, "window must satisfy 0 <= lo < hi");
  if (max_quanta < 0) throw Error(Errc::InvalidArgument, "max_quanta must be non-negative");
  const auto modes = static_cast<std::size_t>(omega_final.size());
  if (modes == 0) throw Error(Errc::DimensionMismatch, "no modes");
  for (std::size_t k = 0; k < modes; ++k) {
    if (!(omega_final[k] > 0.0)) throw Error(Errc::NonPositiveFrequency, "frequencies must be positive");
  }

  BinEnumerator e{.freq = {}, .order = std::vector<std::size_t>(modes), .lo = lo, .hi = hi, .guard = guard,
                  .current = std::vector<int>(modes, 0), .found = {}};
  std::iota(e.order.begin(), e.order.end(), std::size_t{0});
  std::stable_sort(e.order.begin(), e.order.end(),
                   [&](std::size_t a, std::size_t b) { return omega_final[a] > omega_final[b]; });
  for (std::size_t p = 0; p < modes; ++p) e.freq.push_back(omega_final[e.order[p]]);
  e.descend(0, max_quanta, 0.0);
  std::sort(e.found.begin(), e.found.end());
  return std::move(e.found);
}

StickSpectrum convolve_blocks(const StickSpectrum& a, const StickSpectrum& b, double prob_floor) {
  std::vector<Stick> raw;
  raw.reserve(a.sticks.size() * b.sticks.size());
  for (const auto& sa : a.sticks) {
    for (const auto& sb : b.sticks) {
      Stick s{sa.omega_vib + sb.omega_vib, sa.intensity * sb.intensity, std::nullopt};
      if (sa.state && sb.state) {
        std::vector<int> occ(sa.state->occupations().begin(), sa.state->occupations().end());
        occ.insert(occ.end(), sb.state->occupations().begin(), sb.state->occupations().end());
        s.state = FockState(std::move(occ));
      }
      raw.push_back(std::move(s));
    }
  }
  std::stable_sort(raw.begin(), raw.end(), [](const Stick& x, const Stick& y) { return x.omega_vib < y.omega_vib; });

  StickSpectrum out;
  for (std::size_t i = 0; i < raw.size();) {
    Stick merged = std::move(raw[i]);
    std::size_t j = i + 1;
    for (; j < raw.size() && raw[j].omega_vib - merged.omega_vib <= kStickMergeTolerance; ++j) {
      merged.intensity += raw[j].intensity;
      merged.state.reset();
    }
    if (merged.intensity >= prob_floor) out.sticks.push_back(std::move(merged));
    i = j;
  }
  return out;
}

BinnedSpectrum broaden(const StickSpectrum& sticks, LineShape shape, double hwhm, const SpectrumGrid& grid) {
  if (!(hwhm > 0.0)) throw Error(Errc::InvalidArgument, "hwhm must be positive");
  if (!(grid.spacing > 0.0)) throw Error(Errc::InvalidArgument, "grid spacing must be positive");
  BinnedSpectrum out;
  out.bin_width = grid.spacing;
  out.origin = grid.origin;
  out.values.assign(grid.points, 0.0);

  const double sigma = hwhm / std::sqrt(2.0 * std::numbers::ln2);
  const double gauss_norm = 1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi));
  for (std::size_t i = 0; i < grid.points; ++i) {
    const double x = grid.origin + static_cast<double>(i) * grid.spacing;
    double v = 0.0;
    for (const auto& s : sticks.sticks) {
      const double dx = x - s.omega_vib;
      if (shape == LineShape::Lorentzian) {
        v += s.intensity * hwhm / (std::numbers::pi * (dx * dx + hwhm * hwhm));
      } else {
        v += s.intensity * gauss_norm * std::exp(-0.5 * dx * dx / (sigma * sigma));
      }
    }
    out.values[i] = v;
  }
  return out;
}

}  // namespace vbs
