#include "vbs/fock.hpp"

#include <algorithm>
#include <numeric>

#include "vbs/error.hpp"

namespace vbs {

FockState::FockState(std::vector<int> occupations) : occupations_(std::move(occupations)) {
  for (int m : occupations_) {
    if (m < 0) throw Error(Errc::InvalidArgument, "negative occupation number");
  }
  total_ = std::accumulate(occupations_.begin(), occupations_.end(), 0);
}

FockState::FockState(std::initializer_list<int> occupations)
    : FockState(std::vector<int>(occupations)) {}

FockState FockState::vacuum(std::size_t modes) { return FockState(std::vector<int>(modes, 0)); }

FockState FockState::excitation(std::size_t modes, std::size_t mode, int count) {
  std::vector<int> occ(modes, 0);
  occ.at(mode) = count;
  return FockState(std::move(occ));
}

int FockState::max_occupation() const noexcept {
  return occupations_.empty() ? 0 : *std::max_element(occupations_.begin(), occupations_.end());
}

double FockState::transition_frequency(const Vector& omega_final) const {
  if (static_cast<std::size_t>(omega_final.size()) != occupations_.size()) {
    throw Error(Errc::DimensionMismatch, "frequency vector length differs from mode count");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < occupations_.size(); ++k) sum += omega_final[k] * occupations_[k];
  return sum;
}

std::string FockState::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < occupations_.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(occupations_[k]);
  }
  return out;
}

ShellIndex::ShellIndex(std::size_t modes, int max_quanta) : modes_(modes), max_quanta_(max_quanta) {
  if (modes == 0) throw Error(Errc::InvalidArgument, "ShellIndex needs at least one mode");
  if (max_quanta < 0) throw Error(Errc::InvalidArgument, "negative quanta bound");
  const int n_max = max_quanta + static_cast<int>(modes) + 1;
  binom_.assign(n_max + 1, std::vector<std::uint64_t>(n_max + 1, 0));
  for (int n = 0; n <= n_max; ++n) {
    binom_[n][0] = 1;
    for (int k = 1; k <= n; ++k) binom_[n][k] = binom_[n - 1][k - 1] + binom_[n - 1][k];
  }
}

std::uint64_t ShellIndex::binom(int n, int k) const {
  if (k < 0 || n < 0 || k > n) return 0;
  return binom_[n][k];
}

std::size_t ShellIndex::count(int quanta) const {
  if (quanta < 0) return 0;
  if (quanta > max_quanta_) throw Error(Errc::QuantaLimitExceeded, "shell beyond index range");
  return static_cast<std::size_t>(binom(quanta + static_cast<int>(modes_) - 1,
                                        static_cast<int>(modes_) - 1));
}

std::size_t ShellIndex::rank(std::span<const int> occupations, int quanta) const {
  std::size_t r = 0;
  int remaining = quanta;
  const int m = static_cast<int>(modes_);
  for (int p = 0; p + 1 < m; ++p) {
    const int v = occupations[p];
    const int q = m - p - 1;
    r += binom(remaining + q, q) - binom(remaining - v + q, q);
    remaining -= v;
  }
  return r;
}

namespace {

void compose(std::vector<int>& current, std::size_t pos, int remaining, std::vector<FockState>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    current[pos] = v;
    compose(current, pos + 1, remaining - v, out);
  }
}

}  // namespace

std::vector<FockState> ShellIndex::enumerate(int quanta) const {
  std::vector<FockState> out;
  out.reserve(count(quanta));
  std::vector<int> current(modes_, 0);
  compose(current, 0, quanta, out);
  return out;
}

}  // namespace vbs
