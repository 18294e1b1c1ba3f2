#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace vbs {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Occupation-number basis state |m_1, ..., m_M> of M bosonic modes.
class FockState {
 public:
  FockState() = default;
  explicit FockState(std::vector<int> occupations);
  FockState(std::initializer_list<int> occupations);

  /// Vacuum over `modes` modes.
  static FockState vacuum(std::size_t modes);
  /// A single quantum (or `count` quanta) in `mode`.
  static FockState excitation(std::size_t modes, std::size_t mode, int count = 1);

  std::size_t modes() const noexcept { return occupations_.size(); }
  int total_quanta() const noexcept { return total_; }
  int max_occupation() const noexcept;
  int operator[](std::size_t k) const { return occupations_[k]; }
  std::span<const int> occupations() const noexcept { return occupations_; }

  /// Σ_k ω'_k m_k.
  double transition_frequency(const Vector& omega_final) const;

  /// Space-separated occupations, e.g. "0 0 1 0".
  std::string to_string() const;

  friend bool operator==(const FockState&, const FockState&) = default;
  friend auto operator<=>(const FockState& a, const FockState& b) {
    return a.occupations_ <=> b.occupations_;
  }

 private:
  std::vector<int> occupations_;
  int total_ = 0;
};

/// Lexicographic ranking of the compositions of a fixed total `quanta` into
/// `modes` non-negative parts. `rank` is a bijection onto [0, count).
class ShellIndex {
 public:
  ShellIndex(std::size_t modes, int max_quanta);

  std::size_t modes() const noexcept { return modes_; }

  /// Number of compositions of `quanta` into the configured number of modes.
  std::size_t count(int quanta) const;
  std::size_t rank(std::span<const int> occupations, int quanta) const;
  /// All compositions of `quanta`, in rank order.
  std::vector<FockState> enumerate(int quanta) const;

 private:
  std::uint64_t binom(int n, int k) const;

  std::size_t modes_;
  int max_quanta_;
  std::vector<std::vector<std::uint64_t>> binom_;
};

}  // namespace vbs
