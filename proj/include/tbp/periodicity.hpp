#pragma once

// 3-base periodicity of DNA prefixes.
//
// With F[x][i] the number of occurrences of base x at codon phase i, the
// power of the indicator DFT at frequency 1/3 is
//   PS = sum_x F1^2 + F2^2 + F3^2 - (F1 F2 + F2 F3 + F1 F3),
// which equals (1/2) sum_x (F1-F2)^2 + (F2-F3)^2 + (F1-F3)^2 >= 0.

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "tbp/sequence.hpp"

namespace tbp::periodicity {

class CodonPositionCounts {
 public:
  void add(Base b, std::size_t phase) noexcept {
    ++counts_[static_cast<int>(b)][phase];
    ++total_;
  }
  /// Appends the next base of the sequence; its phase follows from total().
  void push(Base b) noexcept { add(b, total_ % 3); }

  /// `phase` is 0-based (0, 1, 2 for codon positions 1, 2, 3).
  std::int64_t at(Base b, std::size_t phase) const noexcept {
    return counts_[static_cast<int>(b)][phase];
  }
  std::int64_t base_total(Base b) const noexcept;
  std::int64_t total() const noexcept { return total_; }

  friend bool operator==(const CodonPositionCounts&, const CodonPositionCounts&) = default;

 private:
  std::array<std::array<std::int64_t, 3>, 4> counts_{};
  std::int64_t total_ = 0;
};

enum class Normalization { Raw, PerBase, BackgroundRatio };

std::string_view to_string(Normalization n) noexcept;
/// Accepts "raw", "per-base", "background". Throws UsageError otherwise.
Normalization normalization_from_string(std::string_view name);

struct WalkTrajectory {
  std::vector<double> values;
  Normalization normalization = Normalization::PerBase;
};

CodonPositionCounts count_codon_positions(const NucleotideSequence& seq);

/// Exact integer evaluation of the closed form.
std::int64_t ps_n3_exact(const CodonPositionCounts& counts) noexcept;
double ps_n3(const CodonPositionCounts& counts) noexcept;

/// sum_x |sum_n 1_x[n] e^{-2 pi i n / 3}|^2 by direct complex summation.
double dft_power_at_third(const NucleotideSequence& seq);

/// Mean indicator-DFT power over the N - 1 nonzero frequency bins:
/// sum_x n_x (N - n_x) / (N - 1). Throws UndefinedBackgroundError for N < 2.
double background(const CodonPositionCounts& counts);

/// One value per prefix D_1..D_N, computed incrementally in O(N).
/// BackgroundRatio emits 0 where the background is 0 or undefined.
WalkTrajectory walk(const NucleotideSequence& seq,
                    Normalization normalization = Normalization::PerBase);

}  // namespace tbp::periodicity
