#include "tbp/periodicity.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "tbp/error.hpp"

namespace tbp::periodicity {

namespace {

constexpr std::array<Base, 4> kBases{Base::A, Base::C, Base::G, Base::T};

double normalize(const CodonPositionCounts& counts, Normalization n) {
  const auto ps = static_cast<double>(ps_n3_exact(counts));
  switch (n) {
    case Normalization::Raw:
      return ps;
    case Normalization::PerBase:
      return ps / static_cast<double>(counts.total());
    case Normalization::BackgroundRatio: {
      if (counts.total() < 2) return 0.0;
      const double bg = background(counts);
      return bg > 0.0 ? ps / bg : 0.0;
    }
  }
  return ps;
}

}  // namespace

std::int64_t CodonPositionCounts::base_total(Base b) const noexcept {
  const auto& row = counts_[static_cast<int>(b)];
  return row[0] + row[1] + row[2];
}

std::string_view to_string(Normalization n) noexcept {
  switch (n) {
    case Normalization::Raw: return "raw";
    case Normalization::PerBase: return "per-base";
    case Normalization::BackgroundRatio: return "background";
  }
  return "per-base";
}

Normalization normalization_from_string(std::string_view name) {
  if (name == "raw") return Normalization::Raw;
  if (name == "per-base") return Normalization::PerBase;
  if (name == "background") return Normalization::BackgroundRatio;
  throw UsageError("unknown normalization '" + std::string(name) +
                   "' (expected raw, per-base or background)");
}

CodonPositionCounts count_codon_positions(const NucleotideSequence& seq) {
  CodonPositionCounts counts;
  for (std::size_t k = 0; k < seq.size(); ++k) counts.push(seq[k]);
  return counts;
}

std::int64_t ps_n3_exact(const CodonPositionCounts& counts) noexcept {
  std::int64_t total = 0;
  for (Base b : kBases) {
    const std::int64_t f1 = counts.at(b, 0);
    const std::int64_t f2 = counts.at(b, 1);
    const std::int64_t f3 = counts.at(b, 2);
    total += f1 * f1 + f2 * f2 + f3 * f3 - (f1 * f2 + f2 * f3 + f1 * f3);
  }
  return total;
}

double ps_n3(const CodonPositionCounts& counts) noexcept {
  return static_cast<double>(ps_n3_exact(counts));
}

double dft_power_at_third(const NucleotideSequence& seq) {
  std::array<std::complex<double>, 4> sums{};
  const double w = -2.0 * std::numbers::pi / 3.0;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    sums[static_cast<int>(seq[n])] += std::polar(1.0, w * static_cast<double>(n));
  }
  double power = 0.0;
  for (const auto& s : sums) power += std::norm(s);
  return power;
}

double background(const CodonPositionCounts& counts) {
  const std::int64_t n = counts.total();
  if (n < 2) {
    throw UndefinedBackgroundError("spectrum background needs at least two bases, got " +
                                   std::to_string(n));
  }
  double sum = 0.0;
  for (Base b : kBases) {
    const std::int64_t nx = counts.base_total(b);
    sum += static_cast<double>(nx * (n - nx));
  }
  return sum / static_cast<double>(n - 1);
}

WalkTrajectory walk(const NucleotideSequence& seq, Normalization normalization) {
  WalkTrajectory out{{}, normalization};
  out.values.reserve(seq.size());
  CodonPositionCounts counts;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    counts.push(seq[k]);
    out.values.push_back(normalize(counts, normalization));
  }
  return out;
}

}  // namespace tbp::periodicity
