#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "tbp/annotation.hpp"
#include "tbp/sequence.hpp"

namespace tbp::synthetic {

/// Layout: intron (exon intron) x blocks. Intron bases are uniform over
/// A/C/G/T. An exon base at codon phase i is kPreferredBase[i] with
/// probability `bias` and each other base with probability (1 - bias) / 3,
/// so bias = 0.25 is uniform and bias = 1 is an exact ATG repeat.
struct SyntheticSpec {
  std::size_t blocks = 1;
  std::size_t exon_length = 600;
  std::size_t intron_length = 600;
  double bias = 0.7;
  std::uint64_t seed = 42;
  std::string id = "synthetic";

  void validate() const;  // throws ParameterError
};

inline constexpr std::array<Base, 3> kPreferredBase{Base::A, Base::T, Base::G};

/// Name of the generator behind every seeded draw, recorded in run logs.
inline constexpr const char* kGeneratorName = "std::mt19937_64";

struct SyntheticGene {
  NucleotideSequence sequence;
  annotation::AnnotationRecord truth;
};

SyntheticGene generate(const SyntheticSpec& spec);

}  // namespace tbp::synthetic
