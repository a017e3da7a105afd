#include "tbp/synthetic.hpp"

#include <random>

#include "tbp/error.hpp"

namespace tbp::synthetic {

namespace {

// Only raw engine output is used: std::mt19937_64 is bit-exact across
// standard libraries while the std distributions are not.
double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Base uniform_base(std::mt19937_64& rng) { return static_cast<Base>(rng() >> 62); }

Base biased_base(std::mt19937_64& rng, std::size_t phase, double bias) {
  const Base preferred = kPreferredBase[phase];
  if (unit(rng) < bias) return preferred;
  const auto skip = static_cast<std::uint64_t>(preferred);
  auto pick = rng() % 3;
  if (pick >= skip) ++pick;
  return static_cast<Base>(pick);
}

}  // namespace

void SyntheticSpec::validate() const {
  if (blocks < 1) throw ParameterError("synthetic gene needs at least one exon block");
  if (exon_length < 1 || intron_length < 1) {
    throw ParameterError("exon and intron lengths must be positive");
  }
  if (!(bias >= 0.0 && bias <= 1.0)) throw ParameterError("bias must lie in [0, 1]");
  if (id.empty()) throw ParameterError("synthetic id must not be empty");
}

SyntheticGene generate(const SyntheticSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  std::string bases;
  bases.reserve(spec.blocks * spec.exon_length + (spec.blocks + 1) * spec.intron_length);
  annotation::AnnotationRecord truth{spec.id, {}};

  const auto intron = [&] {
    for (std::size_t i = 0; i < spec.intron_length; ++i) bases.push_back(letter(uniform_base(rng)));
  };
  intron();
  for (std::size_t b = 0; b < spec.blocks; ++b) {
    const std::size_t start = bases.size() + 1;
    for (std::size_t i = 0; i < spec.exon_length; ++i) {
      const std::size_t phase = bases.size() % 3;
      bases.push_back(letter(biased_base(rng, phase, spec.bias)));
    }
    truth.exons.push_back({start, bases.size()});
    intron();
  }
  return {NucleotideSequence::from_string(spec.id, bases), std::move(truth)};
}

}  // namespace tbp::synthetic
