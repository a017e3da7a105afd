#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tbp/sequence.hpp"

namespace tbp::fasta {

enum class IngestionPolicy {
  Strict,         ///< anything outside A/C/G/T is an error
  SkipAmbiguous,  ///< IUPAC ambiguity codes are resolved by a seeded RNG
};

IngestionPolicy policy_from_string(std::string_view name);  // strict | skip-ambiguous
std::string_view to_string(IngestionPolicy p) noexcept;

/// One resolved ambiguity code.
struct Substitution {
  std::string id;
  std::size_t position = 0;  ///< 1-based, within the record
  char original = 'N';
  char replacement = 'A';
};

struct ParseResult {
  std::vector<NucleotideSequence> records;
  std::vector<Substitution> substitutions;
};

/// Headers start with '>'; the id is the header text up to the first
/// whitespace. Sequence lines may be lowercase and end in LF or CRLF.
/// Under SkipAmbiguous each of N,R,Y,S,W,K,M,B,D,H,V is replaced by a base
/// drawn uniformly (std::mt19937_64 seeded with `seed`) from the bases that
/// code stands for.
ParseResult parse(std::istream& in, IngestionPolicy policy = IngestionPolicy::Strict,
                  std::uint64_t seed = 0);
ParseResult parse(std::string_view text, IngestionPolicy policy = IngestionPolicy::Strict,
                  std::uint64_t seed = 0);

void write(std::ostream& out, const NucleotideSequence& seq, std::size_t line_width = 60);

}  // namespace tbp::fasta
