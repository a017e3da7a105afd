#include "tbp/fasta.hpp"

#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "tbp/error.hpp"

namespace tbp::fasta {

namespace {

// Bases an IUPAC ambiguity code stands for; empty when not an ambiguity code.
std::string_view expansion(char c) noexcept {
  switch (c) {
    case 'N': return "ACGT";
    case 'R': return "AG";
    case 'Y': return "CT";
    case 'S': return "CG";
    case 'W': return "AT";
    case 'K': return "GT";
    case 'M': return "AC";
    case 'B': return "CGT";
    case 'D': return "AGT";
    case 'H': return "ACT";
    case 'V': return "ACG";
    default: return {};
  }
}

char upper(char c) noexcept { return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 32) : c; }

struct Pending {
  std::string id;
  std::size_t header_line = 0;
  std::string bases;
};

}  // namespace

IngestionPolicy policy_from_string(std::string_view name) {
  if (name == "strict") return IngestionPolicy::Strict;
  if (name == "skip-ambiguous") return IngestionPolicy::SkipAmbiguous;
  throw UsageError("unknown ingestion policy '" + std::string(name) +
                   "' (expected strict or skip-ambiguous)");
}

std::string_view to_string(IngestionPolicy p) noexcept {
  return p == IngestionPolicy::Strict ? "strict" : "skip-ambiguous";
}

ParseResult parse(std::istream& in, IngestionPolicy policy, std::uint64_t seed) {
  ParseResult result;
  std::mt19937_64 rng(seed);
  std::unordered_set<std::string> seen;
  std::optional<Pending> current;

  const auto finish = [&] {
    if (!current) return;
    if (current->bases.empty()) {
      throw InputFormatError("record '" + current->id + "' (line " +
                             std::to_string(current->header_line) + ") has no sequence");
    }
    result.records.push_back(
        NucleotideSequence::from_string(std::move(current->id), current->bases));
    current.reset();
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    if (line.front() == '>') {
      finish();
      const auto stop = line.find_first_of(" \t", 1);
      std::string id = line.substr(1, stop == std::string::npos ? std::string::npos : stop - 1);
      if (id.empty()) {
        throw InputFormatError("line " + std::to_string(line_no) + ": header has no id");
      }
      if (!seen.insert(id).second) {
        throw InputFormatError("line " + std::to_string(line_no) + ": duplicate record id '" +
                               id + "'");
      }
      current = Pending{std::move(id), line_no, {}};
      continue;
    }
    if (!current) {
      throw InputFormatError("line " + std::to_string(line_no) +
                             ": sequence data before the first '>' header");
    }
    for (char raw : line) {
      if (raw == ' ' || raw == '\t') continue;
      const char c = upper(raw);
      if (base_from_char(c)) {
        current->bases.push_back(c);
        continue;
      }
      const std::size_t position = current->bases.size() + 1;
      const auto options = expansion(c);
      if (policy == IngestionPolicy::SkipAmbiguous && !options.empty()) {
        const char pick = options[rng() % options.size()];
        result.substitutions.push_back({current->id, position, c, pick});
        current->bases.push_back(pick);
        continue;
      }
      throw InputFormatError("record '" + current->id + "', line " + std::to_string(line_no) +
                             ": invalid character '" + std::string(1, raw) +
                             "' at position " + std::to_string(position));
    }
  }
  finish();
  if (result.records.empty()) throw InputFormatError("FASTA input contains no records");
  return result;
}

ParseResult parse(std::string_view text, IngestionPolicy policy, std::uint64_t seed) {
  std::istringstream in{std::string(text)};
  return parse(in, policy, seed);
}

void write(std::ostream& out, const NucleotideSequence& seq, std::size_t line_width) {
  out << '>' << seq.id() << '\n';
  const auto bases = seq.bases();
  for (std::size_t i = 0; i < bases.size(); i += line_width) {
    out << bases.substr(i, line_width) << '\n';
  }
}

}  // namespace tbp::fasta
