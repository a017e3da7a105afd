#include "tbp/sequence.hpp"

#include "tbp/error.hpp"

namespace tbp {

std::optional<Base> base_from_char(char c) noexcept {
  switch (c) {
    case 'A': case 'a': return Base::A;
    case 'C': case 'c': return Base::C;
    case 'G': case 'g': return Base::G;
    case 'T': case 't': return Base::T;
    default: return std::nullopt;
  }
}

NucleotideSequence NucleotideSequence::from_string(std::string id, std::string_view bases) {
  if (bases.empty()) throw InputFormatError("sequence '" + id + "' is empty");
  std::string folded;
  folded.reserve(bases.size());
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const auto b = base_from_char(bases[i]);
    if (!b) {
      throw InputFormatError("sequence '" + id + "': invalid base '" +
                             std::string(1, bases[i]) + "' at position " +
                             std::to_string(i + 1));
    }
    folded.push_back(letter(*b));
  }
  return NucleotideSequence(std::move(id), std::move(folded));
}

NucleotideSequence NucleotideSequence::prefix(std::size_t length) const {
  if (length == 0 || length > bases_.size()) {
    throw UsageError("prefix length out of range");
  }
  return NucleotideSequence(id_, bases_.substr(0, length));
}

}  // namespace tbp
