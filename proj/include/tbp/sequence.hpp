#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tbp {

enum class Base : std::uint8_t { A = 0, C = 1, G = 2, T = 3 };

inline constexpr std::array<char, 4> kBaseLetters{'A', 'C', 'G', 'T'};
inline constexpr char letter(Base b) noexcept { return kBaseLetters[static_cast<int>(b)]; }

/// Upper- or lowercase A/C/G/T; anything else is nullopt.
std::optional<Base> base_from_char(char c) noexcept;

/// Validated A/C/G/T sequence. Position k (1-based) has codon phase
/// ((k - 1) mod 3) + 1, i.e. the reading frame is anchored at the first base.
class NucleotideSequence {
 public:
  /// Folds case; throws InputFormatError on any other character or on an
  /// empty sequence.
  static NucleotideSequence from_string(std::string id, std::string_view bases);

  const std::string& id() const noexcept { return id_; }
  std::string_view bases() const noexcept { return bases_; }
  std::size_t size() const noexcept { return bases_.size(); }
  Base operator[](std::size_t i) const noexcept { return *base_from_char(bases_[i]); }

  NucleotideSequence prefix(std::size_t length) const;

  friend bool operator==(const NucleotideSequence&, const NucleotideSequence&) = default;

 private:
  NucleotideSequence(std::string id, std::string bases)
      : id_(std::move(id)), bases_(std::move(bases)) {}

  std::string id_;
  std::string bases_;
};

}  // namespace tbp
