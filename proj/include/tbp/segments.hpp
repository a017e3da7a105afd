#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace tbp {

enum class Label { Exon, Intron };

std::string_view to_string(Label l) noexcept;  // "exon" / "intron"
Label label_from_string(std::string_view s);  // throws InputFormatError

struct Segment {
  std::size_t start = 1;  ///< 1-based, inclusive
  std::size_t end = 1;    ///< 1-based, inclusive
  Label label = Label::Intron;

  std::size_t length() const noexcept { return end - start + 1; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Ordered, gap-free, non-overlapping maximal runs covering [1, N].
class SegmentList {
 public:
  SegmentList() = default;

  /// Validates coverage of [1, N] and ordering; adjacent equal labels are
  /// merged. Throws UsageError on gaps, overlap, or out-of-range ends.
  SegmentList(std::vector<Segment> segments, std::size_t sequence_length);

  static SegmentList from_labels(std::span<const Label> labels);

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  std::size_t sequence_length() const noexcept { return length_; }
  std::size_t size() const noexcept { return segments_.size(); }

  std::vector<Label> labels() const;
  std::size_t count(Label l) const noexcept;

  /// Touches position 1 or N.
  bool is_boundary(std::size_t index) const noexcept {
    return index == 0 || index + 1 == segments_.size();
  }

  friend bool operator==(const SegmentList&, const SegmentList&) = default;

 private:
  std::vector<Segment> segments_;
  std::size_t length_ = 0;
};

}  // namespace tbp
