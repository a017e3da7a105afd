#include "tbp/segments.hpp"

#include <string>

#include "tbp/error.hpp"

namespace tbp {

std::string_view to_string(Label l) noexcept {
  return l == Label::Exon ? "exon" : "intron";
}

Label label_from_string(std::string_view s) {
  if (s == "exon") return Label::Exon;
  if (s == "intron") return Label::Intron;
  throw InputFormatError("unknown label '" + std::string(s) + "'");
}

SegmentList::SegmentList(std::vector<Segment> segments, std::size_t sequence_length)
    : length_(sequence_length) {
  std::size_t next = 1;
  for (const Segment& s : segments) {
    if (s.start != next || s.end < s.start || s.end > sequence_length) {
      throw UsageError("segments must be ordered, gap-free and within [1, " +
                       std::to_string(sequence_length) + "]; offending segment " +
                       std::to_string(s.start) + "-" + std::to_string(s.end));
    }
    if (!segments_.empty() && segments_.back().label == s.label) {
      segments_.back().end = s.end;
    } else {
      segments_.push_back(s);
    }
    next = s.end + 1;
  }
  if (next != sequence_length + 1) {
    throw UsageError("segments cover [1, " + std::to_string(next - 1) +
                     "] but the sequence has length " + std::to_string(sequence_length));
  }
}

SegmentList SegmentList::from_labels(std::span<const Label> labels) {
  SegmentList out;
  out.length_ = labels.size();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!out.segments_.empty() && out.segments_.back().label == labels[i]) {
      ++out.segments_.back().end;
    } else {
      out.segments_.push_back({i + 1, i + 1, labels[i]});
    }
  }
  return out;
}

std::vector<Label> SegmentList::labels() const {
  std::vector<Label> out;
  out.reserve(length_);
  for (const Segment& s : segments_) out.insert(out.end(), s.length(), s.label);
  return out;
}

std::size_t SegmentList::count(Label l) const noexcept {
  std::size_t n = 0;
  for (const Segment& s : segments_) {
    if (s.label == l) n += s.length();
  }
  return n;
}

}  // namespace tbp
