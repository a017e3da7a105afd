#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tbp/segments.hpp"

namespace tbp::annotation {

struct Interval {
  std::size_t start = 1;  ///< 1-based, inclusive
  std::size_t end = 1;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Exon intervals of one sequence, sorted and non-overlapping.
struct AnnotationRecord {
  std::string id;
  std::vector<Interval> exons;
  friend bool operator==(const AnnotationRecord&, const AnnotationRecord&) = default;
};

/// Three tab-separated columns per line: id, start, end (one exon per
/// line). Blank lines and lines starting with '#' are skipped. Records come
/// back ordered by id.
std::vector<AnnotationRecord> parse(std::istream& in);
std::vector<AnnotationRecord> parse(std::string_view text);

void write(std::ostream& out, const AnnotationRecord& rec);

/// Exons become EXON segments, gaps INTRON segments.
SegmentList to_segments(const AnnotationRecord& rec, std::size_t sequence_length);

/// Reads `id,start,end,label` CSV (with header) as written by the pipeline.
std::vector<std::pair<std::string, SegmentList>> parse_segments_csv(std::istream& in);

}  // namespace tbp::annotation
