#pragma once

#include <random>

#include "tbp/segments.hpp"

namespace testgen {

// Random gap-free labeling whose run lengths are mostly short enough to
// exercise the 50 bp rule.
inline tbp::SegmentList random_segments(std::mt19937_64& rng, std::size_t max_runs = 12) {
  const std::size_t runs = 1 + rng() % max_runs;
  std::vector<tbp::Segment> segments;
  std::size_t start = 1;
  auto label = (rng() & 1) ? tbp::Label::Exon : tbp::Label::Intron;
  for (std::size_t i = 0; i < runs; ++i) {
    const std::size_t len = 1 + (rng() % 4 == 0 ? rng() % 300 : rng() % 70);
    segments.push_back({start, start + len - 1, label});
    start += len;
    label = label == tbp::Label::Exon ? tbp::Label::Intron : tbp::Label::Exon;
  }
  return tbp::SegmentList(std::move(segments), start - 1);
}

inline bool well_formed(const tbp::SegmentList& list) {
  std::size_t next = 1;
  const auto& s = list.segments();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].start != next || s[i].end < s[i].start) return false;
    if (i > 0 && s[i].label == s[i - 1].label) return false;
    next = s[i].end + 1;
  }
  return next == list.sequence_length() + 1;
}

}  // namespace testgen
