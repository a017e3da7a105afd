#pragma once

#include "tbp/periodicity.hpp"
#include "tbp/segments.hpp"
#include "tbp/sequence.hpp"
#include "tbp/td.hpp"

namespace tbp::predictor {

inline constexpr std::size_t kDefaultMinSegment = 50;

struct Classification {
  td::TdTrace trace;
  SegmentList segments;
};

/// Smooths the trajectory with the discrete TD (auto init) and labels
/// position k EXON iff derivative[k] > 0.
Classification classify_by_derivative(const periodicity::WalkTrajectory& trajectory,
                                      const td::TdParams& params);

/// Relabels interior segments shorter than `min_length`: exons first, then
/// introns, re-merging runs after each pass. Segments touching either end of
/// the sequence are left alone.
SegmentList remove_short_segments(const SegmentList& list,
                                  std::size_t min_length = kDefaultMinSegment);

struct Prediction {
  periodicity::WalkTrajectory trajectory;
  td::TdTrace trace;
  SegmentList raw_segments;  ///< before short-segment removal
  SegmentList segments;
};

Prediction predict(const NucleotideSequence& seq, const td::TdParams& params,
                   periodicity::Normalization normalization,
                   std::size_t min_length = kDefaultMinSegment);

}  // namespace tbp::predictor
