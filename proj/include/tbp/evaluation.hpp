#pragma once

#include <cstdint>

#include "tbp/segments.hpp"

namespace tbp::evaluation {

/// Nucleotide counts with EXON as the positive class.
struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;

  std::uint64_t total() const noexcept { return tp + tn + fp + fn; }
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

struct PredictionMetrics {
  double sensitivity = 0.0;  ///< TP / (TP + FN)
  double specificity = 0.0;  ///< TN / (TN + FP)
  double accuracy = 0.0;     ///< (Sn + Sp) / 2
};

/// Throws UsageError when the lists cover different lengths.
ConfusionCounts confusion(const SegmentList& predicted, const SegmentList& truth);

/// Throws UndefinedMetricError when the truth has no exon or no intron
/// positions.
PredictionMetrics metrics(const ConfusionCounts& c);

}  // namespace tbp::evaluation
