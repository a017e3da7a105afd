#include "tbp/evaluation.hpp"

#include <algorithm>
#include <string>

#include "tbp/error.hpp"

namespace tbp::evaluation {

ConfusionCounts confusion(const SegmentList& predicted, const SegmentList& truth) {
  if (predicted.sequence_length() != truth.sequence_length()) {
    throw UsageError("prediction covers " + std::to_string(predicted.sequence_length()) +
                     " positions but truth covers " +
                     std::to_string(truth.sequence_length()));
  }
  ConfusionCounts c;
  const auto& p = predicted.segments();
  const auto& t = truth.segments();
  std::size_t i = 0, j = 0;
  std::size_t pos = 1;
  // Sweep both run lists; each step consumes the overlap of the current pair.
  while (i < p.size() && j < t.size()) {
    const std::size_t end = std::min(p[i].end, t[j].end);
    const std::uint64_t n = end - pos + 1;
    const bool pred_exon = p[i].label == Label::Exon;
    const bool true_exon = t[j].label == Label::Exon;
    if (pred_exon && true_exon) c.tp += n;
    else if (!pred_exon && !true_exon) c.tn += n;
    else if (pred_exon) c.fp += n;
    else c.fn += n;
    pos = end + 1;
    if (p[i].end == end) ++i;
    if (t[j].end == end) ++j;
  }
  return c;
}

PredictionMetrics metrics(const ConfusionCounts& c) {
  if (c.tp + c.fn == 0) {
    throw UndefinedMetricError("sensitivity is undefined: truth contains no exon positions");
  }
  if (c.tn + c.fp == 0) {
    throw UndefinedMetricError("specificity is undefined: truth contains no intron positions");
  }
  PredictionMetrics m;
  m.sensitivity = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  m.specificity = static_cast<double>(c.tn) / static_cast<double>(c.tn + c.fp);
  m.accuracy = (m.sensitivity + m.specificity) / 2.0;
  return m;
}

}  // namespace tbp::evaluation
