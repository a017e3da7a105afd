#include "tbp/predictor.hpp"

#include "tbp/error.hpp"

namespace tbp::predictor {

namespace {

Label flip(Label l) noexcept { return l == Label::Exon ? Label::Intron : Label::Exon; }

SegmentList relabel_interior(const SegmentList& list, Label target, std::size_t min_length) {
  std::vector<Segment> out = list.segments();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!list.is_boundary(i) && out[i].label == target && out[i].length() < min_length) {
      out[i].label = flip(target);
    }
  }
  return SegmentList(std::move(out), list.sequence_length());
}

}  // namespace

Classification classify_by_derivative(const periodicity::WalkTrajectory& trajectory,
                                      const td::TdParams& params) {
  if (trajectory.values.empty()) throw UsageError("cannot classify an empty trajectory");
  td::TdTrace trace = td::track(trajectory.values, params);
  std::vector<Label> labels;
  labels.reserve(trace.size());
  for (double d : trace.derivative) labels.push_back(d > 0.0 ? Label::Exon : Label::Intron);
  return {std::move(trace), SegmentList::from_labels(labels)};
}

SegmentList remove_short_segments(const SegmentList& list, std::size_t min_length) {
  if (min_length < 1) throw ParameterError("minimum segment length must be at least 1");
  return relabel_interior(relabel_interior(list, Label::Exon, min_length), Label::Intron,
                          min_length);
}

Prediction predict(const NucleotideSequence& seq, const td::TdParams& params,
                   periodicity::Normalization normalization, std::size_t min_length) {
  auto trajectory = periodicity::walk(seq, normalization);
  auto [trace, raw] = classify_by_derivative(trajectory, params);
  auto filtered = remove_short_segments(raw, min_length);
  return {std::move(trajectory), std::move(trace), std::move(raw), std::move(filtered)};
}

}  // namespace tbp::predictor
