#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tbp/annotation.hpp"
#include "tbp/evaluation.hpp"
#include "tbp/fasta.hpp"
#include "tbp/periodicity.hpp"
#include "tbp/predictor.hpp"

namespace tbp::pipeline {

inline constexpr double kDefaultGain = 0.001;
inline constexpr const char* kTrajectoryHeader =
    "position,base,walk_raw,walk_norm,smoothed,derivative,label";

enum class OutputFormat { Csv, Json };
OutputFormat format_from_string(std::string_view name);

struct PipelineConfig {
  std::vector<double> gains{kDefaultGain};  ///< one entry, or the grid
  double step = 1.0;
  periodicity::Normalization normalization = periodicity::Normalization::PerBase;
  std::size_t min_segment = predictor::kDefaultMinSegment;
  fasta::IngestionPolicy policy = fasta::IngestionPolicy::Strict;
  std::uint64_t rng_seed = 0;
  unsigned threads = 0;  ///< 0 = hardware concurrency

  /// Throws UsageError / ParameterError.
  void validate() const;
};

/// "0.1,0.01" -> {0.1, 0.01}. Empty lists, non-numbers, non-positive or
/// duplicate values throw UsageError.
std::vector<double> parse_gain_list(std::string_view text);

/// Reads TBP_WALK_THREADS; unset or unparsable means 0 (auto).
unsigned threads_from_env();

struct Evaluation {
  evaluation::ConfusionCounts confusion;
  evaluation::PredictionMetrics metrics;
};

struct RunResult {
  std::string id;
  double gain = 0.0;
  std::string bases;
  std::vector<double> walk_raw;
  predictor::Prediction prediction;
  std::optional<Evaluation> evaluation;
};

struct BestGain {
  std::string id;
  double gain = 0.0;
  double accuracy = 0.0;
};

struct RunReport {
  std::vector<RunResult> runs;  ///< sorted by id, then gain
  std::vector<BestGain> best;   ///< only with a grid and a truth
  std::vector<fasta::Substitution> substitutions;
};

/// With `truth`, every annotation id must name a sequence; a sequence without
/// annotation lines is scored against an all-intron truth (and so raises
/// UndefinedMetricError).
RunReport run(const PipelineConfig& config, const std::vector<NucleotideSequence>& sequences,
              const std::vector<annotation::AnnotationRecord>* truth = nullptr);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double x);

std::string trajectory_csv(const RunResult& run);
std::string segments_csv(const std::string& id, const SegmentList& segments);
struct MetricsRow {
  std::string id;
  std::optional<double> gain;  ///< null in JSON when absent (tbp-walk eval)
  Evaluation evaluation;
};

std::vector<MetricsRow> metrics_rows(const RunReport& report);
/// Array of {"id","R","TP","TN","FP","FN","Sn","Sp","AC"} objects.
std::string metrics_json(const std::vector<MetricsRow>& rows);
std::string metrics_csv(const std::vector<MetricsRow>& rows);
std::string report_json(const RunReport& report, const PipelineConfig& config);

/// File name stem for one run: "<id>_R<gain>" with unsafe id characters
/// replaced by '_'.
std::string run_stem(const RunResult& run);

/// Writes trajectory_<stem>.csv and segments_<stem>.csv per run, metrics.json
/// or metrics.csv when any run was scored, and report.json.
void write_outputs(const RunReport& report, const PipelineConfig& config,
                   const std::filesystem::path& dir, OutputFormat format);

}  // namespace tbp::pipeline
