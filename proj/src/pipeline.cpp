#include "tbp/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "tbp/error.hpp"
#include "tbp/synthetic.hpp"

namespace tbp::pipeline {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Job {
  std::size_t sequence = 0;
  double gain = 0.0;
};

ordered_json metrics_object(const MetricsRow& row) {
  const auto& c = row.evaluation.confusion;
  const auto& m = row.evaluation.metrics;
  ordered_json j;
  j["id"] = row.id;
  j["R"] = row.gain ? ordered_json(*row.gain) : ordered_json(nullptr);
  j["TP"] = c.tp;
  j["TN"] = c.tn;
  j["FP"] = c.fp;
  j["FN"] = c.fn;
  j["Sn"] = m.sensitivity;
  j["Sp"] = m.specificity;
  j["AC"] = m.accuracy;
  return j;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << content;
}

}  // namespace

OutputFormat format_from_string(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw UsageError("unknown format '" + std::string(name) + "' (expected csv or json)");
}

void PipelineConfig::validate() const {
  if (gains.empty()) throw UsageError("no gain value configured");
  std::set<double> distinct;
  for (double g : gains) {
    if (!(g > 0.0) || !std::isfinite(g)) {
      throw ParameterError("gain values must be positive, got " + format_double(g));
    }
    if (!distinct.insert(g).second) {
      throw UsageError("duplicate gain value " + format_double(g) + " in grid");
    }
  }
  if (!(step > 0.0) || !std::isfinite(step)) throw ParameterError("step h must be positive");
  if (min_segment < 1) throw ParameterError("minimum segment length must be at least 1");
}

std::vector<double> parse_gain_list(std::string_view text) {
  std::vector<double> out;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const auto pos = std::min(text.find(',', begin), text.size());
    const auto field = text.substr(begin, pos - begin);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw UsageError("invalid gain value '" + std::string(field) + "' in grid");
    }
    out.push_back(value);
    begin = pos + 1;
  }
  if (out.empty()) throw UsageError("empty gain grid");
  PipelineConfig probe;
  probe.gains = out;
  probe.validate();
  return out;
}

unsigned threads_from_env() {
  const char* raw = std::getenv("TBP_WALK_THREADS");
  if (raw == nullptr) return 0;
  unsigned value = 0;
  const std::string_view text(raw);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return (ec == std::errc{} && ptr == text.data() + text.size()) ? value : 0;
}

RunReport run(const PipelineConfig& config, const std::vector<NucleotideSequence>& sequences,
              const std::vector<annotation::AnnotationRecord>* truth) {
  config.validate();
  if (sequences.empty()) throw UsageError("no sequences to process");

  std::vector<std::size_t> order(sequences.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return sequences[a].id() < sequences[b].id(); });

  std::map<std::string, const annotation::AnnotationRecord*> by_id;
  std::vector<std::optional<SegmentList>> truth_segments(sequences.size());
  if (truth != nullptr) {
    for (const auto& rec : *truth) by_id[rec.id] = &rec;
    std::set<std::string> known;
    for (const auto& s : sequences) known.insert(s.id());
    for (const auto& [id, rec] : by_id) {
      if (!known.count(id)) {
        throw InputFormatError("annotation id '" + id + "' does not match any sequence");
      }
    }
    for (std::size_t i = 0; i < sequences.size(); ++i) {
      const auto it = by_id.find(sequences[i].id());
      const annotation::AnnotationRecord empty{sequences[i].id(), {}};
      truth_segments[i] =
          annotation::to_segments(it == by_id.end() ? empty : *it->second, sequences[i].size());
    }
  }

  std::vector<double> gains = config.gains;
  std::sort(gains.begin(), gains.end());
  std::vector<Job> jobs;
  for (std::size_t i : order) {
    for (double g : gains) jobs.push_back({i, g});
  }

  std::vector<RunResult> results(jobs.size());
  std::vector<std::exception_ptr> failures(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      try {
        const auto& seq = sequences[jobs[j].sequence];
        td::TdParams params;
        params.gain = jobs[j].gain;
        params.step = config.step;
        RunResult r;
        r.id = seq.id();
        r.gain = jobs[j].gain;
        r.bases = std::string(seq.bases());
        r.walk_raw = periodicity::walk(seq, periodicity::Normalization::Raw).values;
        r.prediction = predictor::predict(seq, params, config.normalization, config.min_segment);
        if (const auto& t = truth_segments[jobs[j].sequence]) {
          const auto c = evaluation::confusion(r.prediction.segments, *t);
          r.evaluation = Evaluation{c, evaluation::metrics(c)};
        }
        results[j] = std::move(r);
      } catch (...) {
        failures[j] = std::current_exception();
      }
    }
  };

  unsigned threads = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(jobs.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  RunReport report;
  report.runs = std::move(results);
  if (truth != nullptr && gains.size() > 1) {
    for (std::size_t j = 0; j < report.runs.size(); j += gains.size()) {
      BestGain best{report.runs[j].id, report.runs[j].gain, -1.0};
      for (std::size_t k = j; k < j + gains.size(); ++k) {
        const double ac = report.runs[k].evaluation->metrics.accuracy;
        if (ac > best.accuracy) best = {report.runs[k].id, report.runs[k].gain, ac};
      }
      report.best.push_back(best);
    }
  }
  return report;
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string trajectory_csv(const RunResult& run) {
  const auto& pred = run.prediction;
  const auto labels = pred.segments.labels();
  std::string out = kTrajectoryHeader;
  out += '\n';
  for (std::size_t k = 0; k < run.bases.size(); ++k) {
    out += std::to_string(k + 1);
    out += ',';
    out += run.bases[k];
    out += ',';
    out += format_double(run.walk_raw[k]);
    out += ',';
    out += format_double(pred.trajectory.values[k]);
    out += ',';
    out += format_double(pred.trace.smoothed[k]);
    out += ',';
    out += format_double(pred.trace.derivative[k]);
    out += ',';
    out += to_string(labels[k]);
    out += '\n';
  }
  return out;
}

std::string segments_csv(const std::string& id, const SegmentList& segments) {
  std::ostringstream out;
  out << "id,start,end,label\n";
  for (const Segment& s : segments.segments()) {
    out << id << ',' << s.start << ',' << s.end << ',' << to_string(s.label) << '\n';
  }
  return out.str();
}

std::vector<MetricsRow> metrics_rows(const RunReport& report) {
  std::vector<MetricsRow> rows;
  for (const auto& r : report.runs) {
    if (r.evaluation) rows.push_back({r.id, r.gain, *r.evaluation});
  }
  return rows;
}

std::string metrics_json(const std::vector<MetricsRow>& rows) {
  ordered_json array = ordered_json::array();
  for (const auto& row : rows) array.push_back(metrics_object(row));
  return array.dump(2) + "\n";
}

std::string metrics_csv(const std::vector<MetricsRow>& rows) {
  std::string out = "id,R,TP,TN,FP,FN,Sn,Sp,AC\n";
  for (const auto& row : rows) {
    const auto& c = row.evaluation.confusion;
    const auto& m = row.evaluation.metrics;
    out += row.id + ',' + (row.gain ? format_double(*row.gain) : std::string()) + ',' +
           std::to_string(c.tp) + ',' + std::to_string(c.tn) + ',' + std::to_string(c.fp) + ',' +
           std::to_string(c.fn) + ',' + format_double(m.sensitivity) + ',' +
           format_double(m.specificity) + ',' + format_double(m.accuracy) + '\n';
  }
  return out;
}

std::string report_json(const RunReport& report, const PipelineConfig& config) {
  ordered_json j;
  ordered_json cfg;
  cfg["gains"] = config.gains;
  cfg["step"] = config.step;
  cfg["normalization"] = std::string(periodicity::to_string(config.normalization));
  cfg["min_segment"] = config.min_segment;
  cfg["policy"] = std::string(fasta::to_string(config.policy));
  cfg["rng"] = synthetic::kGeneratorName;
  cfg["rng_seed"] = config.rng_seed;
  j["config"] = cfg;

  ordered_json subs = ordered_json::array();
  for (const auto& s : report.substitutions) {
    subs.push_back({{"id", s.id},
                    {"position", s.position},
                    {"original", std::string(1, s.original)},
                    {"replacement", std::string(1, s.replacement)}});
  }
  j["substitutions"] = subs;

  ordered_json runs = ordered_json::array();
  for (const auto& r : report.runs) {
    ordered_json o;
    o["id"] = r.id;
    o["R"] = r.gain;
    o["length"] = r.bases.size();
    o["exon_positions"] = r.prediction.segments.count(Label::Exon);
    o["segments"] = r.prediction.segments.size();
    o["trajectory_file"] = "trajectory_" + run_stem(r) + ".csv";
    o["segments_file"] = "segments_" + run_stem(r) + ".csv";
    if (r.evaluation) o["metrics"] = metrics_object({r.id, r.gain, *r.evaluation});
    runs.push_back(o);
  }
  j["runs"] = runs;

  ordered_json best = ordered_json::array();
  for (const auto& b : report.best) best.push_back({{"id", b.id}, {"R", b.gain}, {"AC", b.accuracy}});
  j["best"] = best;
  return j.dump(2) + "\n";
}

std::string run_stem(const RunResult& run) {
  std::string id = run.id;
  for (char& c : id) {
    const bool safe = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                      c == '.' || c == '-' || c == '_';
    if (!safe) c = '_';
  }
  return id + "_R" + format_double(run.gain);
}

void write_outputs(const RunReport& report, const PipelineConfig& config,
                   const std::filesystem::path& dir, OutputFormat format) {
  std::filesystem::create_directories(dir);
  for (const auto& r : report.runs) {
    const auto stem = run_stem(r);
    write_file(dir / ("trajectory_" + stem + ".csv"), trajectory_csv(r));
    write_file(dir / ("segments_" + stem + ".csv"), segments_csv(r.id, r.prediction.segments));
  }
  const auto rows = metrics_rows(report);
  if (!rows.empty()) {
    if (format == OutputFormat::Json) write_file(dir / "metrics.json", metrics_json(rows));
    else write_file(dir / "metrics.csv", metrics_csv(rows));
  }
  write_file(dir / "report.json", report_json(report, config));
}

}  // namespace tbp::pipeline
