// tbp-walk: exon prediction from TD-smoothed 3-base periodicity walks.

#include <algorithm>
#include <cstdio>
#include <map>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "tbp/annotation.hpp"
#include "tbp/error.hpp"
#include "tbp/fasta.hpp"
#include "tbp/pipeline.hpp"
#include "tbp/synthetic.hpp"

#include "json.hpp"

namespace {

using namespace tbp;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return in;
}

struct PredictOptions {
  std::string fasta;
  std::string annotation;
  double gain = pipeline::kDefaultGain;
  std::string grid;
  double step = 1.0;
  std::string norm = "per-base";
  std::size_t min_segment = predictor::kDefaultMinSegment;
  std::string policy = "strict";
  std::uint64_t seed = 0;
  std::string out = ".";
  std::string format = "json";
};

int run_predict(const PredictOptions& o, bool grid_given, bool gain_given) {
  if (grid_given && gain_given) throw UsageError("--gain and --grid are mutually exclusive");

  pipeline::PipelineConfig config;
  config.gains = grid_given ? pipeline::parse_gain_list(o.grid) : std::vector<double>{o.gain};
  config.step = o.step;
  config.normalization = periodicity::normalization_from_string(o.norm);
  config.min_segment = o.min_segment;
  config.policy = fasta::policy_from_string(o.policy);
  config.rng_seed = o.seed;
  config.threads = pipeline::threads_from_env();
  const auto format = pipeline::format_from_string(o.format);
  config.validate();

  auto fasta_in = open_input(o.fasta);
  auto parsed = fasta::parse(fasta_in, config.policy, config.rng_seed);

  std::optional<std::vector<annotation::AnnotationRecord>> truth;
  if (!o.annotation.empty()) {
    auto ann_in = open_input(o.annotation);
    truth = annotation::parse(ann_in);
  }

  auto report = pipeline::run(config, parsed.records, truth ? &*truth : nullptr);
  report.substitutions = std::move(parsed.substitutions);
  pipeline::write_outputs(report, config, o.out, format);

  for (const auto& r : report.runs) {
    std::cout << r.id << "\tR=" << pipeline::format_double(r.gain)
              << "\texon_positions=" << r.prediction.segments.count(Label::Exon);
    if (r.evaluation) {
      const auto& m = r.evaluation->metrics;
      std::cout << "\tSn=" << m.sensitivity << "\tSp=" << m.specificity << "\tAC=" << m.accuracy;
    }
    std::cout << '\n';
  }
  for (const auto& b : report.best) {
    std::cout << "best\t" << b.id << "\tR=" << pipeline::format_double(b.gain) << "\tAC=" << b.accuracy
              << '\n';
  }
  return 0;
}

int run_synth(const synthetic::SyntheticSpec& spec, const std::string& out_dir) {
  const auto gene = synthetic::generate(spec);
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  {
    std::ofstream fa(dir / "synthetic.fa", std::ios::binary);
    fasta::write(fa, gene.sequence);
    std::ofstream tsv(dir / "synthetic.tsv", std::ios::binary);
    annotation::write(tsv, gene.truth);
  }
  nlohmann::ordered_json log;
  log["generator"] = synthetic::kGeneratorName;
  log["seed"] = spec.seed;
  log["blocks"] = spec.blocks;
  log["exon_length"] = spec.exon_length;
  log["intron_length"] = spec.intron_length;
  log["bias"] = spec.bias;
  log["length"] = gene.sequence.size();
  std::ofstream(dir / "synth.json", std::ios::binary) << log.dump(2) << '\n';
  std::cout << (dir / "synthetic.fa").string() << '\n' << (dir / "synthetic.tsv").string() << '\n';
  return 0;
}

int run_eval(const std::string& pred_path, const std::string& truth_path) {
  auto pred_in = open_input(pred_path);
  const auto predicted = annotation::parse_segments_csv(pred_in);
  auto truth_in = open_input(truth_path);
  const auto truth = annotation::parse(truth_in);

  std::map<std::string, const annotation::AnnotationRecord*> by_id;
  for (const auto& rec : truth) by_id[rec.id] = &rec;
  for (const auto& entry : by_id) {
    const auto& id = entry.first;
    const bool found = std::any_of(predicted.begin(), predicted.end(),
                                   [&](const auto& p) { return p.first == id; });
    if (!found) throw InputFormatError("truth id '" + id + "' has no predicted segments");
  }

  std::vector<pipeline::MetricsRow> rows;
  for (const auto& [id, segments] : predicted) {
    const auto it = by_id.find(id);
    const annotation::AnnotationRecord empty{id, {}};
    const auto truth_segments =
        annotation::to_segments(it == by_id.end() ? empty : *it->second, segments.sequence_length());
    const auto c = evaluation::confusion(segments, truth_segments);
    rows.push_back({id, std::nullopt, {c, evaluation::metrics(c)}});
  }
  std::cout << pipeline::metrics_json(rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exon prediction from tracking-differentiator smoothed 3-base periodicity walks",
               "tbp-walk"};
  app.require_subcommand(1);

  PredictOptions predict;
  auto* p = app.add_subcommand("predict", "predict exon/intron segments for FASTA records");
  p->add_option("--fasta", predict.fasta, "input FASTA")->required();
  p->add_option("--ann", predict.annotation, "exon annotation TSV (id, start, end)");
  auto* gain_opt = p->add_option("--gain", predict.gain, "TD gain R");
  auto* grid_opt = p->add_option("--grid", predict.grid, "comma-separated list of R values");
  p->add_option("--step", predict.step, "TD step h");
  p->add_option("--norm", predict.norm, "raw | per-base | background");
  p->add_option("--min-segment", predict.min_segment, "shortest interior segment kept");
  p->add_option("--policy", predict.policy, "strict | skip-ambiguous");
  p->add_option("--seed", predict.seed, "seed for ambiguity resolution");
  p->add_option("--out", predict.out, "output directory");
  p->add_option("--format", predict.format, "metrics format: csv | json");

  synthetic::SyntheticSpec spec;
  std::string synth_out = ".";
  auto* s = app.add_subcommand("synth", "generate a synthetic gene and its annotation");
  s->add_option("--blocks", spec.blocks, "number of exon blocks")->required();
  s->add_option("--exon-len", spec.exon_length, "exon block length")->required();
  s->add_option("--intron-len", spec.intron_length, "intron block length")->required();
  s->add_option("--bias", spec.bias, "per-phase preferred-base probability")->required();
  s->add_option("--seed", spec.seed, "RNG seed")->required();
  s->add_option("--id", spec.id, "record id");
  s->add_option("--out", synth_out, "output directory");

  std::string pred_path, truth_path;
  auto* e = app.add_subcommand("eval", "score predicted segments against an annotation");
  e->add_option("--pred", pred_path, "segments CSV (id,start,end,label)")->required();
  e->add_option("--truth", truth_path, "exon annotation TSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (p->parsed()) return run_predict(predict, grid_opt->count() > 0, gain_opt->count() > 0);
    if (s->parsed()) return run_synth(spec, synth_out);
    return run_eval(pred_path, truth_path);
  } catch (const tbp::Error& err) {
    std::cerr << "tbp-walk: " << err.what() << '\n';
    return err.exit_code();
  } catch (const std::exception& err) {
    std::cerr << "tbp-walk: " << err.what() << '\n';
    return 1;
  }
}
