#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tbp/annotation.hpp"
#include "tbp/error.hpp"
#include "tbp/evaluation.hpp"
#include "tbp/fasta.hpp"
#include "tbp/periodicity.hpp"
#include "tbp/predictor.hpp"
#include "tbp/synthetic.hpp"
#include "tbp/td.hpp"

namespace py = pybind11;
using namespace tbp;

namespace {

using SegmentTuple = std::tuple<std::size_t, std::size_t, std::string>;

std::vector<SegmentTuple> to_tuples(const SegmentList& list) {
  std::vector<SegmentTuple> out;
  for (const auto& s : list.segments()) out.emplace_back(s.start, s.end, std::string(to_string(s.label)));
  return out;
}

SegmentList from_tuples(const std::vector<SegmentTuple>& tuples) {
  std::vector<Segment> segments;
  for (const auto& [start, end, label] : tuples) segments.push_back({start, end, label_from_string(label)});
  const std::size_t n = segments.empty() ? 0 : segments.back().end;
  return SegmentList(std::move(segments), n);
}

td::TdParams fhan_params(double gain, double step) {
  td::TdParams p;
  p.gain = gain;
  p.step = step;
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tracking-differentiator exon prediction from 3-base periodicity walks.";

  py::register_exception<Error>(m, "Error");
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<InputFormatError>(m, "InputFormatError", PyExc_ValueError);
  py::register_exception<UndefinedMetricError>(m, "UndefinedMetricError", PyExc_ArithmeticError);
  py::register_exception<UndefinedBackgroundError>(m, "UndefinedBackgroundError",
                                                   PyExc_ArithmeticError);

  m.def("fst", &td::fst, py::arg("error"), py::arg("velocity"), py::arg("gain"), py::arg("step"));

  m.def(
      "td_track",
      [](const std::vector<double>& signal, double gain, double step,
         std::optional<std::pair<double, double>> init) {
        std::optional<td::TdState> state;
        if (init) state = td::TdState{init->first, init->second};
        auto trace = td::track(signal, fhan_params(gain, step), state);
        return std::make_pair(std::move(trace.smoothed), std::move(trace.derivative));
      },
      py::arg("signal"), py::arg("gain"), py::arg("step") = 1.0, py::arg("init") = py::none(),
      "Discrete TD. Returns (smoothed, derivative).");

  m.def(
      "integrate_continuous",
      [](const std::vector<double>& signal, double gain, const std::string& nonlinearity,
         double alpha1, double alpha2, double integrator_step) {
        td::TdParams p;
        p.gain = gain;
        p.integrator_step = integrator_step;
        if (nonlinearity == "alpha") p.nonlinearity = td::Alpha{alpha1, alpha2};
        else if (nonlinearity == "sign") p.nonlinearity = td::Sign{};
        else throw ParameterError("nonlinearity must be 'alpha' or 'sign'");
        auto trace = td::integrate_continuous(signal, p);
        return std::make_pair(std::move(trace.smoothed), std::move(trace.derivative));
      },
      py::arg("signal"), py::arg("gain"), py::arg("nonlinearity") = "alpha",
      py::arg("alpha1") = 0.5, py::arg("alpha2") = 0.5, py::arg("integrator_step") = 0.01);

  m.def("f_alpha", &td::f_alpha);
  m.def("f_sign", &td::f_sign);

  m.def(
      "ps_n3",
      [](const std::string& bases) {
        return periodicity::ps_n3(
            periodicity::count_codon_positions(NucleotideSequence::from_string("seq", bases)));
      },
      py::arg("bases"));
  m.def(
      "dft_power_at_third",
      [](const std::string& bases) {
        return periodicity::dft_power_at_third(NucleotideSequence::from_string("seq", bases));
      },
      py::arg("bases"));
  m.def(
      "walk",
      [](const std::string& bases, const std::string& normalization) {
        return periodicity::walk(NucleotideSequence::from_string("seq", bases),
                                 periodicity::normalization_from_string(normalization))
            .values;
      },
      py::arg("bases"), py::arg("normalization") = "per-base");

  m.def(
      "predict",
      [](const std::string& bases, double gain, double step, const std::string& normalization,
         std::size_t min_segment) {
        const auto pred =
            predictor::predict(NucleotideSequence::from_string("seq", bases), fhan_params(gain, step),
                               periodicity::normalization_from_string(normalization), min_segment);
        return to_tuples(pred.segments);
      },
      py::arg("bases"), py::arg("gain") = 0.001, py::arg("step") = 1.0,
      py::arg("normalization") = "per-base", py::arg("min_segment") = predictor::kDefaultMinSegment,
      "Returns [(start, end, label), ...] with 1-based inclusive coordinates.");

  m.def(
      "remove_short_segments",
      [](const std::vector<SegmentTuple>& segments, std::size_t min_length) {
        return to_tuples(predictor::remove_short_segments(from_tuples(segments), min_length));
      },
      py::arg("segments"), py::arg("min_length") = predictor::kDefaultMinSegment);

  m.def(
      "evaluate",
      [](const std::vector<SegmentTuple>& predicted, const std::vector<SegmentTuple>& truth) {
        const auto c = evaluation::confusion(from_tuples(predicted), from_tuples(truth));
        const auto mt = evaluation::metrics(c);
        py::dict d;
        d["TP"] = c.tp;
        d["TN"] = c.tn;
        d["FP"] = c.fp;
        d["FN"] = c.fn;
        d["Sn"] = mt.sensitivity;
        d["Sp"] = mt.specificity;
        d["AC"] = mt.accuracy;
        return d;
      },
      py::arg("predicted"), py::arg("truth"));

  m.def(
      "generate_synthetic",
      [](std::size_t blocks, std::size_t exon_len, std::size_t intron_len, double bias,
         std::uint64_t seed) {
        synthetic::SyntheticSpec spec{blocks, exon_len, intron_len, bias, seed, "synthetic"};
        const auto gene = synthetic::generate(spec);
        std::vector<std::pair<std::size_t, std::size_t>> exons;
        for (const auto& e : gene.truth.exons) exons.emplace_back(e.start, e.end);
        return std::make_pair(std::string(gene.sequence.bases()), exons);
      },
      py::arg("blocks"), py::arg("exon_len"), py::arg("intron_len"), py::arg("bias"),
      py::arg("seed"), "Returns (bases, [(exon_start, exon_end), ...]).");

  m.def(
      "parse_fasta",
      [](const std::string& text, const std::string& policy, std::uint64_t seed) {
        const auto parsed = fasta::parse(text, fasta::policy_from_string(policy), seed);
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& r : parsed.records) out.emplace_back(r.id(), std::string(r.bases()));
        return out;
      },
      py::arg("text"), py::arg("policy") = "strict", py::arg("seed") = 0);
}
