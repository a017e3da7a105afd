#include <cmath>
#include <random>

#include "doctest.h"
#include "segment_gen.hpp"
#include "tbp/error.hpp"
#include "tbp/evaluation.hpp"

using namespace tbp;
using namespace tbp::evaluation;

namespace {
constexpr Label E = Label::Exon;
constexpr Label I = Label::Intron;

SegmentList list(std::vector<Segment> s) {
  const std::size_t n = s.back().end;
  return SegmentList(std::move(s), n);
}

SegmentList flipped(const SegmentList& l) {
  auto labels = l.labels();
  for (auto& x : labels) x = x == E ? I : E;
  return SegmentList::from_labels(labels);
}
}  // namespace

TEST_CASE("confusion worked examples") {
  CHECK(confusion(list({{1, 100, E}}), list({{1, 100, E}})) == ConfusionCounts{100, 0, 0, 0});
  CHECK(confusion(list({{1, 100, I}}), list({{1, 100, E}})) == ConfusionCounts{0, 0, 0, 100});
  CHECK(confusion(list({{1, 60, E}, {61, 100, I}}), list({{1, 50, E}, {51, 100, I}})) ==
        ConfusionCounts{50, 40, 10, 0});
  CHECK_THROWS_AS(confusion(list({{1, 10, E}}), list({{1, 11, E}})), UsageError);
}

TEST_CASE("metrics worked examples") {
  const auto perfect = metrics({100, 100, 0, 0});
  CHECK(perfect.sensitivity == 1.0);
  CHECK(perfect.specificity == 1.0);
  CHECK(perfect.accuracy == 1.0);

  const auto m = metrics({50, 75, 25, 50});
  CHECK(m.sensitivity == 0.5);
  CHECK(m.specificity == 0.75);
  CHECK(m.accuracy == 0.625);

  // Reported triple 0.9763 / 0.5992 / 0.7877: mean is 0.78775.
  const double ac = (0.9763 + 0.5992) / 2.0;
  CHECK(ac == doctest::Approx(0.78775).epsilon(1e-12));
  CHECK(std::abs(ac - 0.7877) <= 0.00005 + 1e-12);

  CHECK_THROWS_WITH_AS(metrics({0, 10, 3, 0}), doctest::Contains("no exon"), UndefinedMetricError);
  CHECK_THROWS_WITH_AS(metrics({10, 0, 0, 3}), doctest::Contains("no intron"),
                       UndefinedMetricError);
}

TEST_CASE("confusion properties") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 2000; ++i) {
    const auto a = testgen::random_segments(rng);
    auto labels = a.labels();
    for (auto& l : labels) {
      if (rng() % 7 == 0) l = l == E ? I : E;
    }
    const auto b = SegmentList::from_labels(labels);

    const auto ab = confusion(a, b);
    const auto ba = confusion(b, a);
    REQUIRE(ab.total() == a.sequence_length());
    REQUIRE(ab.tp == ba.tp);
    REQUIRE(ab.tn == ba.tn);
    REQUIRE(ab.fp == ba.fn);
    REQUIRE(ab.fn == ba.fp);

    // Splitting runs into unit segments leaves the counts alone.
    std::vector<Segment> unit;
    for (std::size_t k = 0; k < labels.size(); ++k) unit.push_back({k + 1, k + 1, labels[k]});
    REQUIRE(confusion(a, SegmentList(unit, labels.size())) == ab);

    const auto fab = confusion(flipped(a), flipped(b));
    if (ab.tp + ab.fn > 0 && ab.tn + ab.fp > 0) {
      const auto m = metrics(ab);
      const auto fm = metrics(fab);
      REQUIRE(fm.sensitivity == m.specificity);
      REQUIRE(fm.specificity == m.sensitivity);
      REQUIRE(fm.accuracy == m.accuracy);
      REQUIRE(m.accuracy == (m.sensitivity + m.specificity) / 2.0);
      REQUIRE(m.sensitivity >= 0.0);
      REQUIRE(m.sensitivity <= 1.0);
      REQUIRE(m.specificity >= 0.0);
      REQUIRE(m.specificity <= 1.0);
    }
  }
}
