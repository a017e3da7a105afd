#include <algorithm>
#include <chrono>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tbp/error.hpp"
#include "tbp/periodicity.hpp"

using namespace tbp;
using namespace tbp::periodicity;

namespace {

NucleotideSequence seq(std::string_view bases) { return NucleotideSequence::from_string("s", bases); }

double ps_of(std::string_view bases) { return ps_n3(count_codon_positions(seq(bases))); }

}  // namespace

TEST_CASE("codon position counts") {
  const auto acg = count_codon_positions(seq("ACG"));
  CHECK(acg.at(Base::A, 0) == 1);
  CHECK(acg.at(Base::C, 1) == 1);
  CHECK(acg.at(Base::G, 2) == 1);
  CHECK(acg.base_total(Base::T) == 0);
  CHECK(acg.total() == 3);

  const auto a6 = count_codon_positions(seq("AAAAAA"));
  for (std::size_t i = 0; i < 3; ++i) CHECK(a6.at(Base::A, i) == 2);
  CHECK(a6.base_total(Base::C) + a6.base_total(Base::G) + a6.base_total(Base::T) == 0);

  const auto atg = count_codon_positions(seq("ATGATG"));
  CHECK(atg.at(Base::A, 0) == 2);
  CHECK(atg.at(Base::T, 1) == 2);
  CHECK(atg.at(Base::G, 2) == 2);
  CHECK(atg.at(Base::A, 1) == 0);
}

TEST_CASE("closed form worked values") {
  CHECK(ps_of("AAA") == 0.0);
  CHECK(ps_of("ACG") == 3.0);
  CHECK(ps_of("ATGATG") == 12.0);

  CHECK(dft_power_at_third(seq("AAA")) == doctest::Approx(0.0));
  CHECK(dft_power_at_third(seq("ACG")) == doctest::Approx(3.0));
  CHECK(oracle::power_at_third("ATGATG") == doctest::Approx(12.0));
}

TEST_CASE("closed form equals the direct DFT for all lengths") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 700;
    const auto bases = oracle::random_bases(rng, n);
    const double dft = dft_power_at_third(seq(bases));
    REQUIRE(std::abs(ps_of(bases) - dft) <= 1e-9 * std::max(1.0, dft));
    REQUIRE(std::abs(oracle::power_at_third(bases) - dft) <= 1e-9 * std::max(1.0, dft));
  }
}

TEST_CASE("closed form symmetries") {
  std::mt19937_64 rng(55);
  const std::string perm_from = "ACGT";
  for (int i = 0; i < 100; ++i) {
    const auto bases = oracle::random_bases(rng, 1 + rng() % 300);
    std::string order = perm_from;
    std::shuffle(order.begin(), order.end(), rng);
    std::string permuted = bases;
    for (char& c : permuted) c = order[static_cast<std::size_t>(oracle::base_index(c))];
    REQUIRE(ps_of(permuted) == ps_of(bases));
    REQUIRE(ps_of(bases) >= 0.0);
  }
  // Rotating a period-3 sequence by one base permutes the phases.
  for (std::string unit : {"ATG", "GGC", "TAC"}) {
    std::string s;
    for (int i = 0; i < 40; ++i) s += unit;
    const std::string rotated = s.substr(1) + s.front();
    CHECK(ps_of(rotated) == ps_of(s));
  }
}

TEST_CASE("background") {
  CHECK(background(count_codon_positions(seq("AAAA"))) == 0.0);
  CHECK(background(count_codon_positions(seq("ACGT"))) == 4.0);
  CHECK(oracle::mean_nonzero_bin_power("ACGT") == doctest::Approx(4.0));
  CHECK_THROWS_AS(background(count_codon_positions(seq("A"))), UndefinedBackgroundError);

  std::mt19937_64 rng(9);
  for (std::size_t n : {2u, 7u, 61u, 128u, 250u}) {
    const auto bases = oracle::random_bases(rng, n);
    const double expected = oracle::mean_nonzero_bin_power(bases);
    CHECK(background(count_codon_positions(seq(bases))) ==
          doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("walk") {
  SUBCASE("AAA raw matches the per-prefix DFT") {
    // Oracle per prefix: power_at_third("A")=1, ("AA")=1, ("AAA")=0.
    const auto w = walk(seq("AAA"), Normalization::Raw);
    CHECK(w.values == std::vector<double>{1.0, 1.0, 0.0});
    CHECK(w.normalization == Normalization::Raw);
  }
  SUBCASE("incremental equals naive recomputation") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 100; ++i) {
      const auto bases = oracle::random_bases(rng, 1 + rng() % 500);
      REQUIRE(walk(seq(bases), Normalization::Raw).values == oracle::naive_walk_raw(bases));
    }
  }
  SUBCASE("prefix property") {
    std::mt19937_64 rng(78);
    const auto bases = oracle::random_bases(rng, 400);
    for (auto norm : {Normalization::Raw, Normalization::PerBase, Normalization::BackgroundRatio}) {
      const auto full = walk(seq(bases), norm).values;
      const auto part = walk(seq(bases.substr(0, 150)), norm).values;
      REQUIRE(std::equal(part.begin(), part.end(), full.begin()));
    }
  }
  SUBCASE("period-3 repeat") {
    std::string s;
    for (int i = 0; i < 100; ++i) s += "ATG";
    const auto raw = walk(seq(s), Normalization::Raw).values;
    const auto per = walk(seq(s), Normalization::PerBase).values;
    CHECK(raw.back() == 300.0 * 300.0 / 3.0);
    CHECK(per.back() == doctest::Approx(100.0));
    CHECK(per.back() == raw.back() / 300.0);
    for (std::size_t k = 3; k < per.size(); ++k) REQUIRE(per[k] >= per[k - 1]);
  }
  SUBCASE("background ratio") {
    const auto w = walk(seq("AAAACG"), Normalization::BackgroundRatio).values;
    CHECK(w[0] == 0.0);  // N = 1
    CHECK(w[1] == 0.0);  // background 0 on a single-letter prefix
    const auto counts = count_codon_positions(seq("AAAACG"));
    CHECK(w[5] == ps_n3(counts) / background(counts));
    for (double v : w) CHECK(v >= 0.0);
  }
}

TEST_CASE("walk scales linearly") {
  std::mt19937_64 rng(1);
  const auto big = seq(oracle::random_bases(rng, 1'000'000));
  const auto t0 = std::chrono::steady_clock::now();
  const auto w = walk(big, Normalization::PerBase);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(w.values.size() == 1'000'000);
  CHECK(secs < 1.0);
}

TEST_CASE("normalization names") {
  CHECK(normalization_from_string("per-base") == Normalization::PerBase);
  CHECK(normalization_from_string("raw") == Normalization::Raw);
  CHECK(normalization_from_string("background") == Normalization::BackgroundRatio);
  CHECK(to_string(Normalization::BackgroundRatio) == "background");
  CHECK_THROWS_AS(normalization_from_string("perbase"), UsageError);
}
