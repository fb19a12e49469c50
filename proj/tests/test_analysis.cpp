#include <doctest.h>

#include <cmath>

#include "gdwn/analysis.hpp"
#include "gdwn/error.hpp"
#include "gdwn/wythoff.hpp"

using namespace gdwn;

namespace {

constexpr double kPhi = 1.6180339887498949;

RatioSeries series_of(const GameSpec& spec, Int n, SeriesMode mode = SeriesMode::Pairs) {
  return ratio_series(compute_pi(spec, n), mode);
}

void check_split_invariants(const RatioSeries& series, const SplitReport& r) {
  double total = 0.0;
  for (const auto& b : r.beams) {
    CHECK(b.density >= r.params.min_beam_fraction);
    total += b.density;
    for (const auto& g : r.gaps) {
      const bool below = b.upper < g.alpha.to_double();
      const bool above = b.lower >= g.end().to_double();
      CHECK((below || above));
      CHECK((b.slope < g.alpha.to_double() || b.slope >= g.end().to_double()));
    }
  }
  CHECK(total <= 1.0 + 1e-12);
  Int in_gaps = 0;
  for (std::size_t i = static_cast<std::size_t>(r.min_tail); i < series.entries.size(); ++i)
    for (const auto& g : r.gaps)
      if (series.entries[i].ratio >= g.alpha && series.entries[i].ratio < g.end()) ++in_gaps;
  CHECK(in_gaps == 0);
  CHECK(in_gaps <= r.exceptional_count);
}

}  // namespace

TEST_CASE("ratio series") {
  const auto s12 = series_of(extension_spec(1, 2), 100);
  CHECK(s12.entries.front().n == 1);
  CHECK(s12.entries.front().ratio == Rational(3));
  const auto nim = series_of(nim_spec(), 100);
  for (const auto& e : nim.entries) CHECK(e.ratio == Rational(1));
  const auto w = series_of(wythoff_spec(), 100);
  CHECK(w.entries[4].ratio == Rational(13, 8));
  CHECK(w.entries[4].value == doctest::Approx(1.625));
  for (const auto& e : w.entries) CHECK(e.a >= 1);
  CHECK_THROWS_AS(series_of(nim_spec(), 1), Error);
  CHECK(series_of(wythoff_spec(), 100, SeriesMode::Full).entries.size() == 100);
}

TEST_CASE("tail defaults") {
  CHECK(effective_min_tail({}, 1000) == 100);
  CHECK(effective_min_tail({}, 40000) == 2000);
  SplitParams p;
  p.min_tail = 7;
  CHECK(effective_min_tail(p, 40000) == 7);
}

TEST_CASE("constant series does not split") {
  const auto s = series_of(nim_spec(), 2000);
  const auto r = detect_split(s);
  CHECK_FALSE(r.split);
  CHECK(r.fold_count() == 0);
  CHECK(detect_multi_split(s, 5).fold_count() == 0);
  REQUIRE(r.beams.size() == 1);
  CHECK(r.beams[0].density == 1.0);
}

TEST_CASE("Wythoff full series folds once around [1/phi, phi)") {
  const auto s = series_of(wythoff_spec(), 5000, SeriesMode::Full);
  const auto r = detect_multi_split(s, 4);
  CHECK(r.split);
  REQUIRE(r.fold_count() == 1);
  CHECK(r.gap.alpha.to_double() > kPhi - 1);
  CHECK(r.gap.end().to_double() < kPhi);
  CHECK(r.beams[0].slope == doctest::Approx(kPhi - 1).epsilon(0.002));
  CHECK(r.beams[1].slope == doctest::Approx(kPhi).epsilon(0.002));
  check_split_invariants(s, r);
}

TEST_CASE("Wythoff pair series does not split") {
  const auto r = detect_split(series_of(wythoff_spec(), 5000));
  CHECK_FALSE(r.split);
  CHECK(r.tail_mean == doctest::Approx(kPhi).epsilon(0.001));
}

TEST_CASE("(1,2) split is stable between N=10000 and N=20000") {
  const auto s1 = series_of(extension_spec(1, 2), 10000);
  const auto s2 = series_of(extension_spec(1, 2), 20000);
  const auto r1 = detect_split(s1);
  const auto r2 = detect_split(s2);
  REQUIRE(r1.split);
  REQUIRE(r2.split);
  check_split_invariants(s1, r1);
  check_split_invariants(s2, r2);
  CHECK(r1.gap.alpha < r2.gap.end());
  CHECK(r2.gap.alpha < r1.gap.end());
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(std::abs(r1.beams[i].slope - r2.beams[i].slope) < 0.01);
    CHECK(std::abs(r1.beams[i].density - r2.beams[i].density) < 0.02);
  }
  CHECK(r1.beams[0].side == BeamEstimate::Side::Below);
  CHECK(r1.beams[1].side == BeamEstimate::Side::Above);
  const auto multi = detect_multi_split(s1, 1);
  CHECK(multi.gap.alpha == r1.gap.alpha);
  CHECK(multi.gap.mu == r1.gap.mu);
}

TEST_CASE("a five-pair extension separates into several beams") {
  const auto spec = GameSpec::validate({{0, 1}, {1, 1}, {1, 2}, {2, 3}, {3, 5}, {5, 8}, {8, 13}});
  const auto s = series_of(spec, 20000);
  SplitParams params;
  params.min_tail = static_cast<Int>(s.entries.size() / 3);
  const auto r = detect_multi_split(s, 8, params);
  CHECK(r.fold_count() >= 3);
  check_split_invariants(s, r);
  for (std::size_t i = 1; i < r.gaps.size(); ++i) CHECK(r.gaps[i - 1].end() <= r.gaps[i].alpha);
}

TEST_CASE("split parameter errors") {
  const auto s = series_of(extension_spec(1, 2), 300);
  SplitParams p;
  p.min_tail = static_cast<Int>(s.entries.size());
  CHECK_THROWS_AS(detect_split(s, p), Error);
  SplitParams bad;
  bad.gap_resolution = Rational(0);
  CHECK_THROWS_AS(detect_split(s, bad), Error);
  CHECK_THROWS_AS(detect_multi_split(s, -1), Error);
  CHECK_FALSE(detect_multi_split(series_of(extension_spec(1, 2), 3000), 0).split);
}

TEST_CASE("Wythoff equivalence") {
  CHECK_FALSE(check_wythoff_equivalence(extension_spec(1, 2), 100).equivalent);
  CHECK(check_wythoff_equivalence(extension_spec(1, 2), 100).first_divergence == 1u);
  const auto r24 = check_wythoff_equivalence(extension_spec(2, 4), 100);
  CHECK_FALSE(r24.equivalent);
  CHECK(r24.first_divergence == 5u);
  CHECK(check_wythoff_equivalence(extension_spec(10, 15), 2000).equivalent);
  CHECK(check_wythoff_equivalence(wythoff_spec(), 2000).equivalent);
  CHECK_THROWS_AS(check_wythoff_equivalence(nim_spec(), 10), Error);
}

TEST_CASE("closed forms") {
  using Kind = ClosedFormFamily::Kind;
  for (Int s = 1; s <= 4; ++s) {
    CHECK(verify_closed_form({Kind::ZeroS, 0, s}, 40).holds);
    CHECK(verify_closed_form({Kind::ZeroSAndSS, 0, s}, 40).holds);
    for (Int r = 1; r <= s; ++r) CHECK(verify_closed_form({Kind::NimPlusPair, r, s}, 40).holds);
  }
  // The single-pair formula only survives when r == s.
  CHECK(verify_closed_form({Kind::SinglePair, 3, 3}, 40).holds);
  const auto broken = verify_closed_form({Kind::SinglePair, 1, 2}, 40);
  CHECK_FALSE(broken.holds);
  CHECK(broken.mismatch_count > 0);
  CHECK(broken.mismatches.front() == Position{3, 3});
  CHECK(ClosedFormFamily{Kind::ZeroSAndSS, 0, 2}.spec().to_string() == "(0,2)(2,2)");
}

TEST_CASE("(1,2) patterns") {
  const auto r = check_one_two_patterns(compute_pi(extension_spec(1, 2), 5000));
  CHECK(r.ok());
  CHECK(r.increments_checked > 0);
  CHECK(r.spread_checked > 0);
  REQUIRE(r.witness_chain.size() >= kOneTwoWitnessPrefix.size());
  CHECK(std::equal(kOneTwoWitnessPrefix.begin(), kOneTwoWitnessPrefix.end(), r.witness_chain.begin()));
  CHECK_THROWS_AS(check_one_two_patterns(compute_pi(extension_spec(2, 3), 100)), Error);
}
