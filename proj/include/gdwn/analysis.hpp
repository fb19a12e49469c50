#pragma once

// Finite-sample analysis of P-position sequences: ratio series, empirical
// beam-split detection, Wythoff equivalence, closed-form verifiers and the
// pattern checks for the (1,2) extension game.

#include <optional>
#include <string>
#include <vector>

#include "gdwn/game.hpp"
#include "gdwn/rational.hpp"
#include "gdwn/sieve.hpp"

namespace gdwn {

enum class SeriesMode {
  Pairs,  // (a_n, b_n), n >= 1, a_n <= N
  Full,   // (n, pi(n)), 1 <= n <= N
};

struct RatioEntry {
  Int n = 0;
  Int a = 0;
  Int b = 0;
  Rational ratio;  // b / a, exact
  double value = 0.0;
};

struct RatioSeries {
  SeriesMode mode = SeriesMode::Pairs;
  std::vector<RatioEntry> entries;
};

/// Throws InsufficientData when fewer than two entries result.
RatioSeries ratio_series(const PTable& table, SeriesMode mode = SeriesMode::Pairs);

struct SplitParams {
  /// Leading entries discarded before looking for gaps; defaults to
  /// max(100, 5% of the series).
  std::optional<Int> min_tail;
  /// Gap endpoints are multiples of this step.
  Rational gap_resolution{1, 256};
  /// Every band must hold at least this fraction of the tail.
  double min_beam_fraction = 0.05;
};

Int effective_min_tail(const SplitParams& params, std::size_t series_length);

struct Gap {
  Rational alpha;
  Rational mu;  // width; the gap is [alpha, alpha + mu)
  Rational end() const { return alpha + mu; }
};

struct BeamEstimate {
  enum class Side { Below, Above };
  Side side = Side::Below;
  double lower = 0.0;  // smallest ratio in the band
  double upper = 0.0;  // largest ratio in the band
  double slope = 0.0;  // mean ratio
  double median = 0.0;
  double last_decile_mean = 0.0;  // mean over the last 10% of the band by index
  double density = 0.0;           // fraction of tail entries
  Int count = 0;
  /// Series indices n of the band members, increasing.
  std::vector<Int> indices;
};

std::string to_string(BeamEstimate::Side side);

struct SplitReport {
  bool split = false;
  /// Widest accepted gap (meaningful only when split).
  Gap gap;
  /// All accepted gaps in increasing order of alpha.
  std::vector<Gap> gaps;
  /// Bands in increasing ratio order; side is relative to the widest gap.
  std::vector<BeamEstimate> beams;
  /// Entries of the whole series, head included, that fall inside a gap.
  Int exceptional_count = 0;
  Int min_tail = 0;
  Int tail_size = 0;
  double tail_mean = 0.0;
  SplitParams params;

  std::size_t fold_count() const { return gaps.size(); }
};

/// Widest grid-aligned empty gap with enough tail mass on both sides.
/// This is a finite-sample heuristic, not a proof of an asymptotic split.
SplitReport detect_split(const RatioSeries& series, const SplitParams& params = {});

/// Up to max_gaps empty gaps, accepted greedily by width while every band
/// keeps at least min_beam_fraction of the tail.
SplitReport detect_multi_split(const RatioSeries& series, int max_gaps, const SplitParams& params = {});

struct EquivalenceReport {
  bool equivalent = true;
  std::optional<std::size_t> first_divergence;
  std::size_t compared = 0;
};

/// Compares the sieve pairs with a_i <= N against (A_i, B_i).
EquivalenceReport check_wythoff_equivalence(const GameSpec& spec, Int bound);
EquivalenceReport check_wythoff_equivalence(const PTable& table);

struct ClosedFormFamily {
  enum class Kind {
    SinglePair,  // {(r,s)}
    ZeroS,       // {(0,s)}
    ZeroSAndSS,  // {(0,s),(s,s)}
    NimPlusPair, // {(0,1),(r,s)}: Nim iff r != s
  };
  Kind kind = Kind::ZeroS;
  Int r = 0;
  Int s = 1;

  GameSpec spec() const;
  std::string describe() const;
};

struct ClosedFormReport {
  bool holds = true;
  std::string family;
  /// Cells where the oracle disagrees with the closed form (first few).
  std::vector<Position> mismatches;
  Int mismatch_count = 0;
};

/// Compares the retrograde oracle on [0,N]^2 with the closed-form P-set.
ClosedFormReport verify_closed_form(const ClosedFormFamily& family, Int bound);

struct OneTwoPatternReport {
  Int increments_checked = 0;
  std::vector<Int> increment_failures;
  /// (N_k, k) chain starting at N = 0.
  std::vector<std::pair<Int, Int>> witness_chain;
  bool witness_prefix_ok = false;
  std::vector<Int> ratio_bound_failures;
  Int spread_checked = 0;
  std::vector<Int> spread_failures;

  bool ok() const {
    return increment_failures.empty() && witness_prefix_ok && ratio_bound_failures.empty() &&
           spread_failures.empty();
  }
};

/// Requires the table of {(0,1),(1,1),(1,2)} (WrongSpec otherwise).
/// margin_fraction: share of the pair list at the end excluded from the
/// spread check, whose witnesses may lie beyond the computed prefix.
OneTwoPatternReport check_one_two_patterns(const PTable& table, double margin_fraction = 0.1);

/// The (N,k) chain printed with Table 1.
inline const std::vector<std::pair<Int, Int>> kOneTwoWitnessPrefix{
    {0, 1}, {1, 1}, {2, 5}, {7, 1}, {8, 2}, {10, 4}, {14, 2}};

}  // namespace gdwn
