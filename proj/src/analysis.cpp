#include "gdwn/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gdwn/error.hpp"
#include "gdwn/wythoff.hpp"

namespace gdwn {

RatioSeries ratio_series(const PTable& table, SeriesMode mode) {
  RatioSeries series{mode, {}};
  auto push = [&](Int n, Int a, Int b) {
    Rational r(b, a);
    series.entries.push_back({n, a, b, r, r.to_double()});
  };
  if (mode == SeriesMode::Pairs) {
    for (std::size_t i = 1; i < table.pair_count(); ++i)
      push(static_cast<Int>(i), table.a()[i], table.b()[i]);
  } else {
    for (Int n = 1; n <= table.bound(); ++n) push(n, n, table.pi(n));
  }
  if (series.entries.size() < 2)
    throw Error(ErrorCode::InsufficientData, "ratio series needs at least two entries");
  return series;
}

Int effective_min_tail(const SplitParams& params, std::size_t series_length) {
  if (params.min_tail) return *params.min_tail;
  return std::max<Int>(100, static_cast<Int>(series_length) / 20);
}

std::string to_string(BeamEstimate::Side side) { return side == BeamEstimate::Side::Below ? "below" : "above"; }

namespace {

struct CandidateGap {
  Gap gap;
  std::size_t below = 0;  // number of sorted tail entries under the gap
};

// Orders by decreasing width, then increasing alpha.
bool wider(const CandidateGap& x, const CandidateGap& y) {
  if (x.gap.mu != y.gap.mu) return x.gap.mu > y.gap.mu;
  return x.gap.alpha < y.gap.alpha;
}

double mean_of(const std::vector<double>& v) {
  long double s = 0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : static_cast<double>(s / static_cast<long double>(v.size()));
}

}  // namespace

SplitReport detect_multi_split(const RatioSeries& series, int max_gaps, const SplitParams& params) {
  if (params.gap_resolution <= Rational(0)) throw Error(ErrorCode::InvalidInput, "gap resolution must be positive");
  if (max_gaps < 0) throw Error(ErrorCode::InvalidInput, "max_gaps must be non-negative");

  SplitReport report;
  report.params = params;
  report.min_tail = effective_min_tail(params, series.entries.size());
  if (report.min_tail < 0 || series.entries.size() < static_cast<std::size_t>(2 * std::max<Int>(report.min_tail, 1)))
    throw Error(ErrorCode::InsufficientData, "series of length " + std::to_string(series.entries.size()) +
                                                 " is shorter than twice the discarded head");

  const auto head = static_cast<std::size_t>(report.min_tail);
  std::vector<std::size_t> order(series.entries.size() - head);
  std::iota(order.begin(), order.end(), head);
  const auto& e = series.entries;
  std::ranges::stable_sort(order, [&](std::size_t i, std::size_t j) { return e[i].ratio < e[j].ratio; });
  const auto tail = static_cast<Int>(order.size());
  report.tail_size = tail;
  {
    std::vector<double> values;
    for (std::size_t i = head; i < e.size(); ++i) values.push_back(e[i].value);
    report.tail_mean = mean_of(values);
  }

  const Rational& res = params.gap_resolution;
  std::vector<CandidateGap> candidates;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    const Rational& lo = e[order[k]].ratio;
    const Rational& hi = e[order[k + 1]].ratio;
    if (lo == hi) continue;
    const Rational alpha = res * (Rational::floor_div(lo, res) + 1);
    const Rational end = res * Rational::floor_div(hi, res);
    if (end - alpha >= res) candidates.push_back({{alpha, end - alpha}, k + 1});
  }
  std::ranges::sort(candidates, wider);

  const auto min_count = params.min_beam_fraction * static_cast<double>(tail);
  std::vector<CandidateGap> accepted;
  auto bands_ok = [&](const std::vector<CandidateGap>& gaps) {
    std::vector<std::size_t> cuts;
    for (const auto& g : gaps) cuts.push_back(g.below);
    std::ranges::sort(cuts);
    std::size_t prev = 0;
    cuts.push_back(order.size());
    for (std::size_t c : cuts) {
      if (static_cast<double>(c - prev) < min_count || c == prev) return false;
      prev = c;
    }
    return true;
  };
  for (const auto& cand : candidates) {
    if (static_cast<int>(accepted.size()) >= max_gaps) break;
    auto trial = accepted;
    trial.push_back(cand);
    if (bands_ok(trial)) accepted = std::move(trial);
  }
  if (accepted.empty()) {
    report.split = false;
  } else {
    report.split = true;
    report.gap = accepted.front().gap;
  }
  std::ranges::sort(accepted, [](const CandidateGap& x, const CandidateGap& y) { return x.below < y.below; });
  for (const auto& g : accepted) report.gaps.push_back(g.gap);

  for (const auto& entry : e)
    for (const auto& g : report.gaps)
      if (entry.ratio >= g.alpha && entry.ratio < g.end()) ++report.exceptional_count;

  // Bands between consecutive cuts.
  std::vector<std::size_t> cuts{0};
  for (const auto& g : accepted) cuts.push_back(g.below);
  cuts.push_back(order.size());
  for (std::size_t b = 0; b + 1 < cuts.size(); ++b) {
    BeamEstimate beam;
    std::vector<std::size_t> members(order.begin() + static_cast<std::ptrdiff_t>(cuts[b]),
                                     order.begin() + static_cast<std::ptrdiff_t>(cuts[b + 1]));
    std::vector<double> sorted_values;
    for (auto i : members) sorted_values.push_back(e[i].value);
    std::ranges::sort(members);
    std::vector<double> by_index;
    for (auto i : members) {
      by_index.push_back(e[i].value);
      beam.indices.push_back(e[i].n);
    }
    beam.count = static_cast<Int>(members.size());
    beam.lower = sorted_values.front();
    beam.upper = sorted_values.back();
    beam.slope = mean_of(by_index);
    const auto mid = sorted_values.size() / 2;
    beam.median = sorted_values.size() % 2 ? sorted_values[mid] : (sorted_values[mid - 1] + sorted_values[mid]) / 2;
    const auto decile = std::max<std::size_t>(1, by_index.size() / 10);
    beam.last_decile_mean = mean_of(std::vector<double>(by_index.end() - static_cast<std::ptrdiff_t>(decile), by_index.end()));
    beam.density = static_cast<double>(beam.count) / static_cast<double>(tail);
    beam.side = (report.split && Rational(e[members.front()].ratio) >= report.gap.end()) ? BeamEstimate::Side::Above
                                                                                        : BeamEstimate::Side::Below;
    report.beams.push_back(std::move(beam));
  }
  return report;
}

SplitReport detect_split(const RatioSeries& series, const SplitParams& params) {
  return detect_multi_split(series, 1, params);
}

EquivalenceReport check_wythoff_equivalence(const PTable& table) {
  if (!table.spec().extends_wythoff())
    throw Error(ErrorCode::WrongSpec, "equivalence check needs a spec containing (0,1) and (1,1)");
  EquivalenceReport report;
  std::size_t wythoff_count = 0;
  while (beatty_A(static_cast<Int>(wythoff_count)) <= table.bound()) ++wythoff_count;
  const auto total = std::max(wythoff_count, table.pair_count());
  for (std::size_t i = 0; i < total; ++i) {
    const bool both = i < wythoff_count && i < table.pair_count();
    const auto n = static_cast<Int>(i);
    if (!both || table.a()[i] != beatty_A(n) || table.b()[i] != beatty_B(n)) {
      report.equivalent = false;
      report.first_divergence = i;
      break;
    }
    ++report.compared;
  }
  return report;
}

EquivalenceReport check_wythoff_equivalence(const GameSpec& spec, Int bound) {
  return check_wythoff_equivalence(compute_pi(spec, bound));
}

GameSpec ClosedFormFamily::spec() const {
  switch (kind) {
    case Kind::SinglePair: return GameSpec::validate({{r, s}});
    case Kind::ZeroS: return GameSpec::validate({{0, s}});
    case Kind::ZeroSAndSS: return GameSpec::validate({{0, s}, {s, s}});
    case Kind::NimPlusPair: return GameSpec::validate({{0, 1}, {r, s}});
  }
  throw Error(ErrorCode::InvalidInput, "unknown family");
}

std::string ClosedFormFamily::describe() const {
  return spec().to_string() + "GDWN";
}

namespace {

// Closed-form membership for a position in the given family.
bool closed_form_is_p(const ClosedFormFamily& f, Int x, Int y, const std::set<std::pair<Int, Int>>& beatty_cells) {
  using Kind = ClosedFormFamily::Kind;
  switch (f.kind) {
    case Kind::SinglePair:
      // {{m,n} : 0 <= m,n < s} u {{n,m} : n < r}
      return (x < f.s && y < f.s) || x < f.r || y < f.r;
    case Kind::ZeroS:
      return x / f.s == y / f.s;
    case Kind::ZeroSAndSS:
      return beatty_cells.contains({x / f.s, y / f.s});
    case Kind::NimPlusPair:
      return x == y;
  }
  return false;
}

}  // namespace

ClosedFormReport verify_closed_form(const ClosedFormFamily& family, Int bound) {
  using Kind = ClosedFormFamily::Kind;
  if (family.s < 1 || family.r < 0 || family.r > family.s)
    throw Error(ErrorCode::InvalidInput, "family needs 0 <= r <= s and s >= 1");
  if ((family.kind == Kind::SinglePair || family.kind == Kind::NimPlusPair) && family.r < 1)
    throw Error(ErrorCode::InvalidInput, "family needs r >= 1");

  ClosedFormReport report;
  report.family = family.describe();
  const auto grid = solve_bruteforce(family.spec(), bound, bound);

  // {sA_n + i, sB_n + j}: position (x, y) is P iff its block (x/s, y/s) is
  // a Wythoff P-position.
  std::set<std::pair<Int, Int>> beatty_cells;
  if (family.kind == Kind::ZeroSAndSS) {
    for (Int n = 0; beatty_A(n) * family.s <= bound; ++n) {
      beatty_cells.insert({beatty_A(n), beatty_B(n)});
      beatty_cells.insert({beatty_B(n), beatty_A(n)});
    }
  }

  bool differs_from_nim = false;
  for (Int x = 0; x <= bound; ++x) {
    for (Int y = 0; y <= bound; ++y) {
      const bool oracle = grid.is_p(x, y);
      const bool expected = closed_form_is_p(family, x, y, beatty_cells);
      if (oracle != expected) {
        differs_from_nim = true;
        ++report.mismatch_count;
        if (report.mismatches.size() < 16) report.mismatches.push_back({x, y});
      }
    }
  }
  if (family.kind == Kind::NimPlusPair && family.r == family.s) {
    // The equivalence runs both ways: with r == s the game must differ from Nim.
    report.holds = differs_from_nim;
    if (!differs_from_nim) report.mismatches.clear();
  } else {
    report.holds = report.mismatch_count == 0;
  }
  return report;
}

namespace {

// x >= phi for rational x (phi is irrational, so equality never occurs).
bool at_least_phi(const Rational& x) {
  // x > phi  <=>  2x - 1 > sqrt5  <=>  2x - 1 > 0 and (2x - 1)^2 > 5
  const Rational t = x * 2 - Rational(1);
  if (t <= Rational(0)) return false;
  const __int128 num = t.num();
  const __int128 den = t.den();
  return num * num > 5 * den * den;
}

}  // namespace

OneTwoPatternReport check_one_two_patterns(const PTable& table, double margin_fraction) {
  const auto expected = GameSpec::validate({{0, 1}, {1, 1}, {1, 2}});
  auto sorted_pairs = [](const GameSpec& s) {
    auto v = s.pairs();
    std::ranges::sort(v);
    return v;
  };
  if (sorted_pairs(table.spec()) != sorted_pairs(expected))
    throw Error(ErrorCode::WrongSpec, "these patterns apply to (0,1)(1,1)(1,2) only, got " + table.spec().to_string());

  OneTwoPatternReport report;
  const auto& a = table.a();
  const auto& b = table.b();
  const auto count = a.size();
  auto gamma = [&](std::size_t i) { return b[i] - 2 * a[i]; };

  // From any index with b >= 2a, the next index with b > 2a raises
  // b - 2a by exactly one.
  std::optional<std::size_t> next_positive;
  std::vector<std::optional<std::size_t>> next_pos(count);
  for (std::size_t i = count; i-- > 0;) {
    next_pos[i] = next_positive;
    if (gamma(i) > 0) next_positive = i;
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (gamma(i) < 0 || !next_pos[i]) continue;
    ++report.increments_checked;
    if (gamma(*next_pos[i]) != gamma(i) + 1) report.increment_failures.push_back(static_cast<Int>(i));
  }

  for (std::size_t i = 0; next_pos[i];) {
    const auto j = *next_pos[i];
    report.witness_chain.emplace_back(static_cast<Int>(i), static_cast<Int>(j - i));
    i = j;
    if (i >= count) break;
  }
  report.witness_prefix_ok = report.witness_chain.size() >= kOneTwoWitnessPrefix.size() &&
                             std::equal(kOneTwoWitnessPrefix.begin(), kOneTwoWitnessPrefix.end(),
                                        report.witness_chain.begin());

  for (std::size_t i = 1; i < count; ++i)
    if (b[i] > 3 * a[i]) report.ratio_bound_failures.push_back(static_cast<Int>(i));

  // Spread: for every n, max_{i>=n} r_i - min_{i>=n} r_i >= phi - 3/2,
  // evaluated exactly on the computed prefix.
  if (count > 1) {
    std::vector<Rational> ratio(count);
    for (std::size_t i = 1; i < count; ++i) ratio[i] = Rational(b[i], a[i]);
    std::vector<Rational> suffix_max(count + 1), suffix_min(count + 1);
    suffix_max[count - 1] = suffix_min[count - 1] = ratio[count - 1];
    for (std::size_t i = count - 1; i-- > 1;) {
      suffix_max[i] = std::max(ratio[i], suffix_max[i + 1]);
      suffix_min[i] = std::min(ratio[i], suffix_min[i + 1]);
    }
    const auto margin = static_cast<std::size_t>(margin_fraction * static_cast<double>(count));
    for (std::size_t n = 1; n + margin < count; ++n) {
      ++report.spread_checked;
      if (!at_least_phi(suffix_max[n] - suffix_min[n] + Rational(3, 2)))
        report.spread_failures.push_back(static_cast<Int>(n));
    }
  }
  return report;
}

}  // namespace gdwn
