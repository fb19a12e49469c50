#include "gdwn/sieve.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "gdwn/error.hpp"

namespace gdwn {

PTable::PTable(GameSpec spec, Int bound, std::vector<Int> pi)
    : spec_(std::move(spec)), bound_(bound), pi_(std::move(pi)) {
  if (bound_ < 0 || pi_.size() != static_cast<std::size_t>(bound_ + 1))
    throw Error(ErrorCode::InvalidInput, "pi must have exactly N+1 entries");
  for (Int i = 0; i <= bound_; ++i) {
    const Int v = pi_[static_cast<std::size_t>(i)];
    if (v < 0) throw Error(ErrorCode::InvalidInput, "pi values must be non-negative");
    if (v >= i) {
      u_.push_back(i);
      b_.push_back(v);
    } else {
      l_.push_back(i);
    }
  }
}

namespace {

Int budget_cap(Int bound, const SieveOptions& options) {
  if (options.cap_factor < 1) throw Error(ErrorCode::InvalidInput, "cap_factor must be >= 1");
  return options.cap_factor * (bound + 1);
}

[[noreturn]] void throw_budget(Int n, Int cap) {
  throw Error(ErrorCode::BudgetExceeded,
              "no admissible value below " + std::to_string(cap) + " for n = " + std::to_string(n));
}

// Direct transcription of the recursive definition: for every j < n and
// every pair, forbid the value that would make (n, y) -> (j, pi(j)) a move.
std::vector<Int> sieve_naive(const GameSpec& spec, Int bound, Int cap) {
  std::vector<Int> pi;
  pi.reserve(static_cast<std::size_t>(bound + 1));
  std::vector<Int> stamp(static_cast<std::size_t>(cap), -1);
  for (Int n = 0; n <= bound; ++n) {
    auto forbid = [&](Int v) {
      if (v < cap) stamp[static_cast<std::size_t>(v)] = n;
    };
    for (const auto& d : spec.pairs()) {
      for (Int j = 0; j < n; ++j) {
        const Int dist = n - j;
        const Int pj = pi[static_cast<std::size_t>(j)];
        if (dist % d.q == 0) forbid(pj + (dist / d.q) * d.p);
        if (d.p > 0 && d.p != d.q && dist % d.p == 0) forbid(pj + (dist / d.p) * d.q);
      }
    }
    Int y = 0;
    while (y < cap && stamp[static_cast<std::size_t>(y)] == n) ++y;
    if (y >= cap) throw_budget(n, cap);
    pi.push_back(y);
  }
  return pi;
}

// Set of marked keys split into `classes` residue classes. Dense growable
// bitmaps while the key range stays small, hash set beyond that.
class KeySet {
 public:
  KeySet(Int offset, Int classes) : offset_(offset), classes_(classes), dense_(static_cast<std::size_t>(classes)) {}

  void insert(Int key, Int cls) {
    const Int idx = key + offset_;
    if (!sparse_.empty() || idx >= kDenseLimitBits) {
      migrate_to_sparse();
      sparse_.insert(combined(key, cls));
      return;
    }
    auto& bits = dense_[static_cast<std::size_t>(cls)];
    const auto word = static_cast<std::size_t>(idx >> 6);
    if (word >= bits.size()) bits.resize(std::max(word + 1, bits.size() * 2), 0);
    bits[word] |= std::uint64_t{1} << (idx & 63);
  }

  bool contains(Int key, Int cls) const {
    if (!sparse_.empty()) return sparse_.contains(combined(key, cls));
    const Int idx = key + offset_;
    if (idx < 0) return false;
    const auto& bits = dense_[static_cast<std::size_t>(cls)];
    const auto word = static_cast<std::size_t>(idx >> 6);
    return word < bits.size() && ((bits[word] >> (idx & 63)) & 1U);
  }

  // Smallest unmarked key >= key in class cls (dense mode only).
  Int next_unmarked(Int key, Int cls) const {
    if (!sparse_.empty()) {
      while (sparse_.contains(combined(key, cls))) ++key;
      return key;
    }
    Int idx = key + offset_;
    const auto& bits = dense_[static_cast<std::size_t>(cls)];
    auto word = static_cast<std::size_t>(idx >> 6);
    if (word >= bits.size()) return key;
    std::uint64_t w = ~bits[word] & (~std::uint64_t{0} << (idx & 63));
    while (w == 0) {
      if (++word >= bits.size()) return static_cast<Int>(word * 64) - offset_;
      w = ~bits[word];
    }
    return static_cast<Int>(word * 64 + static_cast<std::size_t>(std::countr_zero(w))) - offset_;
  }

 private:
  static constexpr Int kDenseLimitBits = Int{1} << 28;

  Int combined(Int key, Int cls) const { return key * classes_ + cls; }

  void migrate_to_sparse() {
    if (!sparse_.empty() || dense_.empty()) return;
    for (Int cls = 0; cls < classes_; ++cls) {
      const auto& bits = dense_[static_cast<std::size_t>(cls)];
      for (std::size_t w = 0; w < bits.size(); ++w) {
        for (std::uint64_t word = bits[w]; word != 0; word &= word - 1) {
          const Int idx = static_cast<Int>(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
          sparse_.insert(combined(idx - offset_, cls));
        }
      }
    }
    dense_.clear();
    dense_.shrink_to_fit();
  }

  Int offset_;
  Int classes_;
  std::vector<std::vector<std::uint64_t>> dense_;
  std::unordered_set<Int> sparse_;
};

// All P-positions (j, pi(j)) reachable from column n along one move
// direction (step_x, step_y). A move (n, y) -> (j, v) along this direction
// exists iff both points lie on the same line of that slope and n - j is a
// positive multiple of step_x. The line is identified by
// sx*v - sy*j (reduced direction), the multiple condition by floor(j/sx) mod g.
class DirectionIndex {
 public:
  DirectionIndex(Int step_x, Int step_y, Int bound)
      : g_(std::gcd(step_x, step_y)),
        sx_(step_x / g_),
        sy_(step_y / g_),
        keys_(sy_ * bound, g_) {}

  void insert(Int j, Int v) { keys_.insert(sx_ * v - sy_ * j, (j / sx_) % g_); }

  bool forbids(Int n, Int y) const { return keys_.contains(sx_ * y - sy_ * n, (n / sx_) % g_); }

  /// Direction (0-step in y) with unit x-step: the set of used values.
  bool is_value_set() const { return sx_ == 1 && sy_ == 0 && g_ == 1; }
  Int next_unforbidden_value(Int y) const { return keys_.next_unmarked(y, 0); }

 private:
  Int g_, sx_, sy_;
  KeySet keys_;
};

std::vector<Int> sieve_optimized(const GameSpec& spec, Int bound, Int cap) {
  std::vector<DirectionIndex> directions;
  const DirectionIndex* values = nullptr;
  for (const auto& d : spec.pairs()) {
    directions.emplace_back(d.q, d.p, bound);
    if (d.p > 0 && d.p != d.q) directions.emplace_back(d.p, d.q, bound);
  }
  for (const auto& dir : directions)
    if (dir.is_value_set()) values = &dir;

  std::vector<Int> pi;
  pi.reserve(static_cast<std::size_t>(bound + 1));
  Int lowest_unused = 0;
  for (Int n = 0; n <= bound; ++n) {
    Int y = values ? lowest_unused : 0;
    for (;;) {
      if (values) y = values->next_unforbidden_value(y);
      if (y >= cap) throw_budget(n, cap);
      bool blocked = false;
      for (const auto& dir : directions) {
        if (&dir != values && dir.forbids(n, y)) {
          blocked = true;
          break;
        }
      }
      if (!blocked) break;
      ++y;
    }
    pi.push_back(y);
    for (auto& dir : directions) dir.insert(n, y);
    if (values) lowest_unused = values->next_unforbidden_value(lowest_unused);
  }
  return pi;
}

}  // namespace

PTable compute_pi(const GameSpec& spec, Int bound, SieveOptions options) {
  if (bound < 0) throw Error(ErrorCode::InvalidInput, "N must be non-negative");
  const Int cap = budget_cap(bound, options);
  auto pi = options.engine == SieveEngine::Naive ? sieve_naive(spec, bound, cap)
                                                 : sieve_optimized(spec, bound, cap);
  return PTable(spec, bound, std::move(pi));
}

Sequences derive_sequences(const PTable& table) {
  return {table.a(), table.b(), table.u_set(), table.l_set()};
}

DerivedRows derive_rows(const PTable& table, Int mult_lo, Int mult_hi) {
  DerivedRows rows;
  const auto& a = table.a();
  const auto& b = table.b();
  for (std::size_t i = 0; i < a.size(); ++i) {
    rows.delta.push_back(b[i] - a[i]);
    rows.gamma.push_back(b[i] - mult_lo * a[i]);
    rows.eta.push_back(mult_hi * b[i] - a[i]);
  }
  return rows;
}

namespace {

std::vector<std::uint8_t> value_multiplicity(const PTable& table, Int limit) {
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(limit), 0);
  auto bump = [&](Int v) {
    if (v < limit && seen[static_cast<std::size_t>(v)] < 255) ++seen[static_cast<std::size_t>(v)];
  };
  // A fixed point (i, i) covers i once; only Nim-like games have them beyond 0.
  for (std::size_t i = 0; i < table.pair_count(); ++i) {
    bump(table.a()[i]);
    if (table.b()[i] != table.a()[i]) bump(table.b()[i]);
  }
  return seen;
}

Int max_pair_value(const PTable& table) {
  Int hi = 0;
  for (Int v : table.b()) hi = std::max(hi, v);
  return std::max(hi, table.bound());
}

}  // namespace

Int settled_prefix(const PTable& table) {
  const Int limit = max_pair_value(table) + 2;
  const auto seen = value_multiplicity(table, limit);
  Int m = 0;
  while (m < limit && seen[static_cast<std::size_t>(m)] > 0) ++m;
  return m;
}

InvolutionReport verify_involution(const PTable& table) {
  InvolutionReport report;
  const Int n = table.bound();
  std::vector<std::uint8_t> hits(static_cast<std::size_t>(n + 1), 0);
  for (Int i = 0; i <= n; ++i) {
    const Int v = table.pi(i);
    if (v > n) {
      report.unsettled.push_back(i);
      continue;
    }
    if (table.pi(v) != i) report.violations.push_back(i);
    auto& h = hits[static_cast<std::size_t>(v)];
    if (h == 1) report.duplicate_values.push_back(v);
    h = static_cast<std::uint8_t>(std::min(2, h + 1));
  }
  for (Int i : report.unsettled)
    if (hits[static_cast<std::size_t>(i)] != 0) report.boundary_violations.push_back(i);
  return report;
}

ComplementarityReport check_complementarity(const PTable& table) {
  ComplementarityReport report;
  report.settled_prefix = settled_prefix(table);
  const Int limit = max_pair_value(table) + 1;
  const auto seen = value_multiplicity(table, limit);
  for (Int v = 0; v < report.settled_prefix; ++v) {
    const auto c = seen[static_cast<std::size_t>(v)];
    if (c == 0) report.missing.push_back(v);
    if (c > 1) report.repeated.push_back(v);
  }
  for (Int v = report.settled_prefix; v < limit; ++v)
    if (seen[static_cast<std::size_t>(v)] > 1) report.repeated.push_back(v);
  const auto& a = table.a();
  report.a_increasing = std::ranges::adjacent_find(a, std::greater_equal<>{}) == a.end();
  if (!a.empty() && (a[0] != 0 || table.b()[0] != 0)) report.missing.insert(report.missing.begin(), 0);
  return report;
}

DensityReport check_density(const PTable& table) {
  DensityReport report;
  Int in_u = 0;
  for (Int n = 0; n <= table.bound(); ++n) {
    if (table.pi(n) >= n) ++in_u;
    // #U cap [0,n] >= (n+1)/2
    if (!report.half_density_failure && 2 * in_u < n + 1) report.half_density_failure = n;
    // #{i : a_i <= M} > M/2 for M >= 1
    if (n >= 1 && !report.pair_density_failure && 2 * in_u <= n) report.pair_density_failure = n;
  }
  return report;
}

std::optional<std::size_t> first_repeated_difference(const PTable& table) {
  std::unordered_set<Int> seen;
  for (std::size_t i = 0; i < table.pair_count(); ++i)
    if (!seen.insert(table.b()[i] - table.a()[i]).second) return i;
  return std::nullopt;
}

bool b_is_increasing(const PTable& table) {
  return std::ranges::adjacent_find(table.b(), std::greater_equal<>{}) == table.b().end();
}

std::vector<Position> p_positions_in_grid(const PTable& table, Int xmax, Int ymax) {
  if (xmax > table.bound()) throw Error(ErrorCode::InvalidInput, "grid wider than the sieve bound");
  std::vector<Position> out;
  for (Int x = 0; x <= xmax; ++x)
    if (table.pi(x) <= ymax) out.push_back({x, table.pi(x)});
  return out;
}

std::vector<Position> sieve_p_positions(const GameSpec& spec, Int xmax, Int ymax) {
  if (xmax < 0 || ymax < 0) throw Error(ErrorCode::InvalidInput, "grid bounds must be non-negative");
  if ((xmax + 1) > kMaxGridCells / (ymax + 1))
    throw Error(ErrorCode::GridTooLarge, "grid exceeds " + std::to_string(kMaxGridCells) + " cells");
  std::vector<std::pair<Int, Int>> steps;
  for (const auto& d : spec.pairs()) {
    steps.emplace_back(d.p, d.q);
    if (d.p != d.q) steps.emplace_back(d.q, d.p);
  }
  const auto width = static_cast<std::size_t>(ymax + 1);
  std::vector<bool> losing_reachable(static_cast<std::size_t>(xmax + 1) * width, false);
  std::vector<Position> out;
  for (Int x = 0; x <= xmax; ++x) {
    for (Int y = 0; y <= ymax; ++y) {
      if (losing_reachable[static_cast<std::size_t>(x) * width + static_cast<std::size_t>(y)]) continue;
      out.push_back({x, y});
      for (const auto& [dx, dy] : steps)
        for (Int u = x + dx, v = y + dy; u <= xmax && v <= ymax; u += dx, v += dy)
          losing_reachable[static_cast<std::size_t>(u) * width + static_cast<std::size_t>(v)] = true;
    }
  }
  return out;
}

}  // namespace gdwn
