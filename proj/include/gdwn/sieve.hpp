#pragma once

// The greedy involution pi_Q: pi(n) is the least value y such that the
// position (n, y) has no move to any earlier (j, pi(j)). Its graph is the
// P-position set of the game. Two engines are provided; they produce
// identical tables.

#include <cstdint>
#include <optional>
#include <vector>

#include "gdwn/game.hpp"

namespace gdwn {

enum class SieveEngine { Naive, Optimized };

struct SieveOptions {
  SieveEngine engine = SieveEngine::Optimized;
  /// Candidate values are scanned upward from 0; reaching
  /// cap_factor * (N + 1) raises BudgetExceeded.
  Int cap_factor = 16;
};

/// pi on [0, N] together with the split into U = {i : pi(i) >= i} and
/// L = {i : pi(i) < i}, and the pair sequences a_i = u_i, b_i = pi(u_i).
/// Only indices <= N are represented; pi(i) itself may exceed N.
class PTable {
 public:
  /// Wraps an already computed pi. Throws InvalidInput when pi.size() != N+1.
  PTable(GameSpec spec, Int bound, std::vector<Int> pi);

  const GameSpec& spec() const noexcept { return spec_; }
  Int bound() const noexcept { return bound_; }
  const std::vector<Int>& pi() const noexcept { return pi_; }
  Int pi(Int i) const { return pi_.at(static_cast<std::size_t>(i)); }

  const std::vector<Int>& u_set() const noexcept { return u_; }
  const std::vector<Int>& l_set() const noexcept { return l_; }
  const std::vector<Int>& a() const noexcept { return u_; }
  const std::vector<Int>& b() const noexcept { return b_; }
  std::size_t pair_count() const noexcept { return u_.size(); }

  friend bool operator==(const PTable& x, const PTable& y) {
    return x.spec_ == y.spec_ && x.bound_ == y.bound_ && x.pi_ == y.pi_;
  }

 private:
  GameSpec spec_;
  Int bound_;
  std::vector<Int> pi_;
  std::vector<Int> u_, l_, b_;
};

PTable compute_pi(const GameSpec& spec, Int bound, SieveOptions options = {});

struct Sequences {
  std::vector<Int> a, b, u, l;
};

Sequences derive_sequences(const PTable& table);

struct DerivedRows {
  std::vector<Int> delta, gamma, eta;
};

/// delta = b - a, gamma = b - mult_lo * a, eta = mult_hi * b - a.
DerivedRows derive_rows(const PTable& table, Int mult_lo = 2, Int mult_hi = 2);

/// Largest m such that every value below m is an a- or b-value of a pair
/// with a <= N. Complementarity can only be asserted below this boundary.
Int settled_prefix(const PTable& table);

struct InvolutionReport {
  /// i <= N with pi(i) <= N and pi(pi(i)) != i.
  std::vector<Int> violations;
  /// Values hit twice by pi restricted to [0, N].
  std::vector<Int> duplicate_values;
  /// i <= N with pi(i) > N: their partners lie beyond the bound.
  std::vector<Int> unsettled;
  /// Unsettled indices that nevertheless appear as a value of pi on [0, N].
  std::vector<Int> boundary_violations;

  bool ok() const { return violations.empty() && duplicate_values.empty() && boundary_violations.empty(); }
};

InvolutionReport verify_involution(const PTable& table);

struct ComplementarityReport {
  Int settled_prefix = 0;
  /// Values below the settled prefix that are neither a- nor b-values.
  std::vector<Int> missing;
  /// Values covered by more than one pair; a fixed pair (i, i) covers i once.
  std::vector<Int> repeated;
  bool a_increasing = true;

  bool ok() const { return missing.empty() && repeated.empty() && a_increasing; }
};

ComplementarityReport check_complementarity(const PTable& table);

struct DensityReport {
  /// First n with #(U cap [0,n]) < (n+1)/2.
  std::optional<Int> half_density_failure;
  /// First M >= 1 with #{i : a_i <= M} <= M/2.
  std::optional<Int> pair_density_failure;

  bool ok() const { return !half_density_failure && !pair_density_failure; }
};

DensityReport check_density(const PTable& table);

/// First pair index i whose difference b_i - a_i repeats an earlier one.
std::optional<std::size_t> first_repeated_difference(const PTable& table);

/// Whether b restricted to the pair list is increasing (b coincides with L).
bool b_is_increasing(const PTable& table);

/// Link to the oracle: the sieve's P-set {(i,pi(i))} cap grid, both
/// orientations, in lexicographic order.
std::vector<Position> p_positions_in_grid(const PTable& table, Int xmax, Int ymax);

/// P-positions of [0,xmax] x [0,ymax] by forward marking: each new P-position
/// marks every position that can move onto it. Valid for any spec, including
/// those without (0,1) whose columns may hold several P-positions.
/// Lexicographic order; throws GridTooLarge like the oracle.
std::vector<Position> sieve_p_positions(const GameSpec& spec, Int xmax, Int ymax);

}  // namespace gdwn
