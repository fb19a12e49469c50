#pragma once

// Beatty sequences of the golden ratio, splitting-pair classification,
// the Wythoff / dual Wythoff arrays and Zeckendorf numeration. All golden
// ratio floors are evaluated exactly in integer arithmetic.

#include <optional>
#include <string>
#include <vector>

#include "gdwn/game.hpp"

namespace gdwn {

/// Largest n accepted by the Beatty functions; B_n still fits in 63 bits.
inline constexpr Int kMaxBeattyIndex = 3'000'000'000'000'000'000;

/// floor(n * phi)
Int beatty_A(Int n);
/// floor(n * phi^2) = beatty_A(n) + n
Int beatty_B(Int n);
/// ceil(n * phi); equals beatty_A(n) + 1 for n >= 1.
Int ceil_phi(Int n);

/// floor(sqrt(v)) for 128-bit v.
unsigned __int128 isqrt128(unsigned __int128 v);

struct PairClass {
  enum class Kind { WythoffPair, DualWythoffPair, NonSplitting };
  Kind kind = Kind::NonSplitting;
  /// The Beatty index n with (p,q) = (A_n, B_n) or (A_n + 1, B_n + 1).
  Int index = 0;

  bool splitting() const { return kind != Kind::NonSplitting; }
  friend bool operator==(const PairClass&, const PairClass&) = default;
};

std::string to_string(PairClass::Kind kind);

/// Requires 1 <= p < q (InvalidPair otherwise).
PairClass classify_pair(Int p, Int q);
/// Batch-scan variant: normalizes the order and maps p == 0 or p == q to
/// NonSplitting instead of throwing.
PairClass classify_pair_lenient(Int p, Int q);

/// Least t in [1, tmax] such that (tp, tq) is a splitting pair.
std::optional<Int> splitting_multiple(Int p, Int q, Int tmax);

using IntTable = std::vector<std::vector<Int>>;

/// Rows are seeded by the least positive integer not in earlier rows, the
/// second entry is its Zeckendorf right-shift, and the rest follow the
/// Fibonacci recurrence.
IntTable wythoff_array(int rows, int cols);

/// Dual array: rows seeded by the least integer >= 2 not in earlier rows;
/// the second entry of seed x is Z(x - 1) + 1, i.e. (A_n + 1, B_n + 1).
IntTable dual_wythoff_array(int rows, int cols);

/// Indices k of Fibonacci numbers F_k with F_2 = 1, F_3 = 2, ..., in
/// decreasing order of k (greedy order).
struct ZeckendorfRep {
  std::vector<int> indices;
  friend bool operator==(const ZeckendorfRep&, const ZeckendorfRep&) = default;
};

/// F_k, k >= 0, with F_0 = 0 and F_1 = F_2 = 1. Throws Overflow for k > 92.
Int fibonacci(int k);

ZeckendorfRep zeckendorf(Int n);
Int reconstruct(const ZeckendorfRep& rep);
/// Maps every F_k to F_{k+1}.
Int z_shift(const ZeckendorfRep& rep);
bool is_non_adjacent(const ZeckendorfRep& rep);

}  // namespace gdwn
