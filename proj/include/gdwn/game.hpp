#pragma once

// Game rules for Generalized Diagonal Wythoff Nim: a set of diagonal
// move-pairs (p, q), the legal-move relation, and a retrograde P/N solver
// that serves as an independent oracle for the sieve.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gdwn {

using Int = std::int64_t;

/// A move direction. Normalized so that p <= q and q >= 1.
struct DiagonalPair {
  Int p = 0;
  Int q = 1;

  friend auto operator<=>(const DiagonalPair&, const DiagonalPair&) = default;
};

struct Position {
  Int x = 0;
  Int y = 0;

  friend auto operator<=>(const Position&, const Position&) = default;
};

/// Validated, immutable set of move-pairs defining one game instance.
class GameSpec {
 public:
  /// Normalizes each pair to p <= q and checks the definition's
  /// constraints. Throws gdwn::Error (EmptySpec, NegativeEntry,
  /// NonPositiveQ, MultiplePair) naming the offending indices.
  static GameSpec validate(std::span<const std::pair<Int, Int>> pairs);
  static GameSpec validate(std::initializer_list<std::pair<Int, Int>> pairs);

  const std::vector<DiagonalPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool contains(Int p, Int q) const noexcept;

  /// True iff the spec contains both Nim (0,1) and the Wythoff diagonal (1,1).
  bool extends_wythoff() const noexcept { return contains(0, 1) && contains(1, 1); }

  /// "(0,1)(1,1)(1,2)"
  std::string to_string() const;

  friend bool operator==(const GameSpec&, const GameSpec&) = default;

 private:
  explicit GameSpec(std::vector<DiagonalPair> pairs) : pairs_(std::move(pairs)) {}
  std::vector<DiagonalPair> pairs_;
};

/// Convenience constructors for the games that recur throughout.
GameSpec nim_spec();
GameSpec wythoff_spec();
/// {(0,1),(1,1),(p,q)}
GameSpec extension_spec(Int p, Int q);

bool is_legal_move(const GameSpec& spec, Position from, Position to);

/// All positions reachable in one move, deduplicated and sorted
/// lexicographically.
std::vector<Position> followers(const GameSpec& spec, Position pos);

enum class Outcome : std::uint8_t { N = 0, P = 1 };

class OutcomeGrid {
 public:
  OutcomeGrid(Int xmax, Int ymax);

  Int xmax() const noexcept { return xmax_; }
  Int ymax() const noexcept { return ymax_; }
  Outcome outcome(Int x, Int y) const { return cells_[index(x, y)]; }
  bool is_p(Int x, Int y) const { return outcome(x, y) == Outcome::P; }
  void set(Int x, Int y, Outcome o) { cells_[index(x, y)] = o; }

  /// P-positions in lexicographic order.
  std::vector<Position> p_positions() const;

 private:
  std::size_t index(Int x, Int y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(ymax_ + 1) +
           static_cast<std::size_t>(y);
  }

  Int xmax_;
  Int ymax_;
  std::vector<Outcome> cells_;
};

inline constexpr Int kMaxGridCells = 100'000'000;

/// Retrograde P/N labelling of [0,xmax] x [0,ymax]. Positions are resolved
/// in lexicographic order; every move keeps both coordinates non-increasing
/// with at least one strictly smaller, so followers are always resolved first.
OutcomeGrid solve_bruteforce(const GameSpec& spec, Int xmax, Int ymax);

}  // namespace gdwn
