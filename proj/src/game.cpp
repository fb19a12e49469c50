#include "gdwn/game.hpp"

#include <algorithm>
#include <sstream>

#include "gdwn/error.hpp"

namespace gdwn {

namespace {

std::string join_indices(const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  return os.str();
}

// True iff a = t*b for some integer t >= 1.
bool is_multiple_of(const DiagonalPair& a, const DiagonalPair& b) {
  if (a.q % b.q != 0) return false;
  const Int t = a.q / b.q;
  return t >= 1 && a.p == t * b.p;
}

// (dx, dy) == t*(m, n) for some integer t >= 1, with n >= 1 or m >= 1.
bool is_positive_multiple(Int dx, Int dy, Int m, Int n) {
  if (n > 0) {
    if (dy <= 0 || dy % n != 0) return false;
    return dx == (dy / n) * m;
  }
  // n == 0, m >= 1
  if (dy != 0 || dx <= 0 || dx % m != 0) return false;
  return true;
}

}  // namespace

GameSpec GameSpec::validate(std::span<const std::pair<Int, Int>> pairs) {
  if (pairs.empty()) throw Error(ErrorCode::EmptySpec, "a game needs at least one move-pair");

  std::vector<DiagonalPair> normalized;
  normalized.reserve(pairs.size());
  std::vector<std::size_t> negative, nonpositive;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [p, q] = pairs[i];
    if (p > q) std::swap(p, q);
    if (p < 0) negative.push_back(i);
    else if (q < 1) nonpositive.push_back(i);
    normalized.push_back({p, q});
  }
  if (!negative.empty())
    throw Error(ErrorCode::NegativeEntry, "negative entry in pair(s) at index " + join_indices(negative));
  if (!nonpositive.empty())
    throw Error(ErrorCode::NonPositiveQ, "q < 1 in pair(s) at index " + join_indices(nonpositive));

  for (std::size_t i = 0; i < normalized.size(); ++i) {
    for (std::size_t j = 0; j < normalized.size(); ++j) {
      if (i != j && is_multiple_of(normalized[i], normalized[j])) {
        std::ostringstream os;
        os << "pair at index " << i << " (" << normalized[i].p << "," << normalized[i].q
           << ") is a multiple of pair at index " << j << " (" << normalized[j].p << ","
           << normalized[j].q << "); offending indices " << j << "," << i;
        throw Error(ErrorCode::MultiplePair, os.str());
      }
    }
  }
  return GameSpec(std::move(normalized));
}

GameSpec GameSpec::validate(std::initializer_list<std::pair<Int, Int>> pairs) {
  return validate(std::span<const std::pair<Int, Int>>(pairs.begin(), pairs.size()));
}

bool GameSpec::contains(Int p, Int q) const noexcept {
  if (p > q) std::swap(p, q);
  return std::ranges::any_of(pairs_, [&](const DiagonalPair& d) { return d.p == p && d.q == q; });
}

std::string GameSpec::to_string() const {
  std::ostringstream os;
  for (const auto& d : pairs_) os << '(' << d.p << ',' << d.q << ')';
  return os.str();
}

GameSpec nim_spec() { return GameSpec::validate({{0, 1}}); }
GameSpec wythoff_spec() { return GameSpec::validate({{0, 1}, {1, 1}}); }
GameSpec extension_spec(Int p, Int q) { return GameSpec::validate({{0, 1}, {1, 1}, {p, q}}); }

bool is_legal_move(const GameSpec& spec, Position from, Position to) {
  if (from.x < 0 || from.y < 0 || to.x < 0 || to.y < 0) return false;
  const Int dx = from.x - to.x;
  const Int dy = from.y - to.y;
  if (dx < 0 || dy < 0 || (dx == 0 && dy == 0)) return false;
  for (const auto& d : spec.pairs()) {
    if (is_positive_multiple(dx, dy, d.p, d.q) || is_positive_multiple(dx, dy, d.q, d.p)) return true;
  }
  return false;
}

std::vector<Position> followers(const GameSpec& spec, Position pos) {
  std::vector<Position> out;
  for (const auto& d : spec.pairs()) {
    for (Int t = 1; pos.x - t * d.p >= 0 && pos.y - t * d.q >= 0; ++t)
      out.push_back({pos.x - t * d.p, pos.y - t * d.q});
    if (d.p == d.q) continue;
    for (Int t = 1; pos.x - t * d.q >= 0 && pos.y - t * d.p >= 0; ++t)
      out.push_back({pos.x - t * d.q, pos.y - t * d.p});
  }
  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OutcomeGrid::OutcomeGrid(Int xmax, Int ymax)
    : xmax_(xmax),
      ymax_(ymax),
      cells_(static_cast<std::size_t>(xmax + 1) * static_cast<std::size_t>(ymax + 1), Outcome::N) {}

std::vector<Position> OutcomeGrid::p_positions() const {
  std::vector<Position> out;
  for (Int x = 0; x <= xmax_; ++x)
    for (Int y = 0; y <= ymax_; ++y)
      if (is_p(x, y)) out.push_back({x, y});
  return out;
}

OutcomeGrid solve_bruteforce(const GameSpec& spec, Int xmax, Int ymax) {
  if (xmax < 0 || ymax < 0) throw Error(ErrorCode::InvalidInput, "grid bounds must be non-negative");
  if ((xmax + 1) > kMaxGridCells / (ymax + 1))
    throw Error(ErrorCode::GridTooLarge, "grid exceeds " + std::to_string(kMaxGridCells) + " cells");

  OutcomeGrid grid(xmax, ymax);
  for (Int x = 0; x <= xmax; ++x) {
    for (Int y = 0; y <= ymax; ++y) {
      bool has_p_follower = false;
      for (const Position& f : followers(spec, {x, y})) {
        if (grid.is_p(f.x, f.y)) {
          has_p_follower = true;
          break;
        }
      }
      grid.set(x, y, has_p_follower ? Outcome::N : Outcome::P);
    }
  }
  return grid;
}

}  // namespace gdwn
