#include <doctest.h>

#include <algorithm>

#include "gdwn/error.hpp"
#include "gdwn/game.hpp"
#include "gdwn/sieve.hpp"
#include "oracle.hpp"

using namespace gdwn;

namespace {

ErrorCode code_of(std::initializer_list<std::pair<Int, Int>> pairs) {
  try {
    GameSpec::validate(pairs);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("spec validation") {
  const auto spec = GameSpec::validate({{0, 1}, {1, 1}, {1, 2}});
  CHECK(spec.size() == 3);
  CHECK(spec.to_string() == "(0,1)(1,1)(1,2)");
  CHECK(spec.extends_wythoff());

  CHECK(GameSpec::validate({{2, 4}, {1, 1}, {0, 1}}).size() == 3);
  CHECK(GameSpec::validate({{2, 1}}).pairs()[0] == DiagonalPair{1, 2});

  CHECK(code_of({}) == ErrorCode::EmptySpec);
  CHECK(code_of({{0, 1}, {0, 2}}) == ErrorCode::MultiplePair);
  CHECK(code_of({{1, 2}, {3, 6}}) == ErrorCode::MultiplePair);
  CHECK(code_of({{1, 1}, {1, 1}}) == ErrorCode::MultiplePair);
  CHECK(code_of({{0, 0}}) == ErrorCode::NonPositiveQ);
  CHECK(code_of({{-1, 2}}) == ErrorCode::NegativeEntry);
  CHECK(code_of({{4, 6}, {2, 3}}) == ErrorCode::MultiplePair);
  // Same slope but neither is an integer multiple of the other.
  CHECK(GameSpec::validate({{2, 4}, {3, 6}}).size() == 2);
}

TEST_CASE("multiple-pair errors name both indices") {
  try {
    GameSpec::validate({{0, 1}, {1, 1}, {0, 3}});
    FAIL("no error");
  } catch (const Error& e) {
    const std::string what = e.what();
    CHECK(what.find('0') != std::string::npos);
    CHECK(what.find('2') != std::string::npos);
  }
}

TEST_CASE("legal moves") {
  const auto g24 = extension_spec(2, 4);
  CHECK(is_legal_move(g24, {8, 13}, {2, 1}));
  CHECK(is_legal_move(g24, {13, 8}, {1, 2}));
  // A rational multiple of (2,4) is not a move.
  CHECK_FALSE(is_legal_move(g24, {8, 13}, {7, 11}));
  CHECK(is_legal_move(extension_spec(4, 6), {8, 13}, {4, 7}));
  CHECK_FALSE(is_legal_move(wythoff_spec(), {5, 5}, {5, 5}));
  CHECK_FALSE(is_legal_move(wythoff_spec(), {5, 5}, {6, 4}));
}

TEST_CASE("followers") {
  CHECK(followers(wythoff_spec(), {1, 1}) == std::vector<Position>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(followers(nim_spec(), {2, 0}) == std::vector<Position>{{0, 0}, {1, 0}});
  const auto f = followers(extension_spec(1, 2), {2, 4});
  CHECK(std::find(f.begin(), f.end(), Position{0, 0}) != f.end());
  CHECK(followers(nim_spec(), {0, 0}).empty());
}

TEST_CASE("followers agree with the legal-move relation on a 21x21 box") {
  for (const auto& spec : {extension_spec(1, 2), extension_spec(2, 4), GameSpec::validate({{0, 2}, {2, 2}})}) {
    for (Int x = 0; x <= 20; ++x)
      for (Int y = 0; y <= 20; ++y) {
        const auto f = followers(spec, {x, y});
        CHECK(std::is_sorted(f.begin(), f.end()));
        std::size_t legal = 0;
        for (Int u = 0; u <= x; ++u)
          for (Int v = 0; v <= y; ++v) {
            const bool ok = is_legal_move(spec, {x, y}, {u, v});
            CHECK(ok == is_legal_move(spec, {y, x}, {v, u}));
            if (ok) {
              ++legal;
              CHECK(u + v < x + y);
            }
          }
        CHECK(legal == f.size());
      }
  }
}

TEST_CASE("retrograde oracle") {
  const auto nim = solve_bruteforce(nim_spec(), 6, 6);
  for (Int x = 0; x <= 6; ++x)
    for (Int y = 0; y <= 6; ++y) CHECK(nim.is_p(x, y) == (x == y));

  const auto w = solve_bruteforce(wythoff_spec(), 14, 14);
  const std::vector<Position> expected{{0, 0}, {1, 2}, {2, 1}, {3, 5}, {4, 7}, {5, 3},
                                       {6, 10}, {7, 4}, {8, 13}, {10, 6}, {13, 8}};
  CHECK(w.p_positions() == expected);

  CHECK_THROWS_AS(solve_bruteforce(nim_spec(), 100000, 100000), Error);
  try {
    solve_bruteforce(nim_spec(), 100000, 100000);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GridTooLarge);
  }
}

TEST_CASE("oracle grids are symmetric and match the memoized recursion") {
  const std::vector<oracle::Moves> games{{{0, 1}, {1, 1}, {1, 2}}, {{0, 1}, {1, 1}, {2, 4}}, {{0, 2}, {2, 2}},
                                         {{1, 3}}, {{0, 1}, {2, 2}}};
  for (const auto& moves : games) {
    std::vector<std::pair<Int, Int>> raw(moves.begin(), moves.end());
    const auto spec = GameSpec::validate(raw);
    const auto grid = solve_bruteforce(spec, 30, 30);
    oracle::Game ref(moves);
    for (Int x = 0; x <= 30; ++x)
      for (Int y = 0; y <= 30; ++y) {
        CHECK(grid.is_p(x, y) == grid.is_p(y, x));
        CHECK(grid.is_p(x, y) == ref.is_p(x, y));
      }
    CHECK(grid.is_p(0, 0));
  }
}
