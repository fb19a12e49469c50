#include <doctest.h>

#include <random>
#include <set>

#include "gdwn/error.hpp"
#include "gdwn/sieve.hpp"
#include "oracle.hpp"

using namespace gdwn;

namespace {

std::vector<std::pair<Int, Int>> pairs_of(const PTable& t) {
  std::vector<std::pair<Int, Int>> out;
  for (std::size_t i = 0; i < t.pair_count(); ++i) out.emplace_back(t.a()[i], t.b()[i]);
  return out;
}

std::vector<GameSpec> fixture_specs() {
  return {nim_spec(),          wythoff_spec(),      extension_spec(1, 2), extension_spec(2, 3),
          extension_spec(2, 4), extension_spec(4, 6), extension_spec(4, 7)};
}

}  // namespace

TEST_CASE("Nim is the identity") {
  const auto t = compute_pi(nim_spec(), 5);
  CHECK(t.pi() == std::vector<Int>{0, 1, 2, 3, 4, 5});
  CHECK(t.l_set().empty());
  CHECK(t.a() == t.b());
  CHECK(derive_rows(t).delta == std::vector<Int>(6, 0));
}

TEST_CASE("(1,2) reference table") {
  const auto t = compute_pi(extension_spec(1, 2), 27);
  const std::vector<std::pair<Int, Int>> expected{
      {0, 0},   {1, 3},   {2, 6},   {4, 5},   {7, 10},  {8, 14},  {9, 17},  {11, 25}, {12, 28}, {13, 18},
      {15, 35}, {16, 23}, {19, 31}, {20, 29}, {21, 48}, {22, 32}, {24, 55}, {26, 37}, {27, 40}};
  CHECK(pairs_of(t) == expected);
  CHECK(t.u_set() == std::vector<Int>{0, 1, 2, 4, 7, 8, 9, 11, 12, 13, 15, 16, 19, 20, 21, 22, 24, 26, 27});
  const auto rows = derive_rows(t);
  CHECK(std::vector<Int>(rows.delta.begin(), rows.delta.begin() + 7) == std::vector<Int>{0, 2, 4, 1, 3, 6, 8});
  CHECK(std::vector<Int>(rows.gamma.begin(), rows.gamma.begin() + 9) ==
        std::vector<Int>{0, 1, 2, -3, -4, -2, -1, 3, 4});
  CHECK(std::vector<Int>(rows.eta.begin(), rows.eta.begin() + 7) == std::vector<Int>{0, 5, 10, 6, 13, 20, 25});
  CHECK(t.pi(t.pi(3)) == 3);
}

TEST_CASE("(2,3) reference table") {
  const auto t = compute_pi(extension_spec(2, 3), 19);
  CHECK(t.a() == std::vector<Int>{0, 1, 3, 4, 5, 9, 10, 11, 12, 13, 14, 15, 19});
  CHECK(t.b() == std::vector<Int>{0, 2, 6, 8, 7, 16, 18, 20, 17, 24, 26, 21, 34});
  CHECK(derive_rows(t).delta == std::vector<Int>{0, 1, 3, 4, 2, 7, 8, 9, 5, 11, 12, 6, 15});
}

TEST_CASE("(2,4) table includes (15,25)") {
  const auto t = compute_pi(extension_spec(2, 4), 21);
  CHECK(t.a() == std::vector<Int>{0, 1, 3, 4, 6, 8, 9, 11, 12, 13, 15, 16, 21});
  CHECK(t.b() == std::vector<Int>{0, 2, 5, 7, 10, 17, 14, 19, 18, 20, 25, 27, 33});
  oracle::Game ref({{0, 1}, {1, 1}, {2, 4}});
  CHECK(ref.is_p(15, 25));
  for (Int y = 0; y < 25; ++y) CHECK_FALSE(ref.is_p(15, y));
}

TEST_CASE("(4,6) and (4,7) tables") {
  CHECK(compute_pi(extension_spec(4, 6), 8).pi(8) == 14);
  oracle::Game ref({{0, 1}, {1, 1}, {4, 6}});
  CHECK(ref.is_p(8, 14));
  const auto t = compute_pi(extension_spec(4, 7), 18);
  CHECK(t.a() == std::vector<Int>{0, 1, 3, 4, 6, 7, 10, 11, 12, 14, 15, 18});
  CHECK(t.b() == std::vector<Int>{0, 2, 5, 8, 9, 13, 17, 16, 20, 25, 24, 28});
}

TEST_CASE("Wythoff table") {
  const auto t = compute_pi(wythoff_spec(), 2000);
  const auto ref = oracle::wythoff_pairs(static_cast<Int>(t.pair_count()));
  CHECK(pairs_of(t) == ref);
  CHECK(t.pi(2) == 1);
  CHECK(t.pi(1) == 2);
  CHECK(b_is_increasing(t));
}

TEST_CASE("engines agree") {
  for (const auto& spec : fixture_specs()) {
    CAPTURE(spec.to_string());
    CHECK(compute_pi(spec, 600, {SieveEngine::Naive}) == compute_pi(spec, 600, {SieveEngine::Optimized}));
  }
  // Pairs with common factors and games without the Wythoff diagonal.
  for (const auto& spec : {GameSpec::validate({{0, 1}, {3, 6}, {2, 5}}), GameSpec::validate({{0, 1}, {2, 2}}),
                           GameSpec::validate({{0, 1}, {1, 1}, {1, 2}, {2, 3}, {3, 5}}),
                           GameSpec::validate({{0, 2}, {2, 2}}), GameSpec::validate({{1, 3}})}) {
    CAPTURE(spec.to_string());
    CHECK(compute_pi(spec, 400, {SieveEngine::Naive}) == compute_pi(spec, 400, {SieveEngine::Optimized}));
  }
}

TEST_CASE("engines agree on random specs") {
  std::mt19937_64 rng(20240607);
  std::uniform_int_distribution<Int> coord(0, 9);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::pair<Int, Int>> raw{{0, 1}};
    std::set<std::pair<Int, Int>> seen;
    const int extra = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < extra; ++k) {
      const Int p = coord(rng);
      const Int q = p + 1 + coord(rng);
      if (p == 0) continue;
      raw.emplace_back(p, q);
    }
    GameSpec spec = nim_spec();
    try {
      spec = GameSpec::validate(raw);
    } catch (const Error&) {
      continue;
    }
    CAPTURE(spec.to_string());
    const auto fast = compute_pi(spec, 300);
    CHECK(compute_pi(spec, 300, {SieveEngine::Naive}) == fast);
    CHECK(verify_involution(fast).ok());
  }
}

TEST_CASE("sieve matches the oracle on a 60x60 grid") {
  for (const auto& spec : fixture_specs()) {
    CAPTURE(spec.to_string());
    const auto t = compute_pi(spec, 60);
    CHECK(p_positions_in_grid(t, 60, 60) == solve_bruteforce(spec, 60, 60).p_positions());
  }
}

TEST_CASE("forward P-set sieve matches the oracle, with or without Nim moves") {
  for (const auto& spec : {extension_spec(1, 2), GameSpec::validate({{0, 2}}), GameSpec::validate({{0, 2}, {2, 2}}),
                           GameSpec::validate({{1, 3}}), GameSpec::validate({{0, 3}, {3, 3}, {1, 4}})}) {
    CAPTURE(spec.to_string());
    CHECK(sieve_p_positions(spec, 60, 45) == solve_bruteforce(spec, 60, 45).p_positions());
  }
}

TEST_CASE("involution, complementarity and density") {
  for (const auto& spec : fixture_specs()) {
    CAPTURE(spec.to_string());
    const auto t = compute_pi(spec, 2000);
    const auto inv = verify_involution(t);
    CHECK(inv.ok());
    CHECK(t.pi(0) == 0);
    CHECK(t.u_set().size() + t.l_set().size() == 2001);
    const auto comp = check_complementarity(t);
    CHECK(comp.ok());
    CHECK(comp.settled_prefix > 2000);
    CHECK(check_density(t).ok());
    if (spec.extends_wythoff()) CHECK_FALSE(first_repeated_difference(t));
  }
}

TEST_CASE("unsettled indices lie above the bound") {
  const auto t = compute_pi(extension_spec(1, 2), 27);
  const auto inv = verify_involution(t);
  CHECK(inv.ok());
  for (Int i : inv.unsettled) CHECK(t.pi(i) > 27);
  CHECK(settled_prefix(t) == 30);
}

TEST_CASE("b is not increasing for (1,2)") { CHECK_FALSE(b_is_increasing(compute_pi(extension_spec(1, 2), 30))); }

TEST_CASE("degenerate and failing inputs") {
  CHECK(compute_pi(wythoff_spec(), 0).pi() == std::vector<Int>{0});
  CHECK_THROWS_AS(compute_pi(wythoff_spec(), -1), Error);
  try {
    compute_pi(extension_spec(1, 2), 27, {SieveEngine::Optimized, 1});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
  try {
    compute_pi(extension_spec(1, 2), 27, {SieveEngine::Naive, 1});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
  CHECK_THROWS_AS(PTable(nim_spec(), 3, {0, 1, 2}), Error);
  CHECK_THROWS_AS(p_positions_in_grid(compute_pi(nim_spec(), 5), 6, 6), Error);
}
