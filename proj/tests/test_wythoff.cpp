#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "gdwn/error.hpp"
#include "gdwn/wythoff.hpp"
#include "oracle.hpp"

using namespace gdwn;
using Kind = PairClass::Kind;

TEST_CASE("Beatty values") {
  const std::vector<Int> A{1, 3, 4, 6, 8, 9, 11, 12, 14};
  const std::vector<Int> B{2, 5, 7, 10, 13, 15, 18, 20, 23};
  for (Int n = 1; n <= 9; ++n) {
    CHECK(beatty_A(n) == A[static_cast<std::size_t>(n - 1)]);
    CHECK(beatty_B(n) == B[static_cast<std::size_t>(n - 1)]);
  }
  CHECK(beatty_A(0) == 0);
  CHECK(beatty_B(0) == 0);
  CHECK(beatty_A(19) == 30);
  CHECK(beatty_B(19) == 49);
  CHECK(ceil_phi(0) == 0);
  CHECK(ceil_phi(1) == 2);
}

TEST_CASE("Beatty values match the squaring oracle") {
  for (Int n = 0; n <= 5000; ++n) {
    CHECK(beatty_A(n) == oracle::A(n));
    CHECK(beatty_B(n) == beatty_A(n) + n);
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Int n = static_cast<Int>(rng() % static_cast<std::uint64_t>(kMaxBeattyIndex)) + 1;
    CAPTURE(n);
    CHECK(beatty_A(n) == oracle::A(n));
    CHECK(ceil_phi(n) == beatty_A(n) + 1);
  }
  CHECK(beatty_A(kMaxBeattyIndex) == oracle::A(kMaxBeattyIndex));
  CHECK_THROWS_AS(beatty_A(kMaxBeattyIndex + 1), Error);
  CHECK_THROWS_AS(beatty_A(-1), Error);
}

TEST_CASE("Beatty sequences are complementary") {
  std::vector<int> hits(4001, 0);
  for (Int n = 1; beatty_A(n) <= 4000; ++n) {
    ++hits[static_cast<std::size_t>(beatty_A(n))];
    if (beatty_B(n) <= 4000) ++hits[static_cast<std::size_t>(beatty_B(n))];
  }
  for (std::size_t v = 1; v < hits.size(); ++v) CHECK(hits[v] == 1);
}

TEST_CASE("isqrt128") {
  CHECK(isqrt128(0) == 0);
  CHECK(isqrt128(15) == 3);
  CHECK(isqrt128(16) == 4);
  const unsigned __int128 big = static_cast<unsigned __int128>(3'000'000'000'000'000'000ULL) * 3'000'000'000'000'000'000ULL;
  CHECK(isqrt128(big) == 3'000'000'000'000'000'000ULL);
  CHECK(isqrt128(big - 1) == 2'999'999'999'999'999'999ULL);
}

TEST_CASE("pair classification") {
  CHECK(classify_pair(1, 2) == PairClass{Kind::WythoffPair, 1});
  CHECK(classify_pair(4, 7) == PairClass{Kind::WythoffPair, 3});
  CHECK(classify_pair(2, 3) == PairClass{Kind::DualWythoffPair, 1});
  CHECK(classify_pair(4, 6) == PairClass{Kind::DualWythoffPair, 2});
  CHECK(classify_pair(2, 4).kind == Kind::NonSplitting);
  CHECK(classify_pair(31, 51).kind == Kind::NonSplitting);
  CHECK(classify_pair(731, 1183).kind == Kind::WythoffPair);
  CHECK(to_string(Kind::DualWythoffPair) == "dual Wythoff pair");
  for (auto [p, q] : std::vector<std::pair<Int, Int>>{{0, 1}, {2, 2}, {3, 2}, {-1, 4}})
    CHECK_THROWS_AS(classify_pair(p, q), Error);
  CHECK(classify_pair_lenient(7, 4) == classify_pair(4, 7));
  CHECK(classify_pair_lenient(0, 1).kind == Kind::NonSplitting);
  CHECK(classify_pair_lenient(3, 3).kind == Kind::NonSplitting);
}

TEST_CASE("classification by enumeration") {
  std::map<std::pair<Int, Int>, Kind> table;
  for (Int n = 1; n <= 200; ++n) {
    table[{oracle::A(n), oracle::B(n)}] = Kind::WythoffPair;
    table[{oracle::A(n) + 1, oracle::B(n) + 1}] = Kind::DualWythoffPair;
  }
  for (Int q = 2; q <= 300; ++q)
    for (Int p = 1; p < q; ++p) {
      const auto it = table.find({p, q});
      CHECK(classify_pair(p, q).kind == (it == table.end() ? Kind::NonSplitting : it->second));
    }
}

TEST_CASE("splitting multiples") {
  CHECK(splitting_multiple(1, 2, 10) == 1);
  CHECK_FALSE(splitting_multiple(10, 15, 100));
  CHECK_FALSE(splitting_multiple(2, 4, 10));
  CHECK(splitting_multiple(2, 3, 5) == 1);
  CHECK_THROWS_AS(splitting_multiple(3, 3, 5), Error);
}

TEST_CASE("Wythoff arrays") {
  const auto w = wythoff_array(5, 10);
  CHECK(w[0] == std::vector<Int>{1, 2, 3, 5, 8, 13, 21, 34, 55, 89});
  const std::vector<std::pair<Int, Int>> heads{{1, 2}, {4, 7}, {6, 10}, {9, 15}, {12, 20}};
  for (std::size_t r = 0; r < 5; ++r) CHECK(std::pair{w[r][0], w[r][1]} == heads[r]);

  const auto d = dual_wythoff_array(6, 10);
  CHECK(d[3] == std::vector<Int>{9, 14, 23, 37, 60, 97, 157, 254, 411, 665});
  CHECK(d[4][9] == 898);
  for (const auto& row : d)
    for (std::size_t c = 2; c < row.size(); ++c) CHECK(row[c] == row[c - 1] + row[c - 2]);
}

TEST_CASE("Wythoff array rows partition the positive integers") {
  const auto w = wythoff_array(60, 12);
  std::set<Int> seen;
  for (const auto& row : w)
    for (Int v : row) CHECK(seen.insert(v).second);
  for (Int v = 1; v <= 100; ++v) CHECK(seen.count(v) == 1);
}

TEST_CASE("Zeckendorf") {
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(92) == 7540113804746346429LL);
  CHECK_THROWS_AS(fibonacci(93), Error);

  const auto z14 = zeckendorf(14);
  CHECK(reconstruct(z14) == 14);
  CHECK(z_shift(z14) == 23);
  CHECK(z_shift(zeckendorf(1)) == 2);
  const auto z100 = zeckendorf(100);
  std::vector<Int> parts;
  for (int k : z100.indices) parts.push_back(fibonacci(k));
  CHECK(parts == std::vector<Int>{89, 8, 3});
  CHECK(z_shift(z100) == 162);
  CHECK_THROWS_AS(zeckendorf(0), Error);
  CHECK_FALSE(is_non_adjacent(ZeckendorfRep{{5, 4}}));
}

TEST_CASE("Zeckendorf properties") {
  for (Int n = 1; n <= 3000; ++n) {
    const auto z = zeckendorf(n);
    CHECK(reconstruct(z) == n);
    CHECK(is_non_adjacent(z));
  }
  for (Int k = 1; k <= 1000; ++k) CHECK(z_shift(zeckendorf(beatty_A(k))) == beatty_B(k));
}
