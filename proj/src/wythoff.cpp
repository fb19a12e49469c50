#include "gdwn/wythoff.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "gdwn/error.hpp"

namespace gdwn {

unsigned __int128 isqrt128(unsigned __int128 v) {
  if (v < 2) return v;
  // Floating estimate, then exact correction in both directions.
  auto r = static_cast<unsigned __int128>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

namespace {

void check_beatty_index(Int n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "Beatty index must be non-negative");
  if (n > kMaxBeattyIndex) throw Error(ErrorCode::Overflow, "Beatty index " + std::to_string(n) + " out of range");
}

}  // namespace

Int beatty_A(Int n) {
  check_beatty_index(n);
  // n*phi = (n + n*sqrt5)/2 and n*sqrt5 is irrational for n > 0, so
  // floor((n + n*sqrt5)/2) = floor((n + floor(n*sqrt5))/2).
  const auto un = static_cast<unsigned __int128>(n);
  const auto root5n = isqrt128(5 * un * un);
  return static_cast<Int>((un + root5n) / 2);
}

Int beatty_B(Int n) { return beatty_A(n) + n; }

Int ceil_phi(Int n) { return n == 0 ? 0 : beatty_A(n) + 1; }

std::string to_string(PairClass::Kind kind) {
  switch (kind) {
    case PairClass::Kind::WythoffPair: return "Wythoff pair";
    case PairClass::Kind::DualWythoffPair: return "dual Wythoff pair";
    case PairClass::Kind::NonSplitting: return "non-splitting";
  }
  return "?";
}

PairClass classify_pair(Int p, Int q) {
  if (p < 1 || p >= q)
    throw Error(ErrorCode::InvalidPair,
                "(" + std::to_string(p) + "," + std::to_string(q) + ") must satisfy 1 <= p < q");
  // (A_l, B_l) = (A_l, A_l + l), so the only candidate index is l = q - p.
  const Int l = q - p;
  const Int a = beatty_A(l);
  if (p == a) return {PairClass::Kind::WythoffPair, l};
  if (p == a + 1) return {PairClass::Kind::DualWythoffPair, l};
  return {PairClass::Kind::NonSplitting, 0};
}

PairClass classify_pair_lenient(Int p, Int q) {
  if (p > q) std::swap(p, q);
  if (p < 1 || p == q) return {};
  return classify_pair(p, q);
}

std::optional<Int> splitting_multiple(Int p, Int q, Int tmax) {
  classify_pair(p, q);  // validates
  for (Int t = 1; t <= tmax; ++t)
    if (classify_pair(t * p, t * q).splitting()) return t;
  return std::nullopt;
}

namespace {

constexpr std::array<Int, 93> kFibonacci = [] {
  std::array<Int, 93> f{};
  f[1] = 1;
  for (std::size_t k = 2; k < f.size(); ++k) f[k] = f[k - 1] + f[k - 2];
  return f;
}();

}  // namespace

Int fibonacci(int k) {
  if (k < 0 || k > 92) throw Error(ErrorCode::Overflow, "Fibonacci index out of 64-bit range");
  return kFibonacci[static_cast<std::size_t>(k)];
}

ZeckendorfRep zeckendorf(Int n) {
  if (n <= 0) throw Error(ErrorCode::InvalidInput, "Zeckendorf representation needs n >= 1");
  int k = 2;
  while (k < 92 && fibonacci(k + 1) <= n) ++k;
  ZeckendorfRep rep;
  for (; n > 0 && k >= 2; --k) {
    const Int f = fibonacci(k);
    if (f <= n) {
      rep.indices.push_back(k);
      n -= f;
      --k;  // greedy never picks two neighbours
    }
  }
  return rep;
}

Int reconstruct(const ZeckendorfRep& rep) {
  Int sum = 0;
  for (int k : rep.indices) sum += fibonacci(k);
  return sum;
}

Int z_shift(const ZeckendorfRep& rep) {
  Int sum = 0;
  for (int k : rep.indices) {
    const Int f = fibonacci(k + 1);
    if (__builtin_add_overflow(sum, f, &sum)) throw Error(ErrorCode::Overflow, "Zeckendorf shift overflows");
  }
  return sum;
}

bool is_non_adjacent(const ZeckendorfRep& rep) {
  for (std::size_t i = 0; i + 1 < rep.indices.size(); ++i)
    if (rep.indices[i] - rep.indices[i + 1] < 2) return false;
  return true;
}

namespace {

template <class SecondEntry>
IntTable interspersion_array(int rows, int cols, Int first_seed, SecondEntry second_entry) {
  if (rows < 1 || cols < 1) throw Error(ErrorCode::InvalidInput, "array needs rows, cols >= 1");
  IntTable table;
  // Every entry of earlier rows up to `limit`; rows grow like Fibonacci
  // numbers so each row contributes only a handful of values.
  std::set<Int> taken;
  const Int limit = Int{4} * rows + 16;
  Int seed = first_seed;
  for (int r = 0; r < rows; ++r) {
    while (taken.contains(seed)) ++seed;
    std::vector<Int> row{seed, second_entry(seed)};
    for (Int x = row[0], y = row[1]; x <= limit;) {
      taken.insert(x);
      const Int z = x + y;
      x = y;
      y = z;
    }
    while (static_cast<int>(row.size()) < cols) {
      Int next = 0;
      if (__builtin_add_overflow(row[row.size() - 2], row.back(), &next))
        throw Error(ErrorCode::Overflow, "array entry overflows 64 bits");
      row.push_back(next);
    }
    row.resize(static_cast<std::size_t>(cols));
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace

IntTable wythoff_array(int rows, int cols) {
  return interspersion_array(rows, cols, 1, [](Int x) { return z_shift(zeckendorf(x)); });
}

IntTable dual_wythoff_array(int rows, int cols) {
  return interspersion_array(rows, cols, 2, [](Int x) { return z_shift(zeckendorf(x - 1)) + 1; });
}

}  // namespace gdwn
