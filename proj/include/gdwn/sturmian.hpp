#pragma once

// Mechanical words of slope phi over the alphabet {1, 2}:
//   lower  s(n)  = floor((n+1) phi) - floor(n phi)
//   upper  s'(n) = ceil((n+1) phi)  - ceil(n phi)
// plus factor, balance and sum utilities and the splitting-pair witness
// search (A_n - A_m, B_n - B_m) = (p, q).

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gdwn/game.hpp"

namespace gdwn {

enum class WordKind { Lower, Upper };

struct MechanicalWord {
  WordKind kind = WordKind::Lower;
  std::vector<std::uint8_t> letters;

  std::size_t length() const { return letters.size(); }
  std::string to_string() const;
};

/// Exact prefix of length n.
MechanicalWord word_prefix(WordKind kind, Int n);

/// Sum of the first n letters: A_n for the lower word, ceil(n phi) for the
/// upper word (the sums telescope).
Int prefix_sum(WordKind kind, Int n);

/// Parses a word such as "2121"; throws InvalidInput on letters other than 1/2.
std::vector<std::uint8_t> parse_word(const std::string& text);

/// Contiguous subword letters[start, start + length).
struct Factor {
  std::vector<std::uint8_t> letters;
  std::size_t start = 0;

  std::size_t length() const { return letters.size(); }
  /// Number of 1s.
  Int height() const;
  Int sum() const;
};

Factor factor_at(const std::vector<std::uint8_t>& word, std::size_t start, std::size_t length);

struct BalanceReport {
  struct Violation {
    std::size_t length = 0;
    std::size_t first_start = 0;   // factor with minimal height
    std::size_t second_start = 0;  // factor with maximal height
    Int height_gap = 0;
  };
  std::vector<Violation> violations;
  bool balanced() const { return violations.empty(); }
};

/// Exhaustive check over all equal-length factor pairs of `word`.
BalanceReport check_balanced(const std::vector<std::uint8_t>& word);
BalanceReport check_balanced(WordKind kind, Int n);

struct FactorSumReport {
  struct LengthSummary {
    Int length = 0;
    Int lower_sum = 0;  // prefix sum of s
    Int upper_sum = 0;  // prefix sum of s'
    std::set<Int> observed;
  };
  std::vector<LengthSummary> lengths;
  /// (start, length) of factors whose sum is not admissible.
  std::vector<std::pair<std::size_t, std::size_t>> violations;
  bool ok() const { return violations.empty(); }
};

/// Every factor of length <= maxlen inside the length-`window` prefixes of
/// s and s' has the sum of the s- or the s'-prefix of the same length.
FactorSumReport check_factor_sums(Int maxlen, Int window);

/// Distinct factors of the given length in the prefix of length `window`.
std::set<std::string> factor_set(WordKind kind, Int length, Int window);

struct SplitWitness {
  Int m = 0;
  Int n = 0;
  friend bool operator==(const SplitWitness&, const SplitWitness&) = default;
};

/// Least (m, n), m < n <= bound, with (A_n - A_m, B_n - B_m) = (p, q).
/// Since B_k - A_k = k the search is restricted to n - m = q - p.
/// bound defaults to 4q. Requires 1 <= p < q and bound >= q.
std::optional<SplitWitness> find_split_witness(Int p, Int q, std::optional<Int> bound = std::nullopt);

}  // namespace gdwn
