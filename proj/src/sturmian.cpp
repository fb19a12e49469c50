#include "gdwn/sturmian.hpp"

#include <algorithm>

#include "gdwn/error.hpp"
#include "gdwn/wythoff.hpp"

namespace gdwn {

std::string MechanicalWord::to_string() const {
  std::string out;
  out.reserve(letters.size());
  for (auto c : letters) out.push_back(static_cast<char>('0' + c));
  return out;
}

Int prefix_sum(WordKind kind, Int n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "prefix length must be non-negative");
  return kind == WordKind::Lower ? beatty_A(n) : ceil_phi(n);
}

MechanicalWord word_prefix(WordKind kind, Int n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "prefix length must be non-negative");
  MechanicalWord word{kind, {}};
  word.letters.reserve(static_cast<std::size_t>(n));
  Int prev = prefix_sum(kind, 0);
  for (Int i = 0; i < n; ++i) {
    const Int next = prefix_sum(kind, i + 1);
    word.letters.push_back(static_cast<std::uint8_t>(next - prev));
    prev = next;
  }
  return word;
}

std::vector<std::uint8_t> parse_word(const std::string& text) {
  std::vector<std::uint8_t> out;
  for (char c : text) {
    if (c != '1' && c != '2') throw Error(ErrorCode::InvalidInput, "word letters must be 1 or 2");
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

Int Factor::height() const { return std::ranges::count(letters, std::uint8_t{1}); }

Int Factor::sum() const {
  Int s = 0;
  for (auto c : letters) s += c;
  return s;
}

Factor factor_at(const std::vector<std::uint8_t>& word, std::size_t start, std::size_t length) {
  if (start + length > word.size()) throw Error(ErrorCode::InvalidInput, "factor exceeds word");
  return {{word.begin() + static_cast<std::ptrdiff_t>(start),
           word.begin() + static_cast<std::ptrdiff_t>(start + length)},
          start};
}

BalanceReport check_balanced(const std::vector<std::uint8_t>& word) {
  BalanceReport report;
  const std::size_t n = word.size();
  std::vector<Int> ones(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ones[i + 1] = ones[i] + (word[i] == 1 ? 1 : 0);
  // All pairs of equal length are balanced iff max - min height <= 1.
  for (std::size_t len = 1; len <= n; ++len) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t s = 1; s + len <= n; ++s) {
      const Int h = ones[s + len] - ones[s];
      if (h < ones[lo + len] - ones[lo]) lo = s;
      if (h > ones[hi + len] - ones[hi]) hi = s;
    }
    const Int gap = (ones[hi + len] - ones[hi]) - (ones[lo + len] - ones[lo]);
    if (gap > 1) report.violations.push_back({len, lo, hi, gap});
  }
  return report;
}

BalanceReport check_balanced(WordKind kind, Int n) { return check_balanced(word_prefix(kind, n).letters); }

FactorSumReport check_factor_sums(Int maxlen, Int window) {
  if (maxlen < 1 || window < maxlen)
    throw Error(ErrorCode::InvalidInput, "need maxlen >= 1 and window >= maxlen");
  FactorSumReport report;
  for (Int len = 1; len <= maxlen; ++len)
    report.lengths.push_back({len, prefix_sum(WordKind::Lower, len), prefix_sum(WordKind::Upper, len), {}});

  for (WordKind kind : {WordKind::Lower, WordKind::Upper}) {
    const auto word = word_prefix(kind, window).letters;
    std::vector<Int> sums(word.size() + 1, 0);
    for (std::size_t i = 0; i < word.size(); ++i) sums[i + 1] = sums[i] + word[i];
    for (auto& summary : report.lengths) {
      const auto len = static_cast<std::size_t>(summary.length);
      for (std::size_t s = 0; s + len <= word.size(); ++s) {
        const Int sigma = sums[s + len] - sums[s];
        summary.observed.insert(sigma);
        if (sigma != summary.lower_sum && sigma != summary.upper_sum) report.violations.emplace_back(s, len);
      }
    }
  }
  return report;
}

std::set<std::string> factor_set(WordKind kind, Int length, Int window) {
  const auto word = word_prefix(kind, window).to_string();
  std::set<std::string> out;
  const auto len = static_cast<std::size_t>(length);
  for (std::size_t s = 0; s + len <= word.size(); ++s) out.insert(word.substr(s, len));
  return out;
}

std::optional<SplitWitness> find_split_witness(Int p, Int q, std::optional<Int> bound) {
  if (p < 1 || p >= q)
    throw Error(ErrorCode::InvalidPair,
                "(" + std::to_string(p) + "," + std::to_string(q) + ") must satisfy 1 <= p < q");
  const Int limit = bound.value_or(4 * q);
  if (limit < q) throw Error(ErrorCode::InvalidInput, "witness search bound must be >= q");
  const Int gap = q - p;
  for (Int m = 0; m + gap <= limit; ++m) {
    const Int n = m + gap;
    if (beatty_A(n) - beatty_A(m) == p) return SplitWitness{m, n};
  }
  return std::nullopt;
}

}  // namespace gdwn
