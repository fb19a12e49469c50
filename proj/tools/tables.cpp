#include <algorithm>
#include <sstream>

#include "cli.hpp"
#include "gdwn/io.hpp"
#include "gdwn/sieve.hpp"
#include "gdwn/wythoff.hpp"

namespace gdwn::cli {

namespace {

GeneratedTable pair_table(std::string name, const GameSpec& spec, Int bound, const std::vector<std::string>& rows) {
  std::ostringstream os;
  os << "# " << spec.to_string() << "GDWN, pairs with a_n <= " << bound << '\n';
  os << io::render_pair_table(compute_pi(spec, bound), rows);
  return {std::move(name), os.str()};
}

}  // namespace

std::vector<GeneratedTable> generate_tables() {
  const std::vector<std::string> full{"b", "a", "delta", "gamma", "eta", "n"};
  const std::vector<std::string> basic{"b", "a", "delta", "n"};
  std::vector<GeneratedTable> out;
  out.push_back(pair_table("ext_1_2", extension_spec(1, 2), 27, full));
  out.push_back(pair_table("ext_2_3", extension_spec(2, 3), 19, basic));
  out.push_back(pair_table("ext_2_4", extension_spec(2, 4), 21, basic));
  out.push_back(pair_table("ext_4_6", extension_spec(4, 6), 21, basic));
  out.push_back(pair_table("ext_4_7", extension_spec(4, 7), 18, basic));
  out.push_back(pair_table("wythoff_prefix", wythoff_spec(), 14, {"b", "a", "n"}));
  out.push_back({"wythoff_array", "# Wythoff array, rows 1-5\n" + io::render_int_table(wythoff_array(5, 10))});
  out.push_back({"dual_wythoff_array", "# dual Wythoff array, rows 1-6\n" + io::render_int_table(dual_wythoff_array(6, 10))});
  return out;
}

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

std::string unified_diff(const std::string& expected, const std::string& actual, const std::string& expected_name,
                         const std::string& actual_name) {
  if (expected == actual) return {};
  const auto a = lines_of(expected);
  const auto b = lines_of(actual);
  // LCS table; the tables are a few dozen lines.
  std::vector<std::vector<std::size_t>> lcs(a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = a.size(); i-- > 0;)
    for (std::size_t j = b.size(); j-- > 0;)
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);

  struct Op {
    char tag;
    std::string text;
  };
  std::vector<Op> ops;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && j < b.size() && a[i] == b[j]) {
      ops.push_back({' ', a[i++]});
      ++j;
    } else if (j < b.size() && (i == a.size() || lcs[i][j + 1] >= lcs[i + 1][j])) {
      ops.push_back({'+', b[j++]});
    } else {
      ops.push_back({'-', a[i++]});
    }
  }

  std::ostringstream os;
  os << "--- " << expected_name << "\n+++ " << actual_name << '\n';
  constexpr std::size_t kContext = 3;
  std::size_t k = 0;
  while (k < ops.size()) {
    if (ops[k].tag == ' ') {
      ++k;
      continue;
    }
    // hunk around a run of changes, merged while gaps stay within 2*context
    std::size_t start = k >= kContext ? k - kContext : 0;
    std::size_t end = k;
    while (end < ops.size()) {
      std::size_t next_change = end;
      while (next_change < ops.size() && ops[next_change].tag == ' ') ++next_change;
      if (next_change == ops.size() || next_change - end > 2 * kContext) break;
      end = next_change + 1;
    }
    end = std::min(ops.size(), end + kContext);
    std::size_t a_line = 1, b_line = 1;
    for (std::size_t t = 0; t < start; ++t) {
      if (ops[t].tag != '+') ++a_line;
      if (ops[t].tag != '-') ++b_line;
    }
    std::size_t a_len = 0, b_len = 0;
    for (std::size_t t = start; t < end; ++t) {
      if (ops[t].tag != '+') ++a_len;
      if (ops[t].tag != '-') ++b_len;
    }
    os << "@@ -" << a_line << ',' << a_len << " +" << b_line << ',' << b_len << " @@\n";
    for (std::size_t t = start; t < end; ++t) os << ops[t].tag << ops[t].text << '\n';
    k = end;
  }
  return os.str();
}

}  // namespace gdwn::cli
