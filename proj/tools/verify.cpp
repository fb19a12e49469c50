#include <functional>
#include <ostream>
#include <sstream>

#include "cli.hpp"
#include "gdwn/analysis.hpp"
#include "gdwn/error.hpp"
#include "gdwn/sieve.hpp"
#include "gdwn/sturmian.hpp"
#include "gdwn/sweep.hpp"
#include "gdwn/wythoff.hpp"

namespace gdwn::cli {

namespace {

class Checklist {
 public:
  explicit Checklist(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool ok, const std::string& counterexample = {}) {
    if (ok) {
      out_ << "PASS " << name << '\n';
    } else {
      out_ << "FAIL " << name;
      if (!counterexample.empty()) out_ << ": " << counterexample;
      out_ << '\n';
      failed_ = true;
    }
  }

  void skip(const std::string& name, const std::string& reason) { out_ << "SKIP " << name << ": " << reason << '\n'; }

  int exit_code() const { return failed_ ? kVerificationFailed : kSuccess; }

 private:
  std::ostream& out_;
  bool failed_ = false;
};

template <class Range>
std::string first_items(const Range& values, std::size_t limit = 5) {
  std::ostringstream os;
  std::size_t k = 0;
  for (const auto& v : values) {
    if (k++ == limit) {
      os << " ...";
      break;
    }
    os << (k > 1 ? " " : "") << v;
  }
  return os.str();
}

std::vector<GameSpec> fixture_specs() {
  return {nim_spec(),
          wythoff_spec(),
          extension_spec(1, 2),
          extension_spec(2, 3),
          extension_spec(2, 4),
          extension_spec(4, 6),
          extension_spec(4, 7),
          GameSpec::validate({{0, 2}}),
          GameSpec::validate({{0, 2}, {2, 2}})};
}

// Without Nim moves a column may hold several P-positions, so the tables of
// pi carry no game meaning and the involution and density facts do not apply.
constexpr const char* kNoNimReason = "no (0,1) pair; P-positions are not the graph of pi";

std::vector<GameSpec> specs_for(const VerifyOptions& o) {
  if (o.pairs.empty()) return fixture_specs();
  return {parse_pairs(o.pairs)};
}

void verify_involution(const VerifyOptions& o, Checklist& list) {
  const Int n = o.n < 0 ? 2000 : o.n;
  for (const auto& spec : specs_for(o)) {
    if (!spec.contains(0, 1)) {
      list.skip("involution " + spec.to_string(), kNoNimReason);
      continue;
    }
    const auto table = compute_pi(spec, n);
    const auto inv = gdwn::verify_involution(table);
    list.check("involution " + spec.to_string() + " N=" + std::to_string(n), inv.ok(),
               "pi(pi(i)) != i at " + first_items(inv.violations) + "; duplicates " +
                   first_items(inv.duplicate_values) + "; boundary " + first_items(inv.boundary_violations));
  }
}

void verify_density(const VerifyOptions& o, Checklist& list) {
  const Int n = o.n < 0 ? 2000 : o.n;
  for (const auto& spec : specs_for(o)) {
    if (!spec.contains(0, 1)) {
      list.skip("density " + spec.to_string(), kNoNimReason);
      continue;
    }
    const auto table = compute_pi(spec, n);
    const auto tag = spec.to_string() + " N=" + std::to_string(n);
    const auto density = check_density(table);
    list.check("half-density of U " + tag, !density.half_density_failure,
               density.half_density_failure ? "n=" + std::to_string(*density.half_density_failure) : "");
    list.check("pair count above M/2 " + tag, !density.pair_density_failure,
               density.pair_density_failure ? "M=" + std::to_string(*density.pair_density_failure) : "");
    const auto comp = check_complementarity(table);
    list.check("complementarity " + tag, comp.ok(),
               "missing " + first_items(comp.missing) + "; repeated " + first_items(comp.repeated));
    if (spec.extends_wythoff()) {
      const auto dup = first_repeated_difference(table);
      list.check("distinct-differences " + tag, !dup, dup ? "pair index " + std::to_string(*dup) : "");
    }
  }
}

void report_closed_form(const ClosedFormFamily& family, Int n, Checklist& list) {
  const auto report = verify_closed_form(family, n);
  std::ostringstream ce;
  for (std::size_t i = 0; i < report.mismatches.size() && i < 5; ++i)
    ce << (i ? " " : "") << '(' << report.mismatches[i].x << ',' << report.mismatches[i].y << ')';
  if (report.mismatch_count > 0) ce << " [" << report.mismatch_count << " cells differ]";
  if (!report.holds && report.mismatches.empty()) ce << "identical to Nim although r == s";
  list.check("closed-form " + report.family + " N=" + std::to_string(n), report.holds, ce.str());
}

void verify_closed_forms(const VerifyOptions& o, Checklist& list) {
  const Int n = o.n < 0 ? 40 : o.n;
  using Kind = ClosedFormFamily::Kind;
  report_closed_form({Kind::ZeroS, 0, o.s}, n, list);
  report_closed_form({Kind::ZeroSAndSS, 0, o.s}, n, list);
  for (Int r = 1; r <= o.s; ++r) report_closed_form({Kind::NimPlusPair, r, o.s}, n, list);
  if (o.include_single_pair)
    for (Int r = 1; r <= o.s; ++r) report_closed_form({Kind::SinglePair, r, o.s}, n, list);
}

void verify_prop43(const VerifyOptions& o, Checklist& list) {
  const Int n = o.n < 0 ? 2000 : o.n;
  const auto sweep = equivalence_sweep(o.max_p, n);
  std::vector<std::string> non_eq, eq;
  for (const auto& c : sweep.failures()) {
    const auto label = "(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")";
    (c.cls.splitting() ? eq : non_eq).push_back(label);
  }
  list.check("non-splitting q/p<phi equivalent to Wythoff (" + std::to_string(sweep.non_splitting_checked) +
                 " pairs, p<=" + std::to_string(o.max_p) + ", N=" + std::to_string(n) + ")",
             non_eq.empty(), "not equivalent: " + first_items(non_eq));
  list.check("splitting pairs not equivalent (" + std::to_string(sweep.splitting_checked) + " pairs)",
             eq.empty(), "equivalent: " + first_items(eq));
}

void verify_prop44(const VerifyOptions& o, Checklist& list) {
  const auto mismatches = witness_sweep(o.max_pq);
  std::vector<std::string> labels;
  for (const auto& m : mismatches)
    labels.push_back("(" + std::to_string(m.p) + "," + std::to_string(m.q) + ")");
  list.check("witness <=> splitting, p<q<=" + std::to_string(o.max_pq), mismatches.empty(),
             first_items(labels));
}

void verify_sturmian(const VerifyOptions& o, Checklist& list) {
  const auto lower = word_prefix(WordKind::Lower, 11).to_string();
  const auto upper = word_prefix(WordKind::Upper, 11).to_string();
  list.check("lower word prefix 12122121221", lower == "12122121221", lower);
  list.check("upper word prefix 22122121221", upper == "22122121221", upper);
  for (auto kind : {WordKind::Lower, WordKind::Upper}) {
    const auto bal = check_balanced(kind, o.length);
    const auto name = std::string(kind == WordKind::Lower ? "lower" : "upper");
    list.check("balanced " + name + " n=" + std::to_string(o.length), bal.balanced(),
               bal.balanced() ? "" : "length " + std::to_string(bal.violations.front().length));
  }
  const auto sums = check_factor_sums(o.maxlen, o.window);
  list.check("factor sums maxlen=" + std::to_string(o.maxlen) + " window=" + std::to_string(o.window), sums.ok(),
             sums.ok() ? "" : "factor at " + std::to_string(sums.violations.front().first));
  bool agree = true;
  const auto s = word_prefix(WordKind::Lower, o.window);
  const auto t = word_prefix(WordKind::Upper, o.window);
  for (std::size_t i = 1; i < s.letters.size(); ++i) agree = agree && s.letters[i] == t.letters[i];
  list.check("letters agree for n>0", agree);
  bool same_factors = true;
  for (Int len = 1; len <= o.maxlen; ++len)
    same_factors = same_factors &&
                   factor_set(WordKind::Lower, len, o.window) == factor_set(WordKind::Upper, len, o.window);
  list.check("equal factor sets up to length " + std::to_string(o.maxlen), same_factors);
  const auto z = z_shift(zeckendorf(14));
  list.check("Z(14) = 23", z == 23, std::to_string(z));
}

void verify_section3(const VerifyOptions& o, Checklist& list) {
  const Int n = o.n < 0 ? 50000 : o.n;
  const auto report = check_one_two_patterns(compute_pi(extension_spec(1, 2), n));
  list.check("gamma increments (" + std::to_string(report.increments_checked) + " indices)",
             report.increment_failures.empty(), "index " + first_items(report.increment_failures));
  std::ostringstream chain;
  for (std::size_t i = 0; i < report.witness_chain.size() && i < 8; ++i)
    chain << '(' << report.witness_chain[i].first << ',' << report.witness_chain[i].second << ')';
  list.check("witness chain prefix (0,1)(1,1)(2,5)(7,1)(8,2)(10,4)(14,2)", report.witness_prefix_ok, chain.str());
  list.check("b_n/a_n <= 3", report.ratio_bound_failures.empty(), "n=" + first_items(report.ratio_bound_failures));
  list.check("ratio spread >= phi - 3/2 (" + std::to_string(report.spread_checked) + " indices)",
             report.spread_failures.empty(), "n=" + first_items(report.spread_failures));
}

}  // namespace

int run_verify(const VerifyOptions& options, std::ostream& out) {
  static const std::vector<std::pair<std::string, std::function<void(const VerifyOptions&, Checklist&)>>> suites{
      {"involution", verify_involution}, {"density", verify_density},   {"closed-forms", verify_closed_forms},
      {"prop43", verify_prop43},         {"prop44", verify_prop44},     {"sturmian", verify_sturmian},
      {"section3", verify_section3}};
  for (const auto& [name, fn] : suites) {
    if (name == options.suite) {
      Checklist list(out);
      fn(options, list);
      return list.exit_code();
    }
  }
  throw Error(ErrorCode::InvalidInput, "unknown suite '" + options.suite + "'");
}

}  // namespace gdwn::cli
