#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "gdwn/analysis.hpp"
#include "gdwn/error.hpp"
#include "gdwn/io.hpp"
#include "gdwn/sieve.hpp"
#include "gdwn/sturmian.hpp"
#include "gdwn/wythoff.hpp"

#ifndef GDWN_GOLDEN_DIR
#define GDWN_GOLDEN_DIR "data/golden"
#endif

namespace gdwn::cli {

GameSpec parse_pairs(const std::vector<std::string>& tokens) {
  std::vector<std::pair<Int, Int>> pairs;
  for (std::string token : tokens) {
    std::erase_if(token, [](char c) { return c == '(' || c == ')' || c == ' '; });
    const auto comma = token.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "pair '" + token + "' is not of the form p,q");
    try {
      std::size_t used = 0;
      const Int p = std::stoll(token.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument(token);
      const auto rest = token.substr(comma + 1);
      const Int q = std::stoll(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(token);
      pairs.emplace_back(p, q);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "pair '" + token + "' is not of the form p,q");
    }
  }
  return GameSpec::validate(pairs);
}

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded:
    case ErrorCode::Overflow:
    case ErrorCode::GridTooLarge:
    case ErrorCode::InsufficientData:
      return kResourceError;
    default:
      return kUsageError;
  }
}

// Writes to the file at `path`, or to `out` when path is empty or "-".
void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "' for writing");
  file << text;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string item; std::getline(is, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

struct SieveArgs {
  std::vector<std::string> pairs;
  Int n = 0;
  std::string format = "csv";
  std::string output;
  std::string engine = "optimized";
  std::string rows = "b,a,delta,gamma,eta,n";
  Int mult_lo = 2;
  Int mult_hi = 2;
};

int cmd_sieve(const SieveArgs& args, std::ostream& out) {
  const auto spec = parse_pairs(args.pairs);
  SieveOptions options;
  options.engine = args.engine == "naive" ? SieveEngine::Naive : SieveEngine::Optimized;
  const auto table = compute_pi(spec, args.n, options);
  std::ostringstream os;
  if (args.format == "csv") {
    io::write_ptable_csv(os, table, args.mult_lo, args.mult_hi);
  } else if (args.format == "json") {
    os << io::ptable_to_json(table).dump(2) << '\n';
  } else {
    os << io::render_pair_table(table, split_commas(args.rows), args.mult_lo, args.mult_hi);
  }
  emit(args.output, out, os.str());
  return kSuccess;
}

int cmd_classify(Int p, Int q, std::ostream& out) {
  const auto cls = classify_pair(p, q);
  out << '(' << p << ',' << q << "): " << to_string(cls.kind);
  if (cls.splitting()) out << " (index " << cls.index << ')';
  out << '\n';
  if (const auto w = find_split_witness(p, q)) {
    out << "witness: m=" << w->m << " n=" << w->n << "  (A_n - A_m, B_n - B_m) = (" << beatty_A(w->n) - beatty_A(w->m)
        << ',' << beatty_B(w->n) - beatty_B(w->m) << ")\n";
  } else {
    out << "witness: none with n <= " << 4 * q << '\n';
  }
  return kSuccess;
}

struct AnalyzeArgs {
  std::vector<std::string> pairs;
  Int n = 0;
  int max_beams = 1;
  Int min_tail = -1;
  std::string gap_resolution = "1/256";
  double min_beam_fraction = 0.05;
  std::string series = "pairs";
  std::string report;
  std::string ratios;
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out) {
  const auto spec = parse_pairs(args.pairs);
  const auto table = compute_pi(spec, args.n);
  const auto mode = args.series == "full" ? SeriesMode::Full : SeriesMode::Pairs;
  const auto series = ratio_series(table, mode);
  SplitParams params;
  if (args.min_tail >= 0) params.min_tail = args.min_tail;
  params.gap_resolution = Rational::parse(args.gap_resolution);
  params.min_beam_fraction = args.min_beam_fraction;
  const auto report = args.max_beams <= 1 ? detect_split(series, params)
                                          : detect_multi_split(series, args.max_beams, params);
  if (!args.ratios.empty()) {
    std::ostringstream csv;
    io::write_ratio_csv(csv, series);
    emit(args.ratios, out, csv.str());
  }
  emit(args.report, out, io::split_report_to_json(report, spec, args.n, mode).dump(2) + "\n");
  return kSuccess;
}

int cmd_tables(const std::string& golden_dir, bool update, std::ostream& out) {
  namespace fs = std::filesystem;
  bool identical = true;
  for (const auto& table : generate_tables()) {
    const fs::path path = fs::path(golden_dir) / (table.name + ".txt");
    if (update) {
      fs::create_directories(path.parent_path());
      std::ofstream(path, std::ios::binary) << table.content;
      out << "wrote " << path.string() << '\n';
      continue;
    }
    std::ifstream file(path, std::ios::binary);
    std::string golden;
    if (file) golden.assign(std::istreambuf_iterator<char>(file), {});
    const auto diff = unified_diff(golden, table.content, path.string(), table.name + " (generated)");
    if (diff.empty() && file) {
      out << "OK   " << table.name << '\n';
    } else {
      identical = false;
      out << "DIFF " << table.name << (file ? "" : " (golden file missing)") << '\n' << diff;
    }
  }
  return identical ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Diagonal Wythoff Nim solver"};
  app.require_subcommand(1);

  SieveArgs sieve;
  auto* sieve_cmd = app.add_subcommand("sieve", "Compute P-positions (a_n, b_n) up to N");
  sieve_cmd->add_option("--pairs", sieve.pairs, "Move-pairs, e.g. 0,1 1,1 1,2")->required()->expected(1, -1);
  sieve_cmd->add_option("--n", sieve.n, "Bound N")->required()->check(CLI::NonNegativeNumber);
  sieve_cmd->add_option("--format", sieve.format)->check(CLI::IsMember({"csv", "json", "table"}));
  sieve_cmd->add_option("--output,-o", sieve.output, "Output file (default: stdout)");
  sieve_cmd->add_option("--engine", sieve.engine)->check(CLI::IsMember({"optimized", "naive"}));
  sieve_cmd->add_option("--rows", sieve.rows, "Rows for --format table");
  sieve_cmd->add_option("--mult-lo", sieve.mult_lo, "gamma = b - mult_lo * a");
  sieve_cmd->add_option("--mult-hi", sieve.mult_hi, "eta = mult_hi * b - a");

  Int cls_p = 0, cls_q = 0;
  auto* classify_cmd = app.add_subcommand("classify", "Classify (p,q) as Wythoff / dual Wythoff / non-splitting");
  classify_cmd->add_option("p", cls_p)->required();
  classify_cmd->add_option("q", cls_q)->required();

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Sieve and detect beam splits in b_n/a_n");
  analyze_cmd->add_option("--pairs", analyze.pairs)->required()->expected(1, -1);
  analyze_cmd->add_option("--n", analyze.n)->required()->check(CLI::NonNegativeNumber);
  analyze_cmd->add_option("--max-beams", analyze.max_beams, "Maximum number of gaps (folds)")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--min-tail", analyze.min_tail, "Entries discarded before gap search");
  analyze_cmd->add_option("--gap-resolution", analyze.gap_resolution, "Grid step, e.g. 1/256");
  analyze_cmd->add_option("--min-beam-fraction", analyze.min_beam_fraction)->check(CLI::Range(0.0, 1.0));
  analyze_cmd->add_option("--series", analyze.series)->check(CLI::IsMember({"pairs", "full"}));
  analyze_cmd->add_option("--report", analyze.report, "JSON report file (default: stdout)");
  analyze_cmd->add_option("--ratios", analyze.ratios, "Ratio series CSV file");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("suite", verify.suite)
      ->required()
      ->check(CLI::IsMember({"involution", "density", "closed-forms", "prop43", "prop44", "sturmian", "section3"}));
  verify_cmd->add_option("--pairs", verify.pairs)->expected(1, -1);
  verify_cmd->add_option("--n", verify.n);
  verify_cmd->add_option("--s", verify.s)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-p", verify.max_p);
  verify_cmd->add_option("--max-pq", verify.max_pq);
  verify_cmd->add_option("--length", verify.length);
  verify_cmd->add_option("--maxlen", verify.maxlen);
  verify_cmd->add_option("--window", verify.window);
  verify_cmd->add_flag("--include-single-pair", verify.include_single_pair,
                       "Also check the single-pair closed form");

  std::string golden_dir = GDWN_GOLDEN_DIR;
  bool update = false;
  auto* tables_cmd = app.add_subcommand("tables", "Regenerate reference tables and diff against golden files");
  tables_cmd->add_option("--golden-dir", golden_dir);
  tables_cmd->add_flag("--update", update, "Rewrite the golden files");

  std::vector<const char*> argv{"gdwn"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*sieve_cmd) return cmd_sieve(sieve, out);
    if (*classify_cmd) return cmd_classify(cls_p, cls_q, out);
    if (*analyze_cmd) return cmd_analyze(analyze, out);
    if (*verify_cmd) return run_verify(verify, out);
    if (*tables_cmd) return cmd_tables(golden_dir, update, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kResourceError;
  }
  return kUsageError;
}

}  // namespace gdwn::cli
