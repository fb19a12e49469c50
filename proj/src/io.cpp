#include "gdwn/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "gdwn/error.hpp"

namespace gdwn::io {

void write_ptable_csv(std::ostream& os, const PTable& table, Int mult_lo, Int mult_hi) {
  const auto rows = derive_rows(table, mult_lo, mult_hi);
  os << "n,a_n,b_n,delta,gamma,eta\n";
  for (std::size_t i = 0; i < table.pair_count(); ++i) {
    os << i << ',' << table.a()[i] << ',' << table.b()[i] << ',' << rows.delta[i] << ',' << rows.gamma[i] << ','
       << rows.eta[i] << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

Int to_int(const std::string& s, std::size_t line_no) {
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": not an integer: '" + s + "'");
  return v;
}

}  // namespace

std::vector<PairRow> read_ptable_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "n,a_n,b_n,delta,gamma,eta")
    throw Error(ErrorCode::ParseError, "missing header n,a_n,b_n,delta,gamma,eta");
  std::vector<PairRow> rows;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 6) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 6 fields");
    rows.push_back({to_int(f[0], line_no), to_int(f[1], line_no), to_int(f[2], line_no), to_int(f[3], line_no),
                    to_int(f[4], line_no), to_int(f[5], line_no)});
    if (rows.back().delta != rows.back().b - rows.back().a)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": delta differs from b_n - a_n");
  }
  return rows;
}

PTable ptable_from_rows(const GameSpec& spec, Int bound, const std::vector<PairRow>& rows) {
  std::vector<Int> pi(static_cast<std::size_t>(bound + 1), -1);
  for (const auto& r : rows) {
    if (r.a < 0 || r.b < 0) throw Error(ErrorCode::ParseError, "negative pair entry");
    if (r.a <= bound) pi[static_cast<std::size_t>(r.a)] = r.b;
    if (r.b <= bound) pi[static_cast<std::size_t>(r.b)] = r.a;
  }
  for (Int i = 0; i <= bound; ++i)
    if (pi[static_cast<std::size_t>(i)] < 0)
      throw Error(ErrorCode::ParseError, "rows do not determine pi(" + std::to_string(i) + ")");
  return PTable(spec, bound, std::move(pi));
}

nlohmann::json ptable_to_json(const PTable& table) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& d : table.spec().pairs()) pairs.push_back({d.p, d.q});
  return {{"schema_version", kSchemaVersion}, {"spec", pairs}, {"N", table.bound()},
          {"pi", table.pi()},                 {"a", table.a()},  {"b", table.b()}};
}

PTable ptable_from_json(const nlohmann::json& doc) {
  try {
    if (doc.at("schema_version").get<std::string>() != kSchemaVersion)
      throw Error(ErrorCode::ParseError, "unsupported schema_version");
    std::vector<std::pair<Int, Int>> pairs;
    for (const auto& p : doc.at("spec")) pairs.emplace_back(p.at(0).get<Int>(), p.at(1).get<Int>());
    PTable table(GameSpec::validate(pairs), doc.at("N").get<Int>(), doc.at("pi").get<std::vector<Int>>());
    if ((doc.contains("a") && doc["a"].get<std::vector<Int>>() != table.a()) ||
        (doc.contains("b") && doc["b"].get<std::vector<Int>>() != table.b()))
      throw Error(ErrorCode::ParseError, "a/b do not match pi");
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_ratio_csv(std::ostream& os, const RatioSeries& series) {
  os << "n,a,b,ratio\n";
  for (const auto& e : series.entries) os << e.n << ',' << e.a << ',' << e.b << ',' << format_double(e.value) << '\n';
}

nlohmann::json split_report_to_json(const SplitReport& report, const GameSpec& spec, Int bound, SeriesMode mode) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& d : spec.pairs()) pairs.push_back({d.p, d.q});
  nlohmann::json gaps = nlohmann::json::array();
  for (const auto& g : report.gaps)
    gaps.push_back({{"alpha", g.alpha.to_string()}, {"end", g.end().to_string()}, {"mu", g.mu.to_string()},
                    {"alpha_value", g.alpha.to_double()}, {"end_value", g.end().to_double()}});
  nlohmann::json beams = nlohmann::json::array();
  for (const auto& b : report.beams)
    beams.push_back({{"side", to_string(b.side)},
                     {"slope", b.slope},
                     {"density", b.density},
                     {"median", b.median},
                     {"last_decile_mean", b.last_decile_mean},
                     {"lower", b.lower},
                     {"upper", b.upper},
                     {"count", b.count}});
  nlohmann::json doc{{"schema_version", kSchemaVersion},
                     {"spec", pairs},
                     {"N", bound},
                     {"series", mode == SeriesMode::Pairs ? "pairs" : "full"},
                     {"parameters",
                      {{"min_tail", report.min_tail},
                       {"gap_resolution", report.params.gap_resolution.to_string()},
                       {"min_beam_fraction", report.params.min_beam_fraction}}},
                     {"split", report.split},
                     {"folds", report.fold_count()},
                     {"gaps", gaps},
                     {"beams", beams},
                     {"exceptional_count", report.exceptional_count},
                     {"tail_size", report.tail_size},
                     {"tail_mean", report.tail_mean}};
  doc["gap"] = nullptr;
  if (report.split) {
    // widest gap, not necessarily the first in ratio order
    doc["gap"] = {{"alpha", report.gap.alpha.to_string()},
                  {"end", report.gap.end().to_string()},
                  {"mu", report.gap.mu.to_string()},
                  {"alpha_value", report.gap.alpha.to_double()},
                  {"end_value", report.gap.end().to_double()}};
  }
  return doc;
}

void write_grid_csv(std::ostream& os, const OutcomeGrid& grid) {
  os << "x,y,outcome\n";
  for (Int x = 0; x <= grid.xmax(); ++x)
    for (Int y = 0; y <= grid.ymax(); ++y) os << x << ',' << y << ',' << (grid.is_p(x, y) ? 'P' : 'N') << '\n';
}

void write_int_table_csv(std::ostream& os, const IntTable& table) {
  for (const auto& row : table) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << '\n';
  }
}

std::string render_pair_table(const PTable& table, const std::vector<std::string>& rows, Int mult_lo, Int mult_hi) {
  const auto derived = derive_rows(table, mult_lo, mult_hi);
  const auto count = table.pair_count();
  std::vector<std::pair<std::string, std::vector<Int>>> lines;
  for (const auto& name : rows) {
    std::vector<Int> values;
    for (std::size_t i = 0; i < count; ++i) {
      if (name == "b") values.push_back(table.b()[i]);
      else if (name == "a") values.push_back(table.a()[i]);
      else if (name == "delta") values.push_back(derived.delta[i]);
      else if (name == "gamma") values.push_back(derived.gamma[i]);
      else if (name == "eta") values.push_back(derived.eta[i]);
      else if (name == "n") values.push_back(static_cast<Int>(i));
      else throw Error(ErrorCode::InvalidInput, "unknown table row '" + name + "'");
    }
    lines.emplace_back(name + "_n", std::move(values));
  }
  if (!lines.empty() && lines.back().first == "n_n") lines.back().first = "n";

  std::size_t label_width = 0;
  for (const auto& [label, _] : lines) label_width = std::max(label_width, label.size());
  std::vector<std::size_t> widths(count, 1);
  for (const auto& [_, values] : lines)
    for (std::size_t i = 0; i < count; ++i) widths[i] = std::max(widths[i], std::to_string(values[i]).size());

  std::ostringstream os;
  for (const auto& [label, values] : lines) {
    os << label << std::string(label_width - label.size(), ' ') << " |";
    for (std::size_t i = 0; i < count; ++i) {
      const auto text = std::to_string(values[i]);
      os << ' ' << std::string(widths[i] - text.size(), ' ') << text;
    }
    os << '\n';
  }
  return os.str();
}

std::string render_int_table(const IntTable& table) {
  std::ostringstream os;
  for (const auto& row : table) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? ", " : "") << row[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace gdwn::io
