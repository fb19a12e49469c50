#pragma once

// Text formats: CSV (LF endings, mandatory header, plain decimal integers),
// JSON documents carrying schema_version "1", and the fixed-width row
// layout used for the reference tables.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "gdwn/analysis.hpp"
#include "gdwn/sieve.hpp"
#include "gdwn/wythoff.hpp"

namespace gdwn::io {

inline constexpr const char* kSchemaVersion = "1";

/// Header n,a_n,b_n,delta,gamma,eta; one row per pair with a_n <= N.
void write_ptable_csv(std::ostream& os, const PTable& table, Int mult_lo = 2, Int mult_hi = 2);

struct PairRow {
  Int n = 0, a = 0, b = 0, delta = 0, gamma = 0, eta = 0;
  friend bool operator==(const PairRow&, const PairRow&) = default;
};

/// Parses the CSV written above; throws ParseError on malformed input.
std::vector<PairRow> read_ptable_csv(std::istream& is);

/// Rebuilds pi on [0, N] from pair rows: pi(a) = b and pi(b) = a.
PTable ptable_from_rows(const GameSpec& spec, Int bound, const std::vector<PairRow>& rows);

nlohmann::json ptable_to_json(const PTable& table);
PTable ptable_from_json(const nlohmann::json& doc);

/// Header n,a,b,ratio; ratio printed in shortest round-trip form.
void write_ratio_csv(std::ostream& os, const RatioSeries& series);

nlohmann::json split_report_to_json(const SplitReport& report, const GameSpec& spec, Int bound,
                                    SeriesMode mode);

/// Header x,y,outcome with outcome P or N.
void write_grid_csv(std::ostream& os, const OutcomeGrid& grid);

/// Comma separated rows, no header.
void write_int_table_csv(std::ostream& os, const IntTable& table);

/// Shortest representation that round-trips through strtod.
std::string format_double(double v);

/// Rows of a pair table in the layout "label | v0 v1 ...", right-aligned
/// per column. `rows` picks from b, a, delta, gamma, eta, n.
std::string render_pair_table(const PTable& table, const std::vector<std::string>& rows, Int mult_lo = 2,
                              Int mult_hi = 2);

/// Plain rows of comma separated integers, as the arrays are printed.
std::string render_int_table(const IntTable& table);

}  // namespace gdwn::io
