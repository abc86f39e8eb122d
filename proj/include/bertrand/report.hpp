#pragma once

// Report rows and their CSV / text renderings.
//
// CSV schema (header line is fixed):
//   check_id,n,lhs_value,lhs_err,rhs_value,rhs_err,verdict,margin
// Decimals use the shortest representation that round-trips to the same
// binary64. Value-only rows (theta, psi, ...) leave rhs, verdict and margin
// empty.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bertrand/numerics.hpp"

namespace bertrand {

enum class RowVerdict : std::uint8_t { CertainPass, CertainFail, Indeterminate, ExactPass };

std::string_view to_string(RowVerdict v);
std::optional<RowVerdict> parse_row_verdict(std::string_view text);
inline bool is_pass(RowVerdict v) { return v == RowVerdict::CertainPass || v == RowVerdict::ExactPass; }

/// One checked relation lhs (<, <=) rhs at one n. `check_id` must refer to
/// storage that outlives the row (the labels used here are string literals).
struct ReportRow {
    std::string_view check_id;
    std::uint64_t n = 0;
    CertifiedReal lhs;
    CertifiedReal rhs;
    bool has_rhs = false;
    std::optional<RowVerdict> verdict;
    /// Lower bound of (intended larger side - intended smaller side).
    double margin = 0.0;
};

/// Aggregate over rows: fail dominates indeterminate dominates pass.
enum class Outcome { Pass, Fail, Indeterminate };

std::string_view to_string(Outcome o);
Outcome outcome_of(const std::vector<ReportRow>& rows);
Outcome combine(Outcome a, Outcome b);

struct Report {
    std::string title;
    std::vector<std::pair<std::string, std::string>> summary;  // key: value lines
    std::vector<ReportRow> rows;
    std::vector<std::string> notes;
    Outcome outcome = Outcome::Pass;
};

/// Shortest round-trip decimal for a binary64.
std::string format_decimal(double x);

inline constexpr std::string_view kCsvHeader = "check_id,n,lhs_value,lhs_err,rhs_value,rhs_err,verdict,margin";

void write_csv(std::ostream& out, const Report& report);
void write_text(std::ostream& out, const Report& report);
std::string render_csv(const Report& report);
std::string render_text(const Report& report);

/// Parses one CSV data line back into a row; check_id points into `line`.
/// Returns nullopt on malformed input.
std::optional<ReportRow> parse_csv_row(std::string_view line);

}  // namespace bertrand
