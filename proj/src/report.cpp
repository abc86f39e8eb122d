#include "bertrand/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace bertrand {

namespace {

constexpr std::size_t kFullListingRows = 40;
constexpr std::size_t kMaxListedFailures = 50;

struct CheckStats {
    std::string_view id;
    std::size_t rows = 0;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t indeterminate = 0;
    std::uint64_t n_min = 0;
    std::uint64_t n_max = 0;
    double worst_margin = 0;
    std::uint64_t worst_n = 0;
};

std::optional<double> parse_double(std::string_view s) {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

void write_row_line(std::ostream& out, const ReportRow& row) {
    out << "  " << row.check_id << " n=" << row.n << "  lhs=" << format_decimal(row.lhs.value()) << " +/- "
        << format_decimal(row.lhs.err());
    if (row.has_rhs)
        out << "  rhs=" << format_decimal(row.rhs.value()) << " +/- " << format_decimal(row.rhs.err());
    if (row.verdict) out << "  " << to_string(*row.verdict) << "  margin=" << format_decimal(row.margin);
    out << '\n';
}

}  // namespace

std::string_view to_string(RowVerdict v) {
    switch (v) {
        case RowVerdict::CertainPass: return "CERTAIN_PASS";
        case RowVerdict::CertainFail: return "CERTAIN_FAIL";
        case RowVerdict::Indeterminate: return "INDETERMINATE";
        case RowVerdict::ExactPass: return "EXACT_PASS";
    }
    return "INDETERMINATE";
}

std::optional<RowVerdict> parse_row_verdict(std::string_view text) {
    for (const auto v : {RowVerdict::CertainPass, RowVerdict::CertainFail, RowVerdict::Indeterminate,
                         RowVerdict::ExactPass})
        if (text == to_string(v)) return v;
    return std::nullopt;
}

std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "PASS";
        case Outcome::Fail: return "FAIL";
        case Outcome::Indeterminate: return "INDETERMINATE";
    }
    return "INDETERMINATE";
}

Outcome combine(Outcome a, Outcome b) {
    if (a == Outcome::Fail || b == Outcome::Fail) return Outcome::Fail;
    if (a == Outcome::Indeterminate || b == Outcome::Indeterminate) return Outcome::Indeterminate;
    return Outcome::Pass;
}

Outcome outcome_of(const std::vector<ReportRow>& rows) {
    Outcome o = Outcome::Pass;
    for (const auto& row : rows) {
        if (!row.verdict) continue;
        if (*row.verdict == RowVerdict::CertainFail) return Outcome::Fail;
        if (*row.verdict == RowVerdict::Indeterminate) o = Outcome::Indeterminate;
    }
    return o;
}

std::string format_decimal(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const Report& report) {
    out << kCsvHeader << '\n';
    for (const auto& row : report.rows) {
        out << row.check_id << ',' << row.n << ',' << format_decimal(row.lhs.value()) << ','
            << format_decimal(row.lhs.err()) << ',';
        if (row.has_rhs) out << format_decimal(row.rhs.value()) << ',' << format_decimal(row.rhs.err());
        else out << ',';
        out << ',';
        if (row.verdict) out << to_string(*row.verdict) << ',' << format_decimal(row.margin);
        else out << ',';
        out << '\n';
    }
}

void write_text(std::ostream& out, const Report& report) {
    out << report.title << '\n';
    for (const auto& [key, value] : report.summary) out << "  " << key << ": " << value << '\n';

    std::vector<CheckStats> stats;
    std::unordered_map<std::string_view, std::size_t> index;
    for (const auto& row : report.rows) {
        if (!row.verdict) continue;
        auto [it, inserted] = index.try_emplace(row.check_id, stats.size());
        if (inserted) stats.push_back(CheckStats{row.check_id, 0, 0, 0, 0, row.n, row.n, row.margin, row.n});
        auto& s = stats[it->second];
        ++s.rows;
        s.n_min = std::min(s.n_min, row.n);
        s.n_max = std::max(s.n_max, row.n);
        if (row.margin < s.worst_margin) {
            s.worst_margin = row.margin;
            s.worst_n = row.n;
        }
        switch (*row.verdict) {
            case RowVerdict::CertainPass:
            case RowVerdict::ExactPass: ++s.pass; break;
            case RowVerdict::CertainFail: ++s.fail; break;
            case RowVerdict::Indeterminate: ++s.indeterminate; break;
        }
    }

    if (report.rows.size() <= kFullListingRows) {
        for (const auto& row : report.rows) write_row_line(out, row);
    } else {
        std::size_t listed = 0;
        for (const auto& row : report.rows) {
            if (!row.verdict || is_pass(*row.verdict)) continue;
            if (listed++ == kMaxListedFailures) {
                out << "  ... further non-passing rows omitted\n";
                break;
            }
            write_row_line(out, row);
        }
    }

    if (!stats.empty() && report.rows.size() > kFullListingRows) {
        out << "  checks:\n";
        for (const auto& s : stats) {
            out << "    " << s.id << "  n=" << s.n_min << ".." << s.n_max << "  rows=" << s.rows
                << "  pass=" << s.pass << "  fail=" << s.fail << "  indeterminate=" << s.indeterminate
                << "  worst_margin=" << format_decimal(s.worst_margin) << " at n=" << s.worst_n << '\n';
        }
    }
    for (const auto& note : report.notes) out << "  note: " << note << '\n';
    out << "  outcome: " << to_string(report.outcome) << '\n';
}

std::string render_csv(const Report& report) {
    std::ostringstream out;
    write_csv(out, report);
    return out.str();
}

std::string render_text(const Report& report) {
    std::ostringstream out;
    write_text(out, report);
    return out.str();
}

std::optional<ReportRow> parse_csv_row(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        fields.push_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (fields.size() != 8) return std::nullopt;

    ReportRow row;
    row.check_id = fields[0];
    const auto n_field = fields[1];
    if (std::from_chars(n_field.data(), n_field.data() + n_field.size(), row.n).ec != std::errc()) return std::nullopt;
    const auto lv = parse_double(fields[2]);
    const auto le = parse_double(fields[3]);
    if (!lv || !le) return std::nullopt;
    row.lhs = CertifiedReal(*lv, *le);
    if (!fields[4].empty()) {
        const auto rv = parse_double(fields[4]);
        const auto re = parse_double(fields[5]);
        if (!rv || !re) return std::nullopt;
        row.rhs = CertifiedReal(*rv, *re);
        row.has_rhs = true;
    }
    if (!fields[6].empty()) {
        row.verdict = parse_row_verdict(fields[6]);
        const auto m = parse_double(fields[7]);
        if (!row.verdict || !m) return std::nullopt;
        row.margin = *m;
    }
    return row;
}

}  // namespace bertrand
