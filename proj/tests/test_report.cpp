#include <sstream>
#include <string>

#include "bertrand/proofcheck.hpp"
#include "bertrand/report.hpp"
#include "doctest.h"

using namespace bertrand;

TEST_SUITE("report") {

TEST_CASE("decimal formatting round-trips") {
    for (double x : {0.0, -0.0341438241061951, 5.529429087511423, 1e-300, 123456789.125, 2.4875934645507414e-15})
        CHECK(std::stod(format_decimal(x)) == x);
    CHECK(format_decimal(3.0) == "3");
}

TEST_CASE("verdict names") {
    for (auto v : {RowVerdict::CertainPass, RowVerdict::CertainFail, RowVerdict::Indeterminate, RowVerdict::ExactPass})
        CHECK(parse_row_verdict(to_string(v)) == v);
    CHECK(to_string(RowVerdict::ExactPass) == "EXACT_PASS");
    CHECK(!parse_row_verdict("PASS"));
}

TEST_CASE("outcomes combine by severity") {
    CHECK(combine(Outcome::Pass, Outcome::Indeterminate) == Outcome::Indeterminate);
    CHECK(combine(Outcome::Indeterminate, Outcome::Fail) == Outcome::Fail);
    CHECK(combine(Outcome::Pass, Outcome::Pass) == Outcome::Pass);
    std::vector<ReportRow> rows(2);
    rows[0].verdict = RowVerdict::CertainPass;
    rows[1].verdict = RowVerdict::Indeterminate;
    CHECK(outcome_of(rows) == Outcome::Indeterminate);
    rows[1].verdict = std::nullopt;
    CHECK(outcome_of(rows) == Outcome::Pass);
}

TEST_CASE("csv round-trip") {
    const auto report = to_report(verify_inequality(CheckId::EQ4, 1, 50));
    const auto csv = render_csv(report);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == kCsvHeader);
    std::size_t i = 0;
    while (std::getline(in, line)) {
        const auto row = parse_csv_row(line);
        REQUIRE(row);
        const auto& orig = report.rows.at(i++);
        CHECK(row->check_id == orig.check_id);
        CHECK(row->n == orig.n);
        CHECK(row->lhs.value() == orig.lhs.value());
        CHECK(row->lhs.err() == orig.lhs.err());
        CHECK(row->rhs.value() == orig.rhs.value());
        CHECK(row->rhs.err() == orig.rhs.err());
        CHECK(row->verdict == orig.verdict);
        CHECK(row->margin == orig.margin);
    }
    CHECK(i == report.rows.size());
}

TEST_CASE("value rows leave comparison columns empty") {
    Report r;
    ReportRow row;
    row.check_id = "THETA";
    row.n = 10;
    row.lhs = CertifiedReal(5.5, 1e-15);
    r.rows.push_back(row);
    const auto csv = render_csv(r);
    CHECK(csv.find("THETA,10,5.5,1e-15,,,,") != std::string::npos);
    const auto parsed = parse_csv_row("THETA,10,5.5,1e-15,,,,");
    REQUIRE(parsed);
    CHECK(!parsed->has_rhs);
    CHECK(!parsed->verdict);
    CHECK(!parse_csv_row("THETA,10,5.5"));
    CHECK(!parse_csv_row("EQ9,x,1,0,2,0,CERTAIN_PASS,1"));
}

TEST_CASE("text output") {
    const auto text = render_text(to_report(threshold_n()));
    CHECK(text.find("threshold: 505") != std::string::npos);
    CHECK(text.find("outcome: PASS") != std::string::npos);
}

}
