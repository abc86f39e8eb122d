#pragma once

// Certification harness for the inductive Bertrand argument: the inequality
// chain over its stated ranges, the central-binomial induction, the
// quadratic threshold, and the finite witness scan below it.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bertrand/chebyshev.hpp"
#include "bertrand/numerics.hpp"
#include "bertrand/report.hpp"

namespace bertrand {

/// Caller asked for something outside an operation's stated domain, such as
/// an n below a check's minimum.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A certified evaluation could not decide a comparison it must decide.
class NotCertified : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No prime found in (n, 2n). Never expected; raised rather than reported.
class PostulateViolation : public std::runtime_error {
public:
    explicit PostulateViolation(std::uint64_t n);
    std::uint64_t n() const { return n_; }

private:
    std::uint64_t n_;
};

struct ProofConstants {
    CertifiedReal a;  // log 3
    CertifiedReal b;  // log 4

    static ProofConstants standard();
};

enum class CheckId { EQ4, EQ5, EQ6, EQ7_UPPER, EQ7_LOWER, EQ8, EQ9, EQ10, EQ11, FINAL };

std::string_view to_string(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view text);
std::span<const CheckId> all_checks();
/// Smallest n for which the relation is claimed.
std::uint64_t minimum_n(CheckId id);

struct ProofOptions {
    sieve::SieveOptions sieve;
    std::uint64_t exact_cap = kDefaultExactCap;
};

struct InequalityReport {
    CheckId id;
    std::uint64_t n_start = 0;
    std::uint64_t n_end = 0;
    std::vector<ReportRow> rows;         // one per link per n, ascending n
    std::vector<RowVerdict> verdicts;    // per n, worst over links
    CertifiedReal worst_margin;          // (larger - smaller) with the smallest lower bound
    std::uint64_t worst_n = 0;

    Outcome outcome() const { return outcome_of(rows); }
};

struct IdentityReport {
    IdentityId id;
    std::uint64_t n_start = 0;
    std::uint64_t n_end = 0;
    std::vector<ReportRow> rows;

    Outcome outcome() const { return outcome_of(rows); }
};

/// a*n - 2b*sqrt(2n) - (2b/3)*n
CertifiedReal final_bound(std::uint64_t n, const ProofConstants& c = ProofConstants::standard());

struct ThresholdResult {
    std::uint64_t n = 0;          // expression > 0 for every integer above n
    CertifiedReal sqrt_root;      // positive root of the quadratic in sqrt(n)
    CertifiedReal root_squared;
    CertifiedReal at_n;           // certifiably negative
    CertifiedReal at_next;        // certifiably positive
};

/// Throws NotCertified if the straddling evaluations cannot be certified.
ThresholdResult threshold_n();

struct BertrandWitness {
    std::uint64_t n;
    std::uint64_t p;
};

/// Throws std::domain_error for n <= 1 and PostulateViolation if the next
/// prime after n is not below 2n.
BertrandWitness bertrand_witness(std::uint64_t n, const sieve::SieveOptions& options = {});

struct BertrandScan {
    std::uint64_t n_max = 0;
    std::vector<BertrandWitness> witnesses;  // n = 2 .. n_max
};

/// One forward sweep over the primes below 2 * n_max. Throws
/// std::domain_error for n_max < 2.
BertrandScan bertrand_scan(std::uint64_t n_max, const sieve::SieveOptions& options = {});

/// Owns the prefix tables for one n range and evaluates checks against them.
/// Chunks of n run concurrently; results merge by ascending n.
class ProofEngine {
public:
    ProofEngine(std::uint64_t n_max, ProofOptions options = {});
    ~ProofEngine();
    ProofEngine(ProofEngine&&) noexcept;
    ProofEngine& operator=(ProofEngine&&) noexcept;

    std::uint64_t n_max() const;
    const ProofOptions& options() const;
    const ProofConstants& constants() const;

    /// Throws UsageError when n_start is below minimum_n(id), n_start > n_end,
    /// or n_end exceeds the engine's range.
    InequalityReport verify(CheckId id, std::uint64_t n_start, std::uint64_t n_end) const;

    /// Same evaluation without the minimum-n guard. Test hook for negative
    /// controls; n_start must still be >= 1.
    InequalityReport evaluate_unchecked(CheckId id, std::uint64_t n_start, std::uint64_t n_end) const;

    IdentityReport identities(IdentityId id, std::uint64_t n_start, std::uint64_t n_end) const;

    /// Rows asserting 0 < final_bound(n) < theta(2n) - theta(n); n_start >= 506.
    std::vector<ReportRow> soundness_chain(std::uint64_t n_start, std::uint64_t n_end) const;

    const ChebyshevTable& table() const;
    const BinomialLogTable& binomial_logs() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

InequalityReport verify_inequality(CheckId id, std::uint64_t n_start, std::uint64_t n_end,
                                   const ProofOptions& options = {});

struct InductionReport {
    std::uint64_t n_max = 0;
    bool base_upper = false;     // N_2 = 6 < 4^2
    bool base_lower = false;     // 3^5 = 243 < N_5 = 252
    std::vector<ReportRow> rows;
    std::vector<std::string> notes;

    Outcome outcome() const;
};

/// Throws UsageError for n_max < 5.
InductionReport verify_induction(std::uint64_t n_max, const ProofOptions& options = {});
InductionReport verify_induction(const ProofEngine& engine, std::uint64_t n_max);

struct ProofSection {
    std::string name;
    std::size_t rows = 0;
    Outcome outcome = Outcome::Pass;
};

struct ProofReport {
    std::uint64_t n_max = 0;
    std::vector<ProofSection> sections;
    std::vector<ReportRow> rows;
    std::vector<std::string> notes;
    ThresholdResult threshold;
    Outcome outcome = Outcome::Pass;
};

/// Throws UsageError for n_max < 506.
ProofReport verify_all(std::uint64_t n_max, const ProofOptions& options = {});

// Report adapters.
Report to_report(const InequalityReport& r);
Report to_report(const IdentityReport& r);
Report to_report(const InductionReport& r);
Report to_report(const ThresholdResult& r);
Report to_report(const BertrandScan& r);
Report to_report(const ProofReport& r);

}  // namespace bertrand
