#include "bertrand/proofcheck.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <string>

#include "parallel.hpp"

namespace bertrand {

namespace {

constexpr std::uint64_t kChunk = 2048;
constexpr std::uint64_t kSoundnessStart = 506;

constexpr std::array kAllChecks{CheckId::EQ4,       CheckId::EQ5, CheckId::EQ6, CheckId::EQ7_UPPER,
                                CheckId::EQ7_LOWER, CheckId::EQ8, CheckId::EQ9, CheckId::EQ10,
                                CheckId::EQ11,      CheckId::FINAL};

using U128 = unsigned __int128;

// Rank for "worst of": fail > indeterminate > certain > exact.
int severity(RowVerdict v) {
    switch (v) {
        case RowVerdict::ExactPass: return 0;
        case RowVerdict::CertainPass: return 1;
        case RowVerdict::Indeterminate: return 2;
        case RowVerdict::CertainFail: return 3;
    }
    return 3;
}

ReportRow make_row(std::string_view label, std::uint64_t n, const CertifiedReal& lhs, const CertifiedReal& rhs,
                   RowVerdict verdict) {
    ReportRow row;
    row.check_id = label;
    row.n = n;
    row.lhs = lhs;
    row.rhs = rhs;
    row.has_rhs = true;
    row.verdict = verdict;
    row.margin = (rhs - lhs).lower();
    return row;
}

RowVerdict strict_verdict(const CertifiedReal& lhs, const CertifiedReal& rhs) {
    switch (cert_compare(lhs, rhs)) {
        case Verdict::CertainLess: return RowVerdict::CertainPass;
        case Verdict::CertainGreater: return RowVerdict::CertainFail;
        case Verdict::Indeterminate: break;
    }
    return RowVerdict::Indeterminate;
}

RowVerdict exact_verdict(bool holds) { return holds ? RowVerdict::ExactPass : RowVerdict::CertainFail; }

CertifiedReal exact_int(std::uint64_t k) { return CertifiedReal::exact(static_cast<double>(k)); }

// A log-domain side written as sum_p e_p log p with integer e_p. Two sides
// are equal iff their exponent vectors agree, since the log p are linearly
// independent over the rationals.
class ExponentForm {
public:
    explicit ExponentForm(const std::vector<std::uint64_t>& primes) : primes_(primes), coef_(primes.size(), 0) {}

    ExponentForm& theta(std::uint64_t x, std::int64_t c) {
        for (std::size_t i = 0; i < primes_.size() && primes_[i] <= x; ++i) coef_[i] += c;
        return *this;
    }

    ExponentForm& psi(std::uint64_t x, std::int64_t c) {
        for (std::size_t i = 0; i < primes_.size() && primes_[i] <= x; ++i) {
            const std::uint64_t p = primes_[i];
            std::int64_t e = 0;
            for (std::uint64_t v = p;; v *= p) {
                ++e;
                if (v > x / p) break;
            }
            coef_[i] += c * e;
        }
        return *this;
    }

    // log N_n through Legendre's formula.
    ExponentForm& log_binomial(std::uint64_t n, std::int64_t c) {
        for (std::size_t i = 0; i < primes_.size() && primes_[i] <= 2 * n; ++i) {
            const std::uint64_t p = primes_[i];
            std::int64_t e = 0;
            for (std::uint64_t q = p;; q *= p) {
                e += static_cast<std::int64_t>(2 * n / q) - 2 * static_cast<std::int64_t>(n / q);
                if (q > 2 * n / p) break;
            }
            coef_[i] += c * e;
        }
        return *this;
    }

    bool is_zero() const {
        return std::all_of(coef_.begin(), coef_.end(), [](std::int64_t c) { return c == 0; });
    }

private:
    const std::vector<std::uint64_t>& primes_;
    std::vector<std::int64_t> coef_;
};

struct ExactFacts {
    bool pow3_below = false;   // 3^n < N_n
    bool below_pow4 = false;   // N_n < 4^n
    bool has_step = false;     // N_{n+1} available exactly
    bool triple_le_next = false;  // 3 N_n <= N_{n+1}
    bool next_lt_quad = false;    // N_{n+1} < 4 N_n
};

}  // namespace

PostulateViolation::PostulateViolation(std::uint64_t n)
    : std::runtime_error("no prime p with n < p < 2n for n = " + std::to_string(n)), n_(n) {}

ProofConstants ProofConstants::standard() { return {log_nat(3), log_nat(4)}; }

std::string_view to_string(CheckId id) {
    switch (id) {
        case CheckId::EQ4: return "EQ4";
        case CheckId::EQ5: return "EQ5";
        case CheckId::EQ6: return "EQ6";
        case CheckId::EQ7_UPPER: return "EQ7_UPPER";
        case CheckId::EQ7_LOWER: return "EQ7_LOWER";
        case CheckId::EQ8: return "EQ8";
        case CheckId::EQ9: return "EQ9";
        case CheckId::EQ10: return "EQ10";
        case CheckId::EQ11: return "EQ11";
        case CheckId::FINAL: return "FINAL";
    }
    return "?";
}

std::optional<CheckId> parse_check_id(std::string_view text) {
    for (const auto id : kAllChecks)
        if (text == to_string(id)) return id;
    return std::nullopt;
}

std::span<const CheckId> all_checks() { return kAllChecks; }

std::uint64_t minimum_n(CheckId id) {
    switch (id) {
        case CheckId::EQ4:
        case CheckId::EQ5:
        case CheckId::EQ6: return 1;
        case CheckId::EQ7_UPPER:
        case CheckId::EQ8:
        case CheckId::EQ10: return 2;
        case CheckId::EQ7_LOWER:
        case CheckId::EQ9:
        case CheckId::EQ11:
        case CheckId::FINAL: return 5;
    }
    return 1;
}

CertifiedReal final_bound(std::uint64_t n, const ProofConstants& c) {
    const auto k = static_cast<std::int64_t>(n);
    const CertifiedReal two_b = scale(c.b, 2);
    return scale(c.a, k) - two_b * sqrt_nat(2 * n) - scale(c.b, 2 * k) / CertifiedReal::exact(3);
}

ThresholdResult threshold_n() {
    const auto c = ProofConstants::standard();
    const CertifiedReal two_b = scale(c.b, 2);
    // a*n - 2b*sqrt(2)*sqrt(n) - (2b/3)*n = sqrt(n) * (c1*sqrt(n) - c2)
    const CertifiedReal c1 = c.a - two_b / CertifiedReal::exact(3);
    const CertifiedReal c2 = two_b * sqrt_nat(2);
    ThresholdResult r;
    r.sqrt_root = c2 / c1;
    r.root_squared = r.sqrt_root * r.sqrt_root;
    const double lo = std::floor(r.root_squared.lower());
    if (lo != std::floor(r.root_squared.upper()) || lo < 1)
        throw NotCertified("threshold: root interval straddles an integer");
    r.n = static_cast<std::uint64_t>(lo);
    r.at_n = final_bound(r.n, c);
    r.at_next = final_bound(r.n + 1, c);
    const CertifiedReal zero;
    if (cert_compare(r.at_n, zero) != Verdict::CertainLess || cert_compare(r.at_next, zero) != Verdict::CertainGreater)
        throw NotCertified("threshold: straddling evaluations not certified");
    return r;
}

BertrandWitness bertrand_witness(std::uint64_t n, const sieve::SieveOptions& options) {
    if (n <= 1) throw std::domain_error("bertrand_witness: n must be > 1");
    const std::uint64_t p = sieve::next_prime_after(n, options);
    if (p >= 2 * n) throw PostulateViolation(n);
    return {n, p};
}

BertrandScan bertrand_scan(std::uint64_t n_max, const sieve::SieveOptions& options) {
    if (n_max < 2) throw std::domain_error("bertrand_scan: n_max must be >= 2");
    BertrandScan scan;
    scan.n_max = n_max;
    scan.witnesses.reserve(n_max - 1);
    auto stream = sieve::primes_up_to(2 * n_max - 1, options);
    std::optional<std::uint64_t> p = stream.next();
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        while (p && *p <= n) p = stream.next();
        if (!p || *p >= 2 * n) throw PostulateViolation(n);
        scan.witnesses.push_back({n, *p});
    }
    return scan;
}

struct ProofEngine::Impl {
    std::uint64_t n_max;
    ProofOptions options;
    ProofConstants constants = ProofConstants::standard();
    ChebyshevTable table;
    BinomialLogTable logs;
    std::uint64_t exact_limit;
    std::vector<ExactFacts> facts;

    Impl(std::uint64_t n_max_, ProofOptions options_)
        : n_max(n_max_), options(options_), table(2 * (n_max_ + 1)), logs(n_max_ + 1, options_.exact_cap, table),
          exact_limit(std::min(options_.exact_cap, n_max_ + 1)), facts(exact_limit + 1) {
        if (exact_limit == 0) return;
        CentralBinomialSequence seq;
        mpz_class pow3 = 3;
        mpz_class pow4 = 4;
        for (std::uint64_t n = 1; n <= exact_limit; ++n) {
            const mpz_class current = seq.value();
            facts[n].pow3_below = pow3 < current;
            facts[n].below_pow4 = current < pow4;
            if (n + 1 <= exact_limit) {
                seq.advance();
                facts[n].has_step = true;
                facts[n].triple_le_next = 3 * current <= seq.value();
                facts[n].next_lt_quad = seq.value() < 4 * current;
            }
            pow3 *= 3;
            pow4 *= 4;
        }
    }

    CertifiedReal psi(std::uint64_t x) const { return table.psi(x); }
    CertifiedReal theta(std::uint64_t x) const { return table.theta(x); }

    // Sum of weighted psi/theta prefix entries, combined exactly.
    CertifiedReal combo(std::initializer_list<std::pair<const ExactSum*, std::int64_t>> terms) const {
        ExactSum acc;
        for (const auto& [s, w] : terms) acc.add(*s, w);
        return acc.result();
    }

    RowVerdict non_strict(const CertifiedReal& lhs, const CertifiedReal& rhs, auto&& tie) const {
        const RowVerdict v = strict_verdict(lhs, rhs);
        if (v != RowVerdict::Indeterminate) return v;
        ExponentForm form(table.primes());
        tie(form);
        return form.is_zero() ? RowVerdict::ExactPass : RowVerdict::Indeterminate;
    }

    void evaluate(CheckId id, std::uint64_t n, std::vector<ReportRow>& out) const;
};

void ProofEngine::Impl::evaluate(CheckId id, std::uint64_t n, std::vector<ReportRow>& out) const {
    const auto& T = table;
    const std::uint64_t x = 2 * n;
    const std::uint64_t third = x / 3;
    const auto k = static_cast<std::int64_t>(n);
    const auto& a = constants.a;
    const auto& b = constants.b;

    switch (id) {
        case CheckId::EQ4: {
            const std::uint64_t r = sieve::isqrt(x);
            const auto lhs = combo({{&T.psi_sum(x), 1}, {&T.psi_sum(r), -2}});
            const auto mid = theta(x);
            const auto rhs = psi(x);
            out.push_back(make_row("EQ4#1", n, lhs, mid, non_strict(lhs, mid, [&](ExponentForm& f) {
                f.psi(x, 1).psi(r, -2).theta(x, -1);
            })));
            out.push_back(make_row("EQ4#2", n, mid, rhs, non_strict(mid, rhs, [&](ExponentForm& f) {
                f.theta(x, 1).psi(x, -1);
            })));
            break;
        }
        case CheckId::EQ5: {
            const auto lhs = combo({{&T.psi_sum(x), 1}, {&T.psi_sum(n), -1}});
            const auto mid = logs.log(n);
            const auto rhs = combo({{&T.psi_sum(x), 1}, {&T.psi_sum(n), -1}, {&T.psi_sum(third), 1}});
            out.push_back(make_row("EQ5#1", n, lhs, mid, non_strict(lhs, mid, [&](ExponentForm& f) {
                f.psi(x, 1).psi(n, -1).log_binomial(n, -1);
            })));
            out.push_back(make_row("EQ5#2", n, mid, rhs, non_strict(mid, rhs, [&](ExponentForm& f) {
                f.log_binomial(n, 1).psi(x, -1).psi(n, 1).psi(third, -1);
            })));
            break;
        }
        case CheckId::EQ6: {
            const auto log_n = logs.log(n);
            const auto log_next = logs.log(n + 1);
            bool lower = false;
            bool upper = false;
            if (n <= exact_limit && facts[n].has_step) {
                lower = facts[n].triple_le_next;
                upper = facts[n].next_lt_quad;
            } else {
                // N_{n+1} / N_n = 2(2n+1)/(n+1), compared as an exact rational.
                const U128 num = U128{2} * (2 * U128{n} + 1);
                const U128 den = U128{n} + 1;
                lower = 3 * den <= num;
                upper = num < 4 * den;
            }
            out.push_back(make_row("EQ6#1", n, a + log_n, log_next, exact_verdict(lower)));
            out.push_back(make_row("EQ6#2", n, log_next, b + log_n, exact_verdict(upper)));
            break;
        }
        case CheckId::EQ7_UPPER: {
            const auto lhs = logs.log(n);
            const auto rhs = scale(b, k);
            const RowVerdict v = n <= exact_limit ? exact_verdict(facts[n].below_pow4) : strict_verdict(lhs, rhs);
            out.push_back(make_row("EQ7_UPPER", n, lhs, rhs, v));
            break;
        }
        case CheckId::EQ7_LOWER: {
            const auto lhs = scale(a, k);
            const auto rhs = logs.log(n);
            const RowVerdict v = n <= exact_limit ? exact_verdict(facts[n].pow3_below) : strict_verdict(lhs, rhs);
            out.push_back(make_row("EQ7_LOWER", n, lhs, rhs, v));
            break;
        }
        case CheckId::EQ8: {
            const auto lhs = combo({{&T.psi_sum(x), 1}, {&T.psi_sum(n), -1}});
            const auto rhs = scale(b, k);
            out.push_back(make_row("EQ8", n, lhs, rhs, strict_verdict(lhs, rhs)));
            break;
        }
        case CheckId::EQ9: {
            const auto lhs = scale(a, k);
            const auto rhs = combo({{&T.psi_sum(x), 1}, {&T.psi_sum(n), -1}, {&T.psi_sum(third), 1}});
            out.push_back(make_row("EQ9", n, lhs, rhs, strict_verdict(lhs, rhs)));
            break;
        }
        case CheckId::EQ10: {
            const auto lhs = psi(x);
            const auto rhs = scale(b, 2 * k);
            out.push_back(make_row("EQ10", n, lhs, rhs, strict_verdict(lhs, rhs)));
            break;
        }
        case CheckId::EQ11: {
            const std::uint64_t r = sieve::isqrt(x);
            const auto left = combo({{&T.psi_sum(x), 1}, {&T.psi_sum(n), -1}, {&T.psi_sum(third), 1}});
            const auto middle = combo(
                {{&T.theta_sum(x), 1}, {&T.psi_sum(r), 2}, {&T.theta_sum(n), -1}, {&T.psi_sum(third), 1}});
            const auto right = combo({{&T.theta_sum(x), 1}, {&T.theta_sum(n), -1}}) +
                               scale(b, 2) * sqrt_nat(x) + scale(b, 2 * k) / CertifiedReal::exact(3);
            out.push_back(make_row("EQ11#1", n, left, middle, strict_verdict(left, middle)));
            out.push_back(make_row("EQ11#2", n, middle, right, strict_verdict(middle, right)));
            break;
        }
        case CheckId::FINAL: {
            const auto lhs = final_bound(n, constants);
            const auto rhs = combo({{&T.theta_sum(x), 1}, {&T.theta_sum(n), -1}});
            out.push_back(make_row("FINAL", n, lhs, rhs, strict_verdict(lhs, rhs)));
            break;
        }
    }
}

ProofEngine::ProofEngine(std::uint64_t n_max, ProofOptions options)
    : impl_(std::make_unique<Impl>(n_max, options)) {}
ProofEngine::~ProofEngine() = default;
ProofEngine::ProofEngine(ProofEngine&&) noexcept = default;
ProofEngine& ProofEngine::operator=(ProofEngine&&) noexcept = default;

std::uint64_t ProofEngine::n_max() const { return impl_->n_max; }
const ProofOptions& ProofEngine::options() const { return impl_->options; }
const ProofConstants& ProofEngine::constants() const { return impl_->constants; }
const ChebyshevTable& ProofEngine::table() const { return impl_->table; }
const BinomialLogTable& ProofEngine::binomial_logs() const { return impl_->logs; }

namespace {

template <class Fn>
std::vector<ReportRow> rows_over(std::uint64_t n_start, std::uint64_t n_end, unsigned threads, Fn&& per_n) {
    const std::uint64_t chunks = (n_end - n_start) / kChunk + 1;
    auto parts = detail::ordered_map<std::vector<ReportRow>>(chunks, threads, [&](std::size_t c) {
        std::vector<ReportRow> rows;
        const std::uint64_t lo = n_start + c * kChunk;
        const std::uint64_t hi = std::min(n_end, lo + kChunk - 1);
        for (std::uint64_t n = lo; n <= hi; ++n) per_n(n, rows);
        return rows;
    });
    std::vector<ReportRow> rows;
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    rows.reserve(total);
    for (auto& p : parts) rows.insert(rows.end(), p.begin(), p.end());
    return rows;
}

}  // namespace

InequalityReport ProofEngine::evaluate_unchecked(CheckId id, std::uint64_t n_start, std::uint64_t n_end) const {
    if (n_start < 1 || n_start > n_end) throw UsageError("verify: need 1 <= from <= to");
    if (n_end > impl_->n_max) throw UsageError("verify: range exceeds the engine's n_max");

    InequalityReport report;
    report.id = id;
    report.n_start = n_start;
    report.n_end = n_end;
    report.rows = rows_over(n_start, n_end, impl_->options.sieve.resolved_threads(),
                            [&](std::uint64_t n, std::vector<ReportRow>& rows) { impl_->evaluate(id, n, rows); });

    report.verdicts.reserve(n_end - n_start + 1);
    bool first = true;
    for (const auto& row : report.rows) {
        if (report.verdicts.size() < row.n - n_start + 1) report.verdicts.push_back(*row.verdict);
        else if (severity(*row.verdict) > severity(report.verdicts.back())) report.verdicts.back() = *row.verdict;
        if (first || row.margin < report.worst_margin.lower()) {
            report.worst_margin = row.rhs - row.lhs;
            report.worst_n = row.n;
            first = false;
        }
    }
    return report;
}

InequalityReport ProofEngine::verify(CheckId id, std::uint64_t n_start, std::uint64_t n_end) const {
    if (n_start < minimum_n(id))
        throw UsageError(std::string(to_string(id)) + " is only claimed for n >= " + std::to_string(minimum_n(id)));
    return evaluate_unchecked(id, n_start, n_end);
}

IdentityReport ProofEngine::identities(IdentityId id, std::uint64_t n_start, std::uint64_t n_end) const {
    if (n_start < 1 || n_start > n_end) throw UsageError("identity: need 1 <= from <= to");
    if (n_end > impl_->n_max) throw UsageError("identity: range exceeds the engine's n_max");
    IdentityReport report;
    report.id = id;
    report.n_start = n_start;
    report.n_end = n_end;
    report.rows = rows_over(n_start, n_end, impl_->options.sieve.resolved_threads(),
                            [&](std::uint64_t n, std::vector<ReportRow>& rows) {
                                const auto r = check_identity(id, n, impl_->table, impl_->logs);
                                ReportRow row = make_row(to_string(id), n, r.lhs, r.rhs,
                                                         r.consistent() ? RowVerdict::CertainPass
                                                                        : RowVerdict::CertainFail);
                                // Overlap width of the two intervals (negative when disjoint).
                                row.margin = std::min((CertifiedReal::exact(r.lhs.upper()) -
                                                       CertifiedReal::exact(r.rhs.lower())).lower(),
                                                      (CertifiedReal::exact(r.rhs.upper()) -
                                                       CertifiedReal::exact(r.lhs.lower())).lower());
                                rows.push_back(row);
                            });
    return report;
}

std::vector<ReportRow> ProofEngine::soundness_chain(std::uint64_t n_start, std::uint64_t n_end) const {
    if (n_start < kSoundnessStart || n_start > n_end)
        throw UsageError("soundness chain: need 506 <= from <= to");
    if (n_end > impl_->n_max) throw UsageError("soundness chain: range exceeds the engine's n_max");
    return rows_over(n_start, n_end, impl_->options.sieve.resolved_threads(),
                     [&](std::uint64_t n, std::vector<ReportRow>& rows) {
                         const auto bound = final_bound(n, impl_->constants);
                         rows.push_back(make_row("FINAL_POSITIVE", n, CertifiedReal(), bound,
                                                 strict_verdict(CertifiedReal(), bound)));
                     });
}

InequalityReport verify_inequality(CheckId id, std::uint64_t n_start, std::uint64_t n_end,
                                   const ProofOptions& options) {
    if (n_start < minimum_n(id))
        throw UsageError(std::string(to_string(id)) + " is only claimed for n >= " + std::to_string(minimum_n(id)));
    if (n_start > n_end) throw UsageError("verify: need from <= to");
    return ProofEngine(n_end, options).verify(id, n_start, n_end);
}

Outcome InductionReport::outcome() const {
    Outcome o = outcome_of(rows);
    if (!base_upper || !base_lower) o = Outcome::Fail;
    return o;
}

InductionReport verify_induction(const ProofEngine& engine, std::uint64_t n_max) {
    if (n_max < 5) throw UsageError("induction: n_max must be >= 5");
    if (n_max > engine.n_max()) throw UsageError("induction: range exceeds the engine's n_max");
    const auto& c = engine.constants();
    const auto& logs = engine.binomial_logs();

    InductionReport report;
    report.n_max = n_max;

    // Base cases with exact integers: N_2 = 6 < 16 = 4^2 and 3^5 = 243 < 252 = N_5.
    CentralBinomialSequence seq;
    seq.seek(2);
    report.base_upper = seq.value() < 16;
    seq.seek(5);
    report.base_lower = mpz_class(243) < seq.value();
    report.rows.push_back(make_row("BASE_UPPER", 2, logs.log(2), scale(c.b, 2), exact_verdict(report.base_upper)));
    report.rows.push_back(make_row("BASE_LOWER", 5, scale(c.a, 5), logs.log(5), exact_verdict(report.base_lower)));

    // Step premise: 3 <= N_{n+1}/N_n = 2(2n+1)/(n+1) < 4, as exact rationals.
    bool tie_at_one = false;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const U128 num = U128{2} * (2 * U128{n} + 1);
        const U128 den = U128{n} + 1;
        const CertifiedReal ratio = exact_int(static_cast<std::uint64_t>(num)) /
                                    exact_int(static_cast<std::uint64_t>(den));
        if (n == 1 && 3 * den == num) tie_at_one = true;
        report.rows.push_back(make_row("RATIO_LOWER", n, exact_int(3), ratio, exact_verdict(3 * den <= num)));
        report.rows.push_back(make_row("RATIO_UPPER", n, ratio, exact_int(4), exact_verdict(num < 4 * den)));
    }

    for (const auto id : {CheckId::EQ7_UPPER, CheckId::EQ7_LOWER}) {
        auto part = engine.verify(id, minimum_n(id), n_max);
        report.rows.insert(report.rows.end(), part.rows.begin(), part.rows.end());
    }

    const auto log2_vs = strict_verdict(log_nat(2), scale(c.b, 2));
    report.notes.push_back("base case uses N_2 = 4!/(2!2!) = 6; the value 2!/(1!1!) = 2 is N_1. Both satisfy "
                           "log N < 2b (log 2 < 2b: " +
                           std::string(to_string(log2_vs)) + ")");
    if (tie_at_one)
        report.notes.push_back("ratio N_{n+1}/N_n equals 3 exactly at n = 1; the lower step bound is attained there");
    report.notes.push_back("ratio N_{n+1}/N_n < 4 strictly for every n checked, so the non-strict upper step "
                           "bound holds as well");
    return report;
}

InductionReport verify_induction(std::uint64_t n_max, const ProofOptions& options) {
    if (n_max < 5) throw UsageError("induction: n_max must be >= 5");
    return verify_induction(ProofEngine(n_max, options), n_max);
}

namespace {

std::vector<ReportRow> threshold_rows(const ThresholdResult& t) {
    return {make_row("THRESHOLD_AT_N", t.n, t.at_n, CertifiedReal(), strict_verdict(t.at_n, CertifiedReal())),
            make_row("THRESHOLD_ABOVE_N", t.n + 1, CertifiedReal(), t.at_next,
                     strict_verdict(CertifiedReal(), t.at_next))};
}

std::vector<ReportRow> witness_rows(const BertrandScan& scan) {
    std::vector<ReportRow> rows;
    rows.reserve(scan.witnesses.size());
    for (const auto& w : scan.witnesses) {
        const bool ok = w.n < w.p && w.p < 2 * w.n && sieve::is_prime(w.p);
        rows.push_back(make_row("BERTRAND", w.n, exact_int(w.p), exact_int(2 * w.n), exact_verdict(ok)));
    }
    return rows;
}

void add_section(ProofReport& report, std::string name, std::vector<ReportRow> rows) {
    ProofSection section{std::move(name), rows.size(), outcome_of(rows)};
    report.outcome = combine(report.outcome, section.outcome);
    report.sections.push_back(std::move(section));
    report.rows.insert(report.rows.end(), std::make_move_iterator(rows.begin()), std::make_move_iterator(rows.end()));
}

}  // namespace

ProofReport verify_all(std::uint64_t n_max, const ProofOptions& options) {
    if (n_max < kSoundnessStart)
        throw UsageError("verify-all: n_max must be >= 506 to cover the threshold handoff");
    const ProofEngine engine(n_max, options);
    ProofReport report;
    report.n_max = n_max;

    for (const auto id : {IdentityId::EQ1, IdentityId::EQ2, IdentityId::EQ3})
        add_section(report, std::string(to_string(id)), engine.identities(id, 1, n_max).rows);
    for (const auto id : all_checks())
        add_section(report, std::string(to_string(id)), engine.verify(id, minimum_n(id), n_max).rows);

    auto induction = verify_induction(engine, n_max);
    std::erase_if(induction.rows, [](const ReportRow& r) { return r.check_id.starts_with("EQ7"); });
    if (!induction.base_lower || !induction.base_upper) report.outcome = Outcome::Fail;
    add_section(report, "INDUCTION", std::move(induction.rows));
    report.notes = std::move(induction.notes);

    report.threshold = threshold_n();
    add_section(report, "THRESHOLD", threshold_rows(report.threshold));
    add_section(report, "BERTRAND", witness_rows(bertrand_scan(report.threshold.n, options.sieve)));
    add_section(report, "SOUNDNESS", engine.soundness_chain(report.threshold.n + 1, n_max));

    report.notes.push_back("every n > " + std::to_string(report.threshold.n) +
                           " has a*n - 2b*sqrt(2n) - (2b/3)*n > 0; n <= " + std::to_string(report.threshold.n) +
                           " covered by explicit witnesses");
    return report;
}

Report to_report(const InequalityReport& r) {
    Report out;
    out.title = "verify " + std::string(to_string(r.id)) + " n=" + std::to_string(r.n_start) + ".." +
                std::to_string(r.n_end);
    out.summary.emplace_back("worst margin", format_decimal(r.worst_margin.lower()) + " at n=" +
                                                 std::to_string(r.worst_n));
    out.rows = r.rows;
    out.outcome = r.outcome();
    if (r.id == CheckId::EQ6)
        out.notes.emplace_back("upper link checked as N_{n+1} < 4 N_n, which implies the non-strict form");
    return out;
}

Report to_report(const IdentityReport& r) {
    Report out;
    out.title = "identity " + std::string(to_string(r.id)) + " n=" + std::to_string(r.n_start) + ".." +
                std::to_string(r.n_end);
    out.rows = r.rows;
    out.outcome = r.outcome();
    out.notes.emplace_back("CERTAIN_PASS means the two certified intervals overlap; margin is the overlap width");
    return out;
}

Report to_report(const InductionReport& r) {
    Report out;
    out.title = "induction n<=" + std::to_string(r.n_max);
    out.summary.emplace_back("base N_2 < 4^2", r.base_upper ? "yes" : "no");
    out.summary.emplace_back("base 3^5 < N_5", r.base_lower ? "yes" : "no");
    out.rows = r.rows;
    out.notes = r.notes;
    out.outcome = r.outcome();
    return out;
}

Report to_report(const ThresholdResult& r) {
    Report out;
    out.title = "threshold";
    out.summary.emplace_back("threshold", std::to_string(r.n));
    out.summary.emplace_back("sqrt(n) root", format_decimal(r.sqrt_root.value()) + " +/- " +
                                                 format_decimal(r.sqrt_root.err()));
    out.summary.emplace_back("root^2", format_decimal(r.root_squared.value()) + " +/- " +
                                           format_decimal(r.root_squared.err()));
    out.rows = threshold_rows(r);
    out.outcome = outcome_of(out.rows);
    return out;
}

Report to_report(const BertrandScan& r) {
    Report out;
    out.title = "bertrand-scan n=2.." + std::to_string(r.n_max);
    out.summary.emplace_back("witnesses", std::to_string(r.witnesses.size()));
    out.rows = witness_rows(r);
    out.outcome = outcome_of(out.rows);
    return out;
}

Report to_report(const ProofReport& r) {
    Report out;
    out.title = "verify-all n<=" + std::to_string(r.n_max);
    for (const auto& s : r.sections)
        out.summary.emplace_back(s.name, std::string(to_string(s.outcome)) + " (" + std::to_string(s.rows) + " rows)");
    out.summary.emplace_back("threshold", std::to_string(r.threshold.n));
    out.rows = r.rows;
    out.notes = r.notes;
    out.outcome = r.outcome;
    return out;
}

}  // namespace bertrand
