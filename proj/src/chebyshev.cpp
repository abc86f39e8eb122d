#include "bertrand/chebyshev.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "parallel.hpp"

namespace bertrand {

namespace {

constexpr std::uint64_t kMaxArgument = std::uint64_t{1} << 62;

// k^m <= x without overflow.
bool power_at_most(std::uint64_t k, unsigned m, std::uint64_t x) {
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < m; ++i) {
        acc *= k;
        if (acc > x) return false;
    }
    return true;
}

template <class Fn>
ExactSum reduce_segments(std::uint64_t lo, std::uint64_t hi, const SieveOptions& options, Fn&& per_segment) {
    const auto ranges = sieve::segment_ranges(lo, hi, options);
    const auto parts = detail::ordered_map<ExactSum>(ranges.size(), options.resolved_threads(),
                                                     [&](std::size_t i) { return per_segment(ranges[i]); });
    ExactSum total;
    for (const auto& part : parts) total.add(part);
    return total;
}

}  // namespace

std::uint64_t integer_root(std::uint64_t x, unsigned m) {
    if (m == 0) throw std::invalid_argument("integer_root: m must be >= 1");
    if (m == 1 || x < 2) return x;
    if (m >= 64) return 1;
    auto r = static_cast<std::uint64_t>(std::pow(static_cast<double>(x), 1.0 / m));
    while (r > 0 && !power_at_most(r, m, x)) --r;
    while (power_at_most(r + 1, m, x)) ++r;
    return r;
}

std::uint64_t floor_argument(double x) {
    if (!std::isfinite(x) || x < 0) throw std::domain_error("argument must be a finite real >= 0");
    if (x >= static_cast<double>(kMaxArgument)) throw std::overflow_error("argument too large");
    return static_cast<std::uint64_t>(std::floor(x));
}

ExactSum theta_sum(std::uint64_t x, const SieveOptions& options) {
    if (x < 2) return {};
    if (x >= kMaxArgument) throw std::overflow_error("theta: argument too large");
    const auto base = sieve::base_primes_for(x + 1);
    return reduce_segments(0, x + 1, options, [&](std::pair<std::uint64_t, std::uint64_t> range) {
        ExactSum part;
        sieve::SieveSegment(range.first, range.second, base).for_each_prime([&](std::uint64_t p) {
            part.add(log_nat(p));
        });
        return part;
    });
}

ExactSum psi_sum(std::uint64_t x, const SieveOptions& options) {
    ExactSum total = theta_sum(x, options);
    // Higher powers: p^m <= x with m >= 2 needs p <= sqrt(x).
    for (const std::uint64_t p : sieve::small_primes(sieve::isqrt(x))) {
        const CertifiedReal log_p = log_nat(p);
        for (std::uint64_t value = p; value <= x / p;) {
            value *= p;
            total.add(log_p);
        }
    }
    return total;
}

ExactSum log_factorial_sum(std::uint64_t k, const SieveOptions& options) {
    if (k < 2) return {};
    if (k >= kMaxArgument) throw std::overflow_error("log_factorial: argument too large");
    return reduce_segments(2, k + 1, options, [](std::pair<std::uint64_t, std::uint64_t> range) {
        ExactSum part;
        for (std::uint64_t i = range.first; i < range.second; ++i) part.add(log_nat(i));
        return part;
    });
}

CertifiedReal theta(double x, const SieveOptions& options) {
    return theta_sum(floor_argument(x), options).result();
}

CertifiedReal psi(double x, const SieveOptions& options) { return psi_sum(floor_argument(x), options).result(); }

CertifiedReal psi_from_theta(double x, const SieveOptions& options) {
    const std::uint64_t n = floor_argument(x);
    ExactSum total;
    for (unsigned m = 1;; ++m) {
        const std::uint64_t root = integer_root(n, m);
        if (root < 2) break;
        total.add(theta_sum(root, options));
    }
    return total.result();
}

ChebyshevValue chebyshev_value(double x, const SieveOptions& options) {
    return {x, theta(x, options), psi(x, options)};
}

CertifiedReal log_factorial(std::uint64_t k, const SieveOptions& options) {
    return log_factorial_sum(k, options).result();
}

ChebyshevTable::ChebyshevTable(std::uint64_t limit)
    : limit_(limit), primes_(sieve::small_primes(limit)), theta_(limit + 1), psi_(limit + 1),
      log_factorial_(limit + 1) {
    // base_of[x] = p when x = p^m, else 0
    std::vector<std::uint64_t> base_of(limit + 1, 0);
    for (const std::uint64_t p : primes_) {
        for (std::uint64_t value = p;; value *= p) {
            base_of[value] = p;
            if (value > limit / p) break;
        }
    }
    for (std::uint64_t x = 1; x <= limit; ++x) {
        theta_[x] = theta_[x - 1];
        psi_[x] = psi_[x - 1];
        log_factorial_[x] = log_factorial_[x - 1];
        if (x >= 2) log_factorial_[x].add(log_nat(x));
        if (const std::uint64_t p = base_of[x]; p != 0) {
            const CertifiedReal log_p = log_nat(p);
            psi_[x].add(log_p);
            if (p == x) theta_[x].add(log_p);
        }
    }
}

CertifiedReal log_of(const mpz_class& value) {
    if (sgn(value) <= 0) throw std::domain_error("log_of: argument must be positive");
    if (mpz_sizeinbase(value.get_mpz_t(), 2) <= 53) return log_nat(static_cast<std::uint64_t>(value.get_d()));
    long exponent = 0;
    // value = d' * 2^exponent with d' in [0.5, 1); d is d' truncated, so
    // d <= d' < d + 2^-53 and 0 <= log d' - log d < 2^-52.
    const double d = mpz_get_d_2exp(&exponent, value.get_mpz_t());
    const CertifiedReal mantissa_log = log_real(d) + CertifiedReal(0x1p-53, 0x1p-53);
    return mantissa_log + scale(log_nat(2), exponent);
}

void CentralBinomialSequence::advance() {
    if (n_ >= (std::uint64_t{1} << 60)) throw std::overflow_error("CentralBinomialSequence: n too large");
    mpz_mul_ui(value_.get_mpz_t(), value_.get_mpz_t(), 2 * (2 * n_ + 1));
    mpz_divexact_ui(value_.get_mpz_t(), value_.get_mpz_t(), n_ + 1);
    ++n_;
}

void CentralBinomialSequence::seek(std::uint64_t n) {
    if (n < n_) throw std::invalid_argument("CentralBinomialSequence: seek is forward only");
    while (n_ < n) advance();
}

CentralBinomial central_binomial(std::uint64_t n, std::uint64_t exact_cap, const SieveOptions& options) {
    if (n == 0) throw std::domain_error("central_binomial: n must be >= 1");
    if (n <= exact_cap) {
        CentralBinomialSequence seq;
        seq.seek(n);
        return {n, seq.value(), log_of(seq.value())};
    }
    ExactSum log_value = log_factorial_sum(2 * n, options);
    log_value.add(log_factorial_sum(n, options), -2);
    return {n, std::nullopt, log_value.result()};
}

BinomialLogTable::BinomialLogTable(std::uint64_t limit, std::uint64_t exact_cap, const ChebyshevTable& table)
    : logs_(limit + 1) {
    if (limit > exact_cap && table.limit() < 2 * limit)
        throw std::invalid_argument("BinomialLogTable: Chebyshev table too small");
    CentralBinomialSequence seq;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        if (n <= exact_cap) {
            seq.seek(n);
            logs_[n] = log_of(seq.value());
        } else {
            ExactSum s = table.log_factorial_sum(2 * n);
            s.add(table.log_factorial_sum(n), -2);
            logs_[n] = s.result();
        }
    }
}

std::string_view to_string(IdentityId id) {
    switch (id) {
        case IdentityId::EQ1: return "EQ1";
        case IdentityId::EQ2: return "EQ2";
        case IdentityId::EQ3: return "EQ3";
    }
    return "?";
}

std::optional<IdentityId> parse_identity_id(std::string_view text) {
    if (text == "EQ1") return IdentityId::EQ1;
    if (text == "EQ2") return IdentityId::EQ2;
    if (text == "EQ3") return IdentityId::EQ3;
    return std::nullopt;
}

namespace {

// sum over k >= 1 of weight(k) * psi(floor(x / k)), grouping runs of k that
// share a quotient. With alternating = true, weight(k) = (-1)^(k+1).
ExactSum psi_quotient_sum(std::uint64_t x, bool alternating, const ChebyshevTable& table) {
    ExactSum acc;
    for (std::uint64_t k = 1; k <= x;) {
        const std::uint64_t q = x / k;
        if (q < 2) break;
        const std::uint64_t k_end = x / q;
        auto weight = static_cast<std::int64_t>(k_end - k + 1);
        if (alternating) {
            const auto odd = static_cast<std::int64_t>((k_end + 1) / 2 - k / 2);
            weight = odd - (weight - odd);
        }
        if (weight != 0) acc.add(table.psi_sum(q), weight);
        k = k_end + 1;
    }
    return acc;
}

}  // namespace

IdentityResult check_identity(IdentityId id, std::uint64_t n, const ChebyshevTable& table,
                              const BinomialLogTable& binomial_logs) {
    if (n == 0) throw std::domain_error("check_identity: n must be >= 1");
    const std::uint64_t x = 2 * n;
    if (table.limit() < x) throw std::invalid_argument("check_identity: Chebyshev table too small");
    CertifiedReal lhs;
    CertifiedReal rhs;
    switch (id) {
        case IdentityId::EQ1:
            lhs = table.log_factorial(x);
            rhs = psi_quotient_sum(x, false, table).result();
            break;
        case IdentityId::EQ2: {
            ExactSum left = table.psi_sum(x);
            left.add(table.psi_sum(sieve::isqrt(x)), -2);
            ExactSum right;
            for (unsigned m = 1;; ++m) {
                const std::uint64_t root = integer_root(x, m);
                if (root < 2) break;
                right.add(table.theta_sum(root), m % 2 == 1 ? 1 : -1);
            }
            lhs = left.result();
            rhs = right.result();
            break;
        }
        case IdentityId::EQ3:
            if (binomial_logs.limit() < n) throw std::invalid_argument("check_identity: binomial table too small");
            lhs = binomial_logs.log(n);
            rhs = psi_quotient_sum(x, true, table).result();
            break;
    }
    return {id, n, lhs, rhs, cert_compare(lhs, rhs), cert_compare(rhs, lhs)};
}

IdentityResult check_identity(IdentityId id, std::uint64_t n, std::uint64_t exact_cap) {
    if (n == 0) throw std::domain_error("check_identity: n must be >= 1");
    const ChebyshevTable table(2 * n);
    const BinomialLogTable logs(id == IdentityId::EQ3 ? n : 0, exact_cap, table);
    return check_identity(id, n, table, logs);
}

}  // namespace bertrand
