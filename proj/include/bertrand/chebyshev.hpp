#pragma once

// Chebyshev's functions theta(x) = sum_{p <= x} log p and
// psi(x) = sum_{p^m <= x} log p, log-factorials, central binomial
// coefficients, and the exact identities tying them together.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "bertrand/numerics.hpp"
#include "bertrand/sieve.hpp"

namespace bertrand {

using sieve::SieveOptions;

inline constexpr std::uint64_t kDefaultExactCap = 10000;

struct PrimePower {
    std::uint64_t p;
    unsigned m;
    std::uint64_t value;  // p^m
};

struct ChebyshevValue {
    double x;
    CertifiedReal theta;
    CertifiedReal psi;
};

/// Largest k with k^m <= x, by exact integer search.
std::uint64_t integer_root(std::uint64_t x, unsigned m);

/// floor(x) for finite x >= 0; throws std::domain_error otherwise.
std::uint64_t floor_argument(double x);

/// Calls fn(PrimePower) for every p^m <= x, ordered by p then m.
template <class Fn>
void for_each_prime_power(std::uint64_t x, Fn&& fn) {
    auto stream = sieve::primes_up_to(x);
    while (auto p = stream.next()) {
        std::uint64_t value = *p;
        for (unsigned m = 1;; ++m) {
            fn(PrimePower{*p, m, value});
            if (value > x / *p) break;
            value *= *p;
        }
    }
}

// Exact (fixed-point) sums; convert with .result().
ExactSum theta_sum(std::uint64_t x, const SieveOptions& options = {});
ExactSum psi_sum(std::uint64_t x, const SieveOptions& options = {});
ExactSum log_factorial_sum(std::uint64_t k, const SieveOptions& options = {});

CertifiedReal theta(double x, const SieveOptions& options = {});
CertifiedReal psi(double x, const SieveOptions& options = {});
/// psi through sum_m theta(floor(x^(1/m))), stopping once the root drops below 2.
CertifiedReal psi_from_theta(double x, const SieveOptions& options = {});
ChebyshevValue chebyshev_value(double x, const SieveOptions& options = {});
CertifiedReal log_factorial(std::uint64_t k, const SieveOptions& options = {});

/// Prefix tables of theta, psi and log k! for every integer argument up to a
/// limit. Entries equal the direct functions exactly.
class ChebyshevTable {
public:
    explicit ChebyshevTable(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }
    const std::vector<std::uint64_t>& primes() const { return primes_; }

    const ExactSum& theta_sum(std::uint64_t x) const { return theta_.at(x); }
    const ExactSum& psi_sum(std::uint64_t x) const { return psi_.at(x); }
    const ExactSum& log_factorial_sum(std::uint64_t k) const { return log_factorial_.at(k); }

    CertifiedReal theta(std::uint64_t x) const { return theta_sum(x).result(); }
    CertifiedReal psi(std::uint64_t x) const { return psi_sum(x).result(); }
    CertifiedReal log_factorial(std::uint64_t k) const { return log_factorial_sum(k).result(); }

private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> primes_;
    std::vector<ExactSum> theta_;
    std::vector<ExactSum> psi_;
    std::vector<ExactSum> log_factorial_;
};

struct CentralBinomial {
    std::uint64_t n;
    std::optional<mpz_class> exact;  // empty above the exact cap
    CertifiedReal log_value;
};

/// Certified natural log of a positive big integer.
CertifiedReal log_of(const mpz_class& value);

/// Walks N_1, N_2, ... with N_{n+1} = 2(2n+1)/(n+1) * N_n, all divisions exact.
class CentralBinomialSequence {
public:
    CentralBinomialSequence() : value_(2) {}

    std::uint64_t n() const { return n_; }
    const mpz_class& value() const { return value_; }

    void advance();
    void seek(std::uint64_t n);  // forward only

private:
    std::uint64_t n_ = 1;
    mpz_class value_;
};

/// N_n = (2n)!/(n! n!). Exact when n <= exact_cap; the log is always certified.
/// Throws std::domain_error for n == 0.
CentralBinomial central_binomial(std::uint64_t n, std::uint64_t exact_cap = kDefaultExactCap,
                                 const SieveOptions& options = {});

/// log N_n for n in [1, limit]: from the exact integer up to exact_cap,
/// from log (2n)! - 2 log n! above it. `table` must reach 2 * limit.
class BinomialLogTable {
public:
    BinomialLogTable(std::uint64_t limit, std::uint64_t exact_cap, const ChebyshevTable& table);

    std::uint64_t limit() const { return logs_.size() - 1; }
    const CertifiedReal& log(std::uint64_t n) const { return logs_.at(n); }

private:
    std::vector<CertifiedReal> logs_;
};

enum class IdentityId { EQ1, EQ2, EQ3 };

std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity_id(std::string_view text);

struct IdentityResult {
    IdentityId id;
    std::uint64_t n;
    CertifiedReal lhs;
    CertifiedReal rhs;
    Verdict forward;   // cert_compare(lhs, rhs)
    Verdict backward;  // cert_compare(rhs, lhs)

    /// Exact identities must never produce disjoint intervals.
    bool consistent() const {
        return forward == Verdict::Indeterminate && backward == Verdict::Indeterminate;
    }
};

/// EQ1: log (2n)! = sum_{k>=1} psi(2n/k)
/// EQ2: psi(2n) - 2 psi(sqrt(2n)) = sum_{m>=1} (-1)^(m+1) theta((2n)^(1/m))
/// EQ3: log N_n = sum_{k>=1} (-1)^(k+1) psi(2n/k)
/// Tables must reach 2n (Chebyshev) and n (binomial).
IdentityResult check_identity(IdentityId id, std::uint64_t n, const ChebyshevTable& table,
                              const BinomialLogTable& binomial_logs);

/// Builds the tables it needs; for one-off use.
IdentityResult check_identity(IdentityId id, std::uint64_t n, std::uint64_t exact_cap = kDefaultExactCap);

}  // namespace bertrand
