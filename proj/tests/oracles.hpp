#pragma once

// Independent reference implementations. Nothing here shares code with the
// library beyond the CertifiedReal type used to express containment.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

#include "bertrand/numerics.hpp"

namespace oracle {

bool trial_division_is_prime(std::uint64_t k);
std::vector<std::uint64_t> trial_division_primes(std::uint64_t limit);

// High-precision real backed by MPFR at 512 bits, round-to-nearest.
class Big {
public:
    Big();
    explicit Big(double v);
    Big(const Big& other);
    Big& operator=(const Big& other);
    ~Big();

    static Big log_of(std::uint64_t k);
    static Big log_of(const mpz_class& z);
    static Big sqrt_of(std::uint64_t k);

    Big& operator+=(const Big& o);
    Big& operator-=(const Big& o);
    Big& operator*=(const Big& o);
    Big& operator/=(const Big& o);
    friend Big operator+(Big a, const Big& b) { return a += b; }
    friend Big operator-(Big a, const Big& b) { return a -= b; }
    friend Big operator*(Big a, const Big& b) { return a *= b; }
    friend Big operator/(Big a, const Big& b) { return a /= b; }

    double to_double() const;
    // lower() <= *this <= upper(), compared exactly
    bool inside(const bertrand::CertifiedReal& x) const;

private:
    mpfr_t v_;
};

// Straight sums over primes found by trial division.
Big naive_theta(std::uint64_t x);
Big naive_psi(std::uint64_t x);
Big naive_log_factorial(std::uint64_t k);

// Central binomials (2n choose n) for n = 0..n_max from Pascal's triangle in
// decimal string arithmetic.
std::vector<std::string> pascal_central_binomials(std::uint64_t n_max);

}  // namespace oracle
