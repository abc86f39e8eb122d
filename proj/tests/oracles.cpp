#include "oracles.hpp"

#include <algorithm>

namespace oracle {

namespace {
constexpr mpfr_prec_t kPrecision = 512;
}

bool trial_division_is_prime(std::uint64_t k) {
    if (k < 2) return false;
    for (std::uint64_t d = 2; d * d <= k; ++d)
        if (k % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> trial_division_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 2; k <= limit; ++k) {
        bool prime = true;
        for (std::uint64_t p : out) {
            if (p * p > k) break;
            if (k % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) out.push_back(k);
    }
    return out;
}

Big::Big() {
    mpfr_init2(v_, kPrecision);
    mpfr_set_zero(v_, 1);
}
Big::Big(double v) {
    mpfr_init2(v_, kPrecision);
    mpfr_set_d(v_, v, MPFR_RNDN);
}
Big::Big(const Big& other) {
    mpfr_init2(v_, kPrecision);
    mpfr_set(v_, other.v_, MPFR_RNDN);
}
Big& Big::operator=(const Big& other) {
    mpfr_set(v_, other.v_, MPFR_RNDN);
    return *this;
}
Big::~Big() { mpfr_clear(v_); }

Big Big::log_of(std::uint64_t k) {
    Big r;
    mpfr_set_ui(r.v_, k, MPFR_RNDN);
    mpfr_log(r.v_, r.v_, MPFR_RNDN);
    return r;
}
Big Big::log_of(const mpz_class& z) {
    Big r;
    mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
    mpfr_log(r.v_, r.v_, MPFR_RNDN);
    return r;
}
Big Big::sqrt_of(std::uint64_t k) {
    Big r;
    mpfr_set_ui(r.v_, k, MPFR_RNDN);
    mpfr_sqrt(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Big& Big::operator+=(const Big& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Big& Big::operator-=(const Big& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Big& Big::operator*=(const Big& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Big& Big::operator/=(const Big& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

double Big::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

bool Big::inside(const bertrand::CertifiedReal& x) const {
    return mpfr_cmp_d(v_, x.lower()) >= 0 && mpfr_cmp_d(v_, x.upper()) <= 0;
}

Big naive_theta(std::uint64_t x) {
    Big s;
    for (std::uint64_t k = 2; k <= x; ++k)
        if (trial_division_is_prime(k)) s += Big::log_of(k);
    return s;
}

Big naive_psi(std::uint64_t x) {
    Big s;
    for (std::uint64_t k = 2; k <= x; ++k) {
        if (!trial_division_is_prime(k)) continue;
        for (std::uint64_t q = k; q <= x; q *= k) {
            s += Big::log_of(k);
            if (q > x / k) break;
        }
    }
    return s;
}

Big naive_log_factorial(std::uint64_t k) {
    Big s;
    for (std::uint64_t j = 2; j <= k; ++j) s += Big::log_of(j);
    return s;
}

namespace {

// Little-endian base-10 digits.
using Digits = std::vector<unsigned char>;

Digits add(const Digits& a, const Digits& b) {
    Digits r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    unsigned carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        unsigned d = carry;
        if (i < a.size()) d += a[i];
        if (i < b.size()) d += b[i];
        r.push_back(static_cast<unsigned char>(d % 10));
        carry = d / 10;
    }
    return r;
}

std::string to_string(const Digits& d) {
    std::string s;
    for (auto it = d.rbegin(); it != d.rend(); ++it) s.push_back(static_cast<char>('0' + *it));
    return s;
}

}  // namespace

std::vector<std::string> pascal_central_binomials(std::uint64_t n_max) {
    std::vector<std::string> out;
    std::vector<Digits> row{Digits{1}};
    out.push_back("1");
    for (std::uint64_t r = 1; r <= 2 * n_max; ++r) {
        std::vector<Digits> next(r + 1);
        next[0] = next[r] = Digits{1};
        for (std::uint64_t j = 1; j < r; ++j) next[j] = add(row[j - 1], row[j]);
        row = std::move(next);
        if (r % 2 == 0) out.push_back(to_string(row[r / 2]));
    }
    return out;
}

}  // namespace oracle
