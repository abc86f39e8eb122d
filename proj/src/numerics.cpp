#include "bertrand/numerics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bertrand {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Knuth's TwoSum: s + e == a + b exactly.
struct TwoSum {
    double s;
    double e;
};

TwoSum two_sum(double a, double b) {
    const double s = a + b;
    const double bp = s - a;
    const double ap = s - bp;
    return {s, (a - ap) + (b - bp)};
}

constexpr Int128 kMaxUnits = static_cast<Int128>(1) << 120;

Int128 checked_add(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_add_overflow(a, b, &r) || r > kMaxUnits || r < -kMaxUnits)
        throw std::overflow_error("ExactSum: accumulator range exceeded");
    return r;
}

Int128 checked_mul(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("ExactSum: accumulator range exceeded");
    return r;
}

Int128 abs128(Int128 x) { return x < 0 ? -x : x; }

}  // namespace

namespace detail {

double add_up(double a, double b) {
    const auto [s, e] = two_sum(a, b);
    return e > 0 ? std::nextafter(s, kInf) : s;
}

double mul_up(double a, double b) {
    const double p = a * b;
    const double e = std::fma(a, b, -p);
    return e > 0 ? std::nextafter(p, kInf) : p;
}

double div_up(double a, double b) {
    const double q = a / b;
    // Remainder of a correctly rounded quotient is exact.
    const double r = std::fma(-q, b, a);
    if ((r > 0 && b > 0) || (r < 0 && b < 0)) return std::nextafter(q, kInf);
    return q;
}

}  // namespace detail

using detail::add_up;
using detail::div_up;
using detail::mul_up;

CertifiedReal::CertifiedReal(double value, double err) : value_(value), err_(err) {
    if (!std::isfinite(value) || !std::isfinite(err) || err < 0)
        throw std::invalid_argument("CertifiedReal: value and err must be finite, err >= 0");
}

double CertifiedReal::lower() const {
    const auto [d, e] = two_sum(value_, -err_);
    return e < 0 ? std::nextafter(d, -kInf) : d;
}

double CertifiedReal::upper() const {
    const auto [d, e] = two_sum(value_, err_);
    return e > 0 ? std::nextafter(d, kInf) : d;
}

CertifiedReal CertifiedReal::widened(double extra_err) const {
    if (!(extra_err >= 0)) throw std::invalid_argument("CertifiedReal: negative widening");
    return CertifiedReal(value_, add_up(err_, extra_err));
}

CertifiedReal operator+(const CertifiedReal& x, const CertifiedReal& y) {
    const auto [s, e] = two_sum(x.value(), y.value());
    return CertifiedReal(s, add_up(add_up(x.err(), y.err()), std::fabs(e)));
}

CertifiedReal operator-(const CertifiedReal& x) { return CertifiedReal(-x.value(), x.err()); }

CertifiedReal operator-(const CertifiedReal& x, const CertifiedReal& y) { return x + (-y); }

CertifiedReal operator*(const CertifiedReal& x, const CertifiedReal& y) {
    const double p = x.value() * y.value();
    const double rounding = std::fabs(std::fma(x.value(), y.value(), -p));
    double err = mul_up(std::fabs(x.value()), y.err());
    err = add_up(err, mul_up(std::fabs(y.value()), x.err()));
    err = add_up(err, mul_up(x.err(), y.err()));
    err = add_up(err, rounding);
    return CertifiedReal(p, err);
}

CertifiedReal operator/(const CertifiedReal& x, const CertifiedReal& y) {
    if (!(y.lower() > 0 || y.upper() < 0))
        throw std::domain_error("CertifiedReal: divisor interval contains zero");
    const double yv = std::fabs(y.value());
    const double q = x.value() / y.value();
    const double rem = std::fabs(std::fma(-q, y.value(), x.value()));
    // |Y| >= |yv| - ye, rounded down.
    const double y_min = CertifiedReal(yv, y.err()).lower();
    const double num = add_up(mul_up(x.err(), yv), mul_up(std::fabs(x.value()), y.err()));
    double err = div_up(div_up(num, y_min), yv);
    err = add_up(err, div_up(rem, yv));
    return CertifiedReal(q, err);
}

CertifiedReal scale(const CertifiedReal& x, std::int64_t k) {
    constexpr std::int64_t kExactLimit = std::int64_t{1} << 53;
    if (k > kExactLimit || k < -kExactLimit)
        throw std::overflow_error("scale: multiplier not exactly representable");
    return x * CertifiedReal::exact(static_cast<double>(k));
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::CertainLess: return "CERTAIN_LESS";
        case Verdict::CertainGreater: return "CERTAIN_GREATER";
        case Verdict::Indeterminate: return "INDETERMINATE";
    }
    return "INDETERMINATE";
}

Verdict cert_compare(const CertifiedReal& x, const CertifiedReal& y) {
    if (x.upper() < y.lower()) return Verdict::CertainLess;
    if (y.upper() < x.lower()) return Verdict::CertainGreater;
    return Verdict::Indeterminate;
}

CertifiedReal log_real(double x) {
    if (!(x > 0) || !std::isfinite(x)) throw std::domain_error("log_real: argument must be positive");
    if (x == 1.0) return CertifiedReal::exact(0.0);
    const double v = std::log(x);
    return CertifiedReal(v, mul_up(kLogErrorFactor * kUnitRoundoff, std::fabs(v)));
}

CertifiedReal log_nat(std::uint64_t k) {
    if (k == 0) throw std::domain_error("log_nat: log 0 is undefined");
    constexpr std::uint64_t kExactLimit = std::uint64_t{1} << 53;
    CertifiedReal r = log_real(static_cast<double>(k));
    // Relative conversion error of k is at most u, hence absolute log error <= ~u.
    if (k > kExactLimit) r = r.widened(2 * kUnitRoundoff);
    return r;
}

CertifiedReal sqrt_nat(std::uint64_t k) {
    constexpr std::uint64_t kExactLimit = std::uint64_t{1} << 53;
    const double kd = static_cast<double>(k);
    const double v = std::sqrt(kd);
    const bool exact_input = k <= kExactLimit;
    if (exact_input && std::fma(v, v, -kd) == 0) return CertifiedReal::exact(v);
    double err = mul_up(kUnitRoundoff, v);
    if (!exact_input) err = add_up(err, mul_up(kUnitRoundoff, v));
    return CertifiedReal(v, err);
}

void ExactSum::add(const CertifiedReal& x) {
    if (std::fabs(x.value()) > kMaxTermMagnitude || x.err() > kMaxTermMagnitude)
        throw std::overflow_error("ExactSum: term magnitude out of range");
    const double scaled = std::ldexp(x.value(), kFractionBits);
    const double rounded = std::nearbyint(scaled);
    value_units_ = checked_add(value_units_, static_cast<Int128>(rounded));
    Int128 err = static_cast<Int128>(std::ceil(std::ldexp(x.err(), kFractionBits)));
    if (rounded != scaled) err += 1;
    err_units_ = checked_add(err_units_, err);
}

void ExactSum::add(const ExactSum& other, std::int64_t multiplicity) {
    const Int128 m = multiplicity;
    value_units_ = checked_add(value_units_, checked_mul(other.value_units_, m));
    err_units_ = checked_add(err_units_, checked_mul(other.err_units_, abs128(m)));
}

CertifiedReal ExactSum::result() const {
    const double v = static_cast<double>(value_units_);
    const Int128 residual = abs128(value_units_ - static_cast<Int128>(v));
    const Int128 total_err = checked_add(err_units_, residual);
    double e = static_cast<double>(total_err);
    if (static_cast<Int128>(e) < total_err) e = std::nextafter(e, kInf);
    return CertifiedReal(std::ldexp(v, -kFractionBits), std::ldexp(e, -kFractionBits));
}

CertifiedReal cert_sum(std::span<const CertifiedReal> terms) {
    if (terms.size() == 1) return terms.front();
    ExactSum acc;
    for (const auto& t : terms) acc.add(t);
    return acc.result();
}

}  // namespace bertrand
