#pragma once

// Certified real arithmetic.
//
// A CertifiedReal is a binary64 value together with an absolute error bound:
// the true quantity lies in [value - err, value + err]. All bound arithmetic
// is rounded upward, so bounds stay rigorous under round-to-nearest.

#include <cstdint>
#include <span>
#include <string_view>

namespace bertrand {

__extension__ typedef __int128 Int128;

/// Unit roundoff of binary64.
inline constexpr double kUnitRoundoff = 0x1p-53;

/// log_nat(k) is trusted to within kLogErrorFactor * u * |log k|. glibc's
/// log is documented at under 0.52 ulp, and one ulp is at most 2u|x|, so a
/// factor of 4 leaves a full ulp of slack.
inline constexpr double kLogErrorFactor = 4.0;

class CertifiedReal {
public:
    constexpr CertifiedReal() = default;

    /// Throws std::invalid_argument if value or err is not finite or err < 0.
    CertifiedReal(double value, double err);

    static CertifiedReal exact(double value) { return CertifiedReal(value, 0.0); }

    double value() const { return value_; }
    double err() const { return err_; }

    /// value - err, rounded down.
    double lower() const;
    /// value + err, rounded up.
    double upper() const;

    bool contains(double x) const { return lower() <= x && x <= upper(); }
    bool overlaps(const CertifiedReal& other) const {
        return lower() <= other.upper() && other.lower() <= upper();
    }

    /// Same value with a larger (never smaller) error bound.
    CertifiedReal widened(double extra_err) const;

private:
    double value_ = 0.0;
    double err_ = 0.0;
};

CertifiedReal operator+(const CertifiedReal& x, const CertifiedReal& y);
CertifiedReal operator-(const CertifiedReal& x, const CertifiedReal& y);
CertifiedReal operator-(const CertifiedReal& x);
CertifiedReal operator*(const CertifiedReal& x, const CertifiedReal& y);
/// Division by an interval that excludes zero; throws std::domain_error otherwise.
CertifiedReal operator/(const CertifiedReal& x, const CertifiedReal& y);

/// x * k for an integer k; exact when k is representable and no rounding occurs.
CertifiedReal scale(const CertifiedReal& x, std::int64_t k);

enum class Verdict { CertainLess, CertainGreater, Indeterminate };

std::string_view to_string(Verdict v);

/// Strict order is only certified when the intervals are disjoint. Touching
/// or overlapping intervals are Indeterminate.
Verdict cert_compare(const CertifiedReal& x, const CertifiedReal& y);

/// Natural log of a positive integer. Throws std::domain_error for k == 0.
CertifiedReal log_nat(std::uint64_t k);

/// Natural log of a positive binary64 value (treated as exact input).
CertifiedReal log_real(double x);

/// Correctly rounded square root of an integer; exact for perfect squares
/// below 2^53.
CertifiedReal sqrt_nat(std::uint64_t k);

/// Exact fixed-point accumulator.
///
/// Values are held as integer multiples of 2^-kFractionBits in 128 bits, so
/// addition is associative and the running total carries no rounding error.
/// Each added term |x| <= kMaxTermMagnitude is rounded to the grid; a term
/// that is not already on the grid adds one unit to the error budget.
/// Input error bounds are accumulated rounded up to whole units.
///
/// Resulting bound:
///   err = sum(ceil(err_i * 2^F)) * 2^-F + (#off-grid terms) * 2^-F
///         + |conversion residual|
/// where the conversion residual is the exact difference between the integer
/// total and its binary64 image. Any binary64 with |x| >= 2^-8 is on the grid
/// (F = 60), which covers every log of an integer >= 2.
class ExactSum {
public:
    static constexpr int kFractionBits = 60;
    static constexpr double kMaxTermMagnitude = 0x1p40;

    ExactSum() = default;

    /// Throws std::overflow_error if the term or the running total leaves
    /// the representable range.
    void add(const CertifiedReal& x);
    /// Adds multiplicity copies of another sum (negative multiplicity
    /// subtracts). Exact.
    void add(const ExactSum& other, std::int64_t multiplicity = 1);

    CertifiedReal result() const;

    Int128 value_units() const { return value_units_; }
    Int128 err_units() const { return err_units_; }

    friend bool operator==(const ExactSum&, const ExactSum&) = default;

private:
    Int128 value_units_ = 0;
    Int128 err_units_ = 0;
};

/// Sums terms in the given order. A single term is returned unchanged.
CertifiedReal cert_sum(std::span<const CertifiedReal> terms);

namespace detail {
// Rounded-up arithmetic on non-negative error bounds.
double add_up(double a, double b);
double mul_up(double a, double b);
double div_up(double a, double b);
}  // namespace detail

}  // namespace bertrand
