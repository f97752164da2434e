#pragma once

#include <string>

#include "spncov/rational.hpp"

namespace spncov {

// Certified real number: an exact rational interval [lo, hi] containing the
// true value, with endpoints rounded outward to the absolute grid 2^-prec
// after every operation (which keeps denominators from compounding). All the
// minimality inequalities verified with this type are far from tight, so an
// absolute grid at 128 bits leaves enormous margin; quantities smaller than
// 2^-prec would lose relative precision, and callers working near that scale
// should raise prec.
class HighPrecisionReal {
public:
    static constexpr unsigned kDefaultPrecision = 128;

    HighPrecisionReal() : lo_(0), hi_(0), prec_(kDefaultPrecision) {}
    explicit HighPrecisionReal(const ExactRational& x, unsigned prec = kDefaultPrecision);
    HighPrecisionReal(const ExactRational& lo, const ExactRational& hi, unsigned prec);

    // Enclosure of pi via Machin's formula 16 atan(1/5) - 4 atan(1/239),
    // bracketing each arctangent by consecutive alternating partial sums.
    static HighPrecisionReal pi(unsigned prec = kDefaultPrecision);

    // Enclosure of sqrt(x) for x >= 0, by integer square-root bracketing.
    static HighPrecisionReal sqrt_of(const ExactRational& x, unsigned prec = kDefaultPrecision);

    const ExactRational& lo() const { return lo_; }
    const ExactRational& hi() const { return hi_; }
    unsigned precision() const { return prec_; }
    ExactRational width() const { return hi_ - lo_; }
    bool contains(const ExactRational& x) const { return lo_ <= x && x <= hi_; }

    HighPrecisionReal operator-() const;
    friend HighPrecisionReal operator+(const HighPrecisionReal& a, const HighPrecisionReal& b);
    friend HighPrecisionReal operator-(const HighPrecisionReal& a, const HighPrecisionReal& b);
    friend HighPrecisionReal operator*(const HighPrecisionReal& a, const HighPrecisionReal& b);
    // Divisor interval must not contain zero.
    friend HighPrecisionReal operator/(const HighPrecisionReal& a, const HighPrecisionReal& b);

    HighPrecisionReal pow_int(long e) const;
    HighPrecisionReal sqrt() const;

    // "[1.901e-7, 1.903e-7]"
    std::string to_string(unsigned sig_figs = 6) const;

private:
    ExactRational lo_;
    ExactRational hi_;
    unsigned prec_;

    HighPrecisionReal rounded() const;
};

// Certified strict comparison: true when a < b holds with disjoint intervals,
// false when a > b holds the same way; overlapping enclosures throw, so no
// verdict is ever produced from an undecided comparison.
bool certified_less(const HighPrecisionReal& a, const HighPrecisionReal& b);
inline bool certified_greater(const HighPrecisionReal& a, const HighPrecisionReal& b) {
    return certified_less(b, a);
}

}  // namespace spncov
