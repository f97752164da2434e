#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace spncov {

// Arbitrary-precision signed rational. Always stored reduced with a positive
// denominator, so equality is plain representation equality.
class ExactRational {
public:
    ExactRational() : v_(0) {}
    ExactRational(long n) : v_(n) {}
    ExactRational(const mpz_class& n) : v_(n) {}
    ExactRational(const mpz_class& num, const mpz_class& den);
    ExactRational(long num, long den);

    // Accepts "p", "-p", "p/q" with optional sign on p; q > 0 required.
    static ExactRational parse(const std::string& s);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    ExactRational operator-() const;
    ExactRational& operator+=(const ExactRational& o);
    ExactRational& operator-=(const ExactRational& o);
    ExactRational& operator*=(const ExactRational& o);
    ExactRational& operator/=(const ExactRational& o);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return cmp(a.v_, b.v_) == 0;
    }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    ExactRational abs() const;
    // Integer exponent; negative exponents invert (zero base rejected).
    ExactRational pow(long e) const;
    // Largest integer <= value.
    mpz_class floor() const;

    // "67/24192000", "-3", "0"
    std::string to_string() const;

private:
    mpq_class v_;
};

// Scientific-notation rendering of r truncated toward zero to sig_figs digits,
// computed by integer long division only. Always carries an exponent marker:
// "1.808e-5", "5.000e-1", "1.736e8", "3.162e0"; zero renders as "0".
std::string approx_decimal(const ExactRational& r, unsigned sig_figs);

// approx_decimal with a trailing "e0" stripped, which is the display form used
// in tables and result records ("3.162" instead of "3.162e0").
std::string approx_display(const ExactRational& r, unsigned sig_figs);

}  // namespace spncov
