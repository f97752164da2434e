#include "spncov/interval.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace spncov {

namespace {

// Round x to the grid of multiples of 2^-prec, downward or upward.
ExactRational to_grid(const ExactRational& x, unsigned prec, bool upward) {
    mpz_class scaled_num = x.num() << prec;
    mpz_class q;
    if (upward) {
        mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.den().get_mpz_t());
    } else {
        mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.den().get_mpz_t());
    }
    mpz_class unit = mpz_class(1) << prec;
    return ExactRational(q, unit);
}

// Consecutive partial sums of the alternating series for atan(1/x) bracket
// its value; iterate until the dropped term is below 2^-(prec+8).
void atan_inv_brackets(unsigned long x, unsigned prec, ExactRational& lo, ExactRational& hi) {
    mpz_class xpow = x;
    mpz_class xsq = mpz_class(x) * x;
    mpz_class threshold = mpz_class(1) << (prec + 8);
    ExactRational sum(0);
    ExactRational prev(0);
    unsigned long k = 0;
    while (true) {
        mpz_class denom = (2 * k + 1) * xpow;
        ExactRational term(mpz_class(1), denom);
        prev = sum;
        if (k % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
        if (denom > threshold && k > 0) break;
        xpow *= xsq;
        ++k;
    }
    lo = std::min(prev, sum);
    hi = std::max(prev, sum);
}

}  // namespace

HighPrecisionReal::HighPrecisionReal(const ExactRational& x, unsigned prec)
    : lo_(x), hi_(x), prec_(prec) {}

HighPrecisionReal::HighPrecisionReal(const ExactRational& lo, const ExactRational& hi, unsigned prec)
    : lo_(lo), hi_(hi), prec_(prec) {
    if (hi < lo) throw std::invalid_argument("interval endpoints out of order");
    *this = rounded();
}

HighPrecisionReal HighPrecisionReal::rounded() const {
    HighPrecisionReal out;
    out.lo_ = to_grid(lo_, prec_, false);
    out.hi_ = to_grid(hi_, prec_, true);
    out.prec_ = prec_;
    return out;
}

HighPrecisionReal HighPrecisionReal::pi(unsigned prec) {
    static std::mutex mu;
    static std::map<unsigned, std::pair<ExactRational, ExactRational>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(prec);
    if (it == cache.end()) {
        ExactRational lo5, hi5, lo239, hi239;
        atan_inv_brackets(5, prec, lo5, hi5);
        atan_inv_brackets(239, prec, lo239, hi239);
        ExactRational sixteen(16), four(4);
        ExactRational lo = sixteen * lo5 - four * hi239;
        ExactRational hi = sixteen * hi5 - four * lo239;
        it = cache.emplace(prec, std::make_pair(lo, hi)).first;
    }
    return HighPrecisionReal(it->second.first, it->second.second, prec);
}

HighPrecisionReal HighPrecisionReal::sqrt_of(const ExactRational& x, unsigned prec) {
    if (x.sign() < 0) throw std::invalid_argument("sqrt of a negative rational");
    if (x.is_zero()) return HighPrecisionReal(ExactRational(0), prec);
    // sqrt(p/q) = sqrt(p q)/q; bracket sqrt(p q) between consecutive integers
    // after scaling by 4^m.
    mpz_class p = x.num();
    mpz_class q = x.den();
    mpz_class s = p * q;
    unsigned m = prec + 4;
    mpz_class scaled = s << (2 * m);
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
    mpz_class denom = q << m;
    return HighPrecisionReal(ExactRational(r, denom), ExactRational(r + 1, denom), prec);
}

HighPrecisionReal HighPrecisionReal::operator-() const {
    HighPrecisionReal out;
    out.lo_ = -hi_;
    out.hi_ = -lo_;
    out.prec_ = prec_;
    return out;
}

HighPrecisionReal operator+(const HighPrecisionReal& a, const HighPrecisionReal& b) {
    unsigned prec = std::min(a.prec_, b.prec_);
    return HighPrecisionReal(a.lo_ + b.lo_, a.hi_ + b.hi_, prec);
}

HighPrecisionReal operator-(const HighPrecisionReal& a, const HighPrecisionReal& b) {
    unsigned prec = std::min(a.prec_, b.prec_);
    return HighPrecisionReal(a.lo_ - b.hi_, a.hi_ - b.lo_, prec);
}

HighPrecisionReal operator*(const HighPrecisionReal& a, const HighPrecisionReal& b) {
    unsigned prec = std::min(a.prec_, b.prec_);
    ExactRational c1 = a.lo_ * b.lo_;
    ExactRational c2 = a.lo_ * b.hi_;
    ExactRational c3 = a.hi_ * b.lo_;
    ExactRational c4 = a.hi_ * b.hi_;
    ExactRational lo = std::min(std::min(c1, c2), std::min(c3, c4));
    ExactRational hi = std::max(std::max(c1, c2), std::max(c3, c4));
    return HighPrecisionReal(lo, hi, prec);
}

HighPrecisionReal operator/(const HighPrecisionReal& a, const HighPrecisionReal& b) {
    if (b.lo_.sign() <= 0 && b.hi_.sign() >= 0) {
        throw std::invalid_argument("division by an interval containing zero");
    }
    unsigned prec = std::min(a.prec_, b.prec_);
    ExactRational c1 = a.lo_ / b.lo_;
    ExactRational c2 = a.lo_ / b.hi_;
    ExactRational c3 = a.hi_ / b.lo_;
    ExactRational c4 = a.hi_ / b.hi_;
    ExactRational lo = std::min(std::min(c1, c2), std::min(c3, c4));
    ExactRational hi = std::max(std::max(c1, c2), std::max(c3, c4));
    return HighPrecisionReal(lo, hi, prec);
}

HighPrecisionReal HighPrecisionReal::pow_int(long e) const {
    if (e < 0) {
        return HighPrecisionReal(ExactRational(1), prec_) / pow_int(-e);
    }
    HighPrecisionReal out(ExactRational(1), prec_);
    HighPrecisionReal base = *this;
    unsigned long r = static_cast<unsigned long>(e);
    while (r > 0) {
        if (r & 1UL) out = out * base;
        r >>= 1UL;
        if (r > 0) base = base * base;
    }
    return out;
}

HighPrecisionReal HighPrecisionReal::sqrt() const {
    if (lo_.sign() < 0) throw std::invalid_argument("sqrt of an interval with negative part");
    HighPrecisionReal a = sqrt_of(lo_, prec_);
    HighPrecisionReal b = sqrt_of(hi_, prec_);
    return HighPrecisionReal(a.lo_, b.hi_, prec_);
}

std::string HighPrecisionReal::to_string(unsigned sig_figs) const {
    return "[" + approx_decimal(lo_, sig_figs) + ", " + approx_decimal(hi_, sig_figs) + "]";
}

bool certified_less(const HighPrecisionReal& a, const HighPrecisionReal& b) {
    if (a.hi() < b.lo()) return true;
    if (b.hi() < a.lo()) return false;
    throw std::logic_error("certified comparison on overlapping enclosures");
}

}  // namespace spncov
