#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "spncov/rational.hpp"

namespace spncov {

// Element a + b*phi of Z[phi], phi = (1+sqrt5)/2, with phi^2 = phi + 1.
// The (1, phi) basis keeps every product integral.
struct GoldenInteger {
    mpz_class a;
    mpz_class b;

    GoldenInteger() : a(0), b(0) {}
    GoldenInteger(long n) : a(n), b(0) {}
    GoldenInteger(mpz_class a_, mpz_class b_) : a(std::move(a_)), b(std::move(b_)) {}

    static GoldenInteger phi() { return {0, 1}; }

    bool is_zero() const { return a == 0 && b == 0; }

    friend GoldenInteger operator+(const GoldenInteger& u, const GoldenInteger& v) {
        return {u.a + v.a, u.b + v.b};
    }
    friend GoldenInteger operator-(const GoldenInteger& u, const GoldenInteger& v) {
        return {u.a - v.a, u.b - v.b};
    }
    GoldenInteger operator-() const { return {-a, -b}; }
    friend GoldenInteger operator*(const GoldenInteger& u, const GoldenInteger& v) {
        // (a1 + b1 phi)(a2 + b2 phi) = a1 a2 + b1 b2 + (a1 b2 + a2 b1 + b1 b2) phi
        return {u.a * v.a + u.b * v.b, u.a * v.b + u.b * v.a + u.b * v.b};
    }

    // Galois conjugate: phi -> 1 - phi.
    GoldenInteger conjugate() const { return {a + b, -b}; }

    friend bool operator==(const GoldenInteger&, const GoldenInteger&) = default;

    std::string to_string() const;
};

// Field norm N(a + b phi) = (a + b phi)(a + b(1-phi)) = a^2 + ab - b^2.
mpz_class golden_norm(const GoldenInteger& x);

// Unit iff the norm is +-1.
bool is_golden_unit(const GoldenInteger& x);

// Euclidean division x = q*y + r with |N(r)| < |N(y)|, by rounding both
// coefficients of x * conj(y) / N(y) to nearest integers. Nearest rounding
// keeps |N(r)| <= (5/16)|N(y)|, so Z[phi] is Euclidean for this divmod.
GoldenInteger golden_divmod(const GoldenInteger& x, const GoldenInteger& y, GoldenInteger& rem);

// Element a + b*phi of Q(sqrt5) with exact rational coefficients.
struct GoldenRational {
    ExactRational a;
    ExactRational b;

    GoldenRational() = default;
    GoldenRational(long n) : a(n) {}
    GoldenRational(ExactRational a_) : a(std::move(a_)) {}
    GoldenRational(ExactRational a_, ExactRational b_) : a(std::move(a_)), b(std::move(b_)) {}
    GoldenRational(const GoldenInteger& g) : a(g.a), b(g.b) {}

    static GoldenRational phi() { return {ExactRational(0), ExactRational(1)}; }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_integral() const { return a.is_integer() && b.is_integer(); }

    friend GoldenRational operator+(const GoldenRational& u, const GoldenRational& v) {
        return {u.a + v.a, u.b + v.b};
    }
    friend GoldenRational operator-(const GoldenRational& u, const GoldenRational& v) {
        return {u.a - v.a, u.b - v.b};
    }
    GoldenRational operator-() const { return {-a, -b}; }
    friend GoldenRational operator*(const GoldenRational& u, const GoldenRational& v) {
        return {u.a * v.a + u.b * v.b, u.a * v.b + u.b * v.a + u.b * v.b};
    }

    GoldenRational conjugate() const { return {a + b, -b}; }

    // a^2 + ab - b^2; zero only for the zero element.
    ExactRational norm() const { return a * a + a * b - b * b; }

    GoldenRational inverse() const {
        if (is_zero()) throw std::invalid_argument("GoldenRational: division by zero");
        ExactRational n = norm();
        GoldenRational c = conjugate();
        return {c.a / n, c.b / n};
    }
    friend GoldenRational operator/(const GoldenRational& u, const GoldenRational& v) {
        return u * v.inverse();
    }

    friend bool operator==(const GoldenRational&, const GoldenRational&) = default;

    std::string to_string() const;
};

}  // namespace spncov
