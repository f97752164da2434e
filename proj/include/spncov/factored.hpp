#pragma once

#include <map>

#include "spncov/rational.hpp"

namespace spncov {

// Raised when a cofactor survives trial division and exceeds the guaranteed
// factorization envelope, instead of stalling on a hard factorization.
class UnfactoredCofactor : public std::runtime_error {
public:
    explicit UnfactoredCofactor(const mpz_class& c)
        : std::runtime_error("unfactored cofactor " + c.get_str()), cofactor_(c) {}
    const mpz_class& cofactor() const { return cofactor_; }

private:
    mpz_class cofactor_;
};

// sign * product of p^e over the factor map. Zero is sign 0 with an empty map.
class FactoredRational {
public:
    FactoredRational() : sign_(0) {}
    FactoredRational(int sign, std::map<mpz_class, long> factors);

    static FactoredRational one() { return FactoredRational(1, {}); }

    int sign() const { return sign_; }
    const std::map<mpz_class, long>& factors() const { return factors_; }

    ExactRational to_rational() const;

    // Display form: "17·31/(2^19·3^6·11)", "1", "-12", "0".
    std::string to_string() const;

    FactoredRational& operator*=(const FactoredRational& o);
    FactoredRational& operator/=(const FactoredRational& o);
    friend FactoredRational operator*(FactoredRational a, const FactoredRational& b) { return a *= b; }
    friend FactoredRational operator/(FactoredRational a, const FactoredRational& b) { return a /= b; }
    FactoredRational pow(long e) const;

    friend bool operator==(const FactoredRational& a, const FactoredRational& b) = default;

private:
    int sign_;
    std::map<mpz_class, long> factors_;
};

// Primality: deterministic Miller-Rabin below 3.317e24 (fixed bases 2..37),
// library probable-prime test beyond.
bool is_prime(const mpz_class& n);

// Factors n >= 1 into primes. Trial division to 1e6, then deterministic
// primality plus bounded Pollard-Brent rho; a composite cofactor above 1e40
// raises UnfactoredCofactor.
std::map<mpz_class, long> factor_integer(mpz_class n);

FactoredRational factorize(const ExactRational& r);

}  // namespace spncov
