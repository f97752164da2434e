#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "spncov/interval.hpp"
#include "spncov/rational.hpp"
#include "spncov/zeta.hpp"

namespace spncov {

// C(n) = prod_{j=1}^{n+1} (2j-1)! / (2 pi)^{2j}, as a certified enclosure.
// The factorial product is exact; only the power of 2 pi is an interval.
HighPrecisionReal bound_C(unsigned long n,
                          unsigned prec = HighPrecisionReal::kDefaultPrecision);

// f(n, d, D) = 1/(39 D) * (12/pi)^d * (D/5)^{(n+1)(2n+3)/2} * (C(n)/2)^{d-2}.
// A value certified above 1 rules out every totally real degree-d defining
// field of root discriminant at least D^{1/d}, because the quotient's volume
// would then exceed the group's own bound on itself. Requires n >= 2, d >= 2,
// D >= 5.
HighPrecisionReal bound_f(unsigned long n, unsigned d, const ExactRational& discriminant,
                          unsigned prec = HighPrecisionReal::kDefaultPrecision);

// a(n) = (6/pi) * C(n) * (13/2)^{delta(n)} with delta(n) = (n+1)(2n+3)/2 - 1,
// the per-degree growth factor of f along the discriminant floor (13/2)^d.
HighPrecisionReal bound_a(unsigned long n,
                          unsigned prec = HighPrecisionReal::kDefaultPrecision);

// Certifies f(n, d, D) > 1 for every D above the degree-d discriminant floor
// (13/2)^d, by evaluating the floor-substituted form
//   1/195 * (12/pi)^2 * ((13/2)^2 / 5)^{delta(n)} * a(n)^{d-2}
// and checking it exceeds 1. Requires 2 <= n <= 13 and d >= 5.
bool odlyzko_check(unsigned long n, unsigned d,
                   unsigned prec = HighPrecisionReal::kDefaultPrecision);

// Number of conjugacy classes of principal lattices with a given ramification
// set: 2^{num_ramified} * h_k * [U^+ : U^2], from the recorded field data.
// Throws when the field's class number or unit index is not recorded.
mpz_class index_bound(const QuadraticFieldData& field, unsigned num_ramified);

// Evaluators behind the constant 39 in f: the class number of a totally real
// degree-d field of discriminant D is at most 16 (pi/12)^d D, and the totally
// positive units modulo squares number at most 2^{d-1}.
HighPrecisionReal class_number_bound(unsigned d, const ExactRational& discriminant,
                                     unsigned prec = HighPrecisionReal::kDefaultPrecision);
mpz_class unit_index_bound(unsigned d);

// Audit of the two evaluators against the recorded fields, plus the constant
// chain 16 * 1.2 * 2^{d-1} <= 39 * 2^{d-2} (i.e. 38.4 <= 39) that lets f
// absorb both bounds into the single factor 1/39.
struct DerivationAudit {
    bool class_number_bounds_hold = false;
    bool unit_index_bounds_hold = false;
    bool chain_constant_dominates = false;

    bool all_passed() const {
        return class_number_bounds_hold && unit_index_bounds_hold && chain_constant_dominates;
    }
    std::string summary() const;
};
DerivationAudit f_derivation_audit(unsigned prec = HighPrecisionReal::kDefaultPrecision);

// Exact lower bound for the orbifold characteristic of any nonuniform lattice
// whose algebra ramifies exactly at the given finite places:
//   (n+1) * prod_{q in ramified} e'(P_q)/2 * prod_{j=1}^{n+1} |zeta(1-2j)|/2,
// taking at each place the smaller admissible parahoric factor. The list must
// be nonempty and consist of distinct primes.
ExactRational nonuniform_lower_bound(unsigned long n, const std::vector<mpz_class>& ramified);

// Confirms that among the candidate primes, ramification exactly at 2 gives a
// strictly smaller lower bound than any other single place or pair of places.
// Exact rational comparisons throughout; the candidate list must contain 2.
bool verify_min_at_q2(unsigned long n, const std::vector<mpz_class>& candidate_primes);

}  // namespace spncov
