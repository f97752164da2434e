#pragma once

#include "spncov/rational.hpp"

namespace spncov {

// Parahoric kinds carried by the covolume formulas. The two special kinds are
// the maximal-volume choices at a ramified place; ALPHA1 exists only for odd n.
enum class ParahoricType { HYPERSPECIAL, SPECIAL_ALPHA0, SPECIAL_ALPHA1 };

// Finite reductive group shapes whose orders enter the local factors.
struct FiniteGroupKind {
    enum class Series { SPLIT_C, UNITARY_2A, NONSPLIT_TORUS_DIM1 };

    Series series;
    long rank;    // SPLIT_C: Sp_{2r}; UNITARY_2A: SU_r; ignored for the torus
    mpz_class q;  // residue field size, a prime power >= 2

    static FiniteGroupKind split_c(long rank, const mpz_class& q) {
        return {Series::SPLIT_C, rank, q};
    }
    static FiniteGroupKind unitary_2a(long rank, const mpz_class& q) {
        return {Series::UNITARY_2A, rank, q};
    }
    static FiniteGroupKind nonsplit_torus(const mpz_class& q) {
        return {Series::NONSPLIT_TORUS_DIM1, 1, q};
    }
};

// Throws unless q is a prime power >= 2 (checked by explicit factorization).
void require_prime_power(const mpz_class& q);

// |Sp_{2r}(F_q)| = q^{r^2} prod_{j=1..r} (q^{2j}-1)
// |SU_r(F_q)|    = q^{r(r-1)/2} prod_{j=2..r} (q^j - (-1)^j)
// torus          = q + 1
mpz_class group_order(const FiniteGroupKind& kind);

// e'(P^0) = prod_{j=1..n+1} (q^j + (-1)^j); valid for all n >= 2.
mpz_class e_prime_alpha0(const mpz_class& q, long n);

// e'(P^1) = prod_{j=1..2m} (q^{2j}-1) / prod_{j=1..m} (q^{4j}-1), n+1 = 2m;
// the division is exact. Requires odd n >= 3.
mpz_class e_prime_alpha1(const mpz_class& q, long n);

// Independent assembly of e'(P) from its definition
// q^((dim Mbar - dim Mhat)/2) * |Mhat(f)| / |Mbar(f)|, with
//   dim Mhat = (n+1)(2n+3),  |Mhat| = |Sp_{2(n+1)}(F_q)|,
//   alpha0:  dim Mbar = (n+1)^2,   |Mbar| = (q+1) |SU_{n+1}(F_q)|,
//   alpha1:  dim Mbar = 2m(2m+1),  |Mbar| = |Sp_{2m}(F_{q^2})|.
// Serves as the oracle for the closed forms above.
ExactRational e_prime_from_definition(const mpz_class& q, long n, ParahoricType type);

}  // namespace spncov
