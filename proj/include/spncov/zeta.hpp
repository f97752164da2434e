#pragma once

#include "spncov/rational.hpp"

namespace spncov {

// Base-field data for the two fields the covolume formulas run over, plus any
// real quadratic field of fundamental discriminant for the zeta machinery.
// Class-number and totally-positive-unit data are stored verified constants:
// h = 1 for Q; for Q(sqrt5), h = 1 and the fundamental unit phi has norm -1,
// so every totally positive unit is a square and U+/U^2 is trivial (the
// quaternion module's golden_norm(phi) = -1 pins the norm fact).
struct QuadraticFieldData {
    enum class Label { RATIONALS, REAL_QUADRATIC };

    Label label;
    long discriminant;         // absolute value of the field discriminant
    int degree;                // 1 or 2
    long class_number;         // 0 marks "not recorded" for unlisted fields
    long tp_units_mod_squares; // order of U+/U^2; 0 marks "not recorded"

    static QuadraticFieldData rationals() { return {Label::RATIONALS, 1, 1, 1, 1}; }
    static QuadraticFieldData real_quadratic(long discriminant);

    friend bool operator==(const QuadraticFieldData&, const QuadraticFieldData&) = default;
};

bool is_fundamental_discriminant(long d);

// Real primitive quadratic character mod a fundamental discriminant D,
// evaluated through the Kronecker symbol (D/a).
class QuadraticCharacter {
public:
    explicit QuadraticCharacter(long fundamental_discriminant);

    long modulus() const { return d_; }
    int operator()(long a) const;
    int operator()(const mpz_class& a) const;

private:
    long d_;
};

// zeta(1-2j) = -B_{2j} / (2j)
ExactRational riemann_zeta_neg(unsigned long j);

// B_{n,chi} = D^(n-1) * sum_{a=1..D} chi(a) B_n(a/D)
ExactRational generalized_bernoulli(unsigned long n, const QuadraticCharacter& chi);

// L(1-n, chi) = -B_{n,chi} / n
ExactRational dirichlet_L_neg(unsigned long n, const QuadraticCharacter& chi);

// zeta_k(1-2j); for degree 2 this is zeta(1-2j) * L(1-2j, chi_D) and is
// strictly positive, for degree 1 it delegates to riemann_zeta_neg.
ExactRational dedekind_zeta_neg(const QuadraticFieldData& field, unsigned long j);

}  // namespace spncov
