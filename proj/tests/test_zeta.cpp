#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spncov/zeta.hpp"

using spncov::ExactRational;
using spncov::QuadraticCharacter;
using spncov::QuadraticFieldData;

TEST_CASE("fundamental discriminant recognition") {
    CHECK(spncov::is_fundamental_discriminant(5));
    CHECK(spncov::is_fundamental_discriminant(8));
    CHECK(spncov::is_fundamental_discriminant(12));
    CHECK(spncov::is_fundamental_discriminant(13));
    CHECK(!spncov::is_fundamental_discriminant(49));  // 7^2 is not squarefree
    CHECK(!spncov::is_fundamental_discriminant(1));
    CHECK(!spncov::is_fundamental_discriminant(9));
    CHECK(!spncov::is_fundamental_discriminant(20));
    CHECK(!spncov::is_fundamental_discriminant(45));
    CHECK_THROWS_AS(QuadraticFieldData::real_quadratic(20), std::invalid_argument);
    CHECK_THROWS_AS(QuadraticCharacter(9), std::invalid_argument);
}

TEST_CASE("field data constants") {
    auto q = QuadraticFieldData::rationals();
    CHECK(q.degree == 1);
    CHECK(q.discriminant == 1);
    CHECK(q.class_number == 1);
    CHECK(q.tp_units_mod_squares == 1);
    auto k5 = QuadraticFieldData::real_quadratic(5);
    CHECK(k5.degree == 2);
    CHECK(k5.discriminant == 5);
    CHECK(k5.class_number == 1);
    CHECK(k5.tp_units_mod_squares == 1);
    // unlisted field: zeta machinery works, unit data marked unrecorded
    auto k8 = QuadraticFieldData::real_quadratic(8);
    CHECK(k8.class_number == 0);
}

TEST_CASE("character mod 5 value table and structure") {
    QuadraticCharacter chi(5);
    CHECK(chi(1) == 1);
    CHECK(chi(2) == -1);
    CHECK(chi(3) == -1);
    CHECK(chi(4) == 1);
    CHECK(chi(5) == 0);
    for (long a = 1; a <= 50; ++a) CHECK(chi(a) == chi(a + 5));  // periodicity
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> d(1, 100000);
    for (int i = 0; i < 200; ++i) {
        long a = d(rng), b = d(rng);
        CHECK(chi(a) * chi(b) == chi(mpz_class(a) * b));  // complete multiplicativity
        CHECK((chi(a) == 0) == (a % 5 == 0));
    }
}

TEST_CASE("riemann zeta at negative odd integers") {
    CHECK(spncov::riemann_zeta_neg(1) == ExactRational(-1, 12));
    CHECK(spncov::riemann_zeta_neg(2) == ExactRational(1, 120));
    CHECK(spncov::riemann_zeta_neg(3) == ExactRational(-1, 252));
    for (unsigned long j = 1; j <= 30; ++j) {
        int expected_sign = (j % 2 == 0) ? 1 : -1;
        CHECK(spncov::riemann_zeta_neg(j).sign() == expected_sign);
    }
}

TEST_CASE("generalized Bernoulli numbers for chi_5") {
    QuadraticCharacter chi(5);
    CHECK(spncov::generalized_bernoulli(1, chi) == ExactRational(0));
    CHECK(spncov::generalized_bernoulli(2, chi) == ExactRational(4, 5));
    CHECK(spncov::generalized_bernoulli(4, chi) == ExactRational(-8));
    // chi_5 is even, so odd-index values vanish
    for (unsigned long n = 1; n <= 19; n += 2)
        CHECK(spncov::generalized_bernoulli(n, chi).is_zero());
}

TEST_CASE("Dirichlet L values for chi_5") {
    QuadraticCharacter chi(5);
    CHECK(spncov::dirichlet_L_neg(1, chi) == ExactRational(0));
    CHECK(spncov::dirichlet_L_neg(2, chi) == ExactRational(-2, 5));
    CHECK(spncov::dirichlet_L_neg(4, chi) == ExactRational(2));
}

TEST_CASE("Dedekind zeta values over Q(sqrt5)") {
    auto k = QuadraticFieldData::real_quadratic(5);
    CHECK(spncov::dedekind_zeta_neg(k, 1) == ExactRational(1, 30));
    CHECK(spncov::dedekind_zeta_neg(k, 2) == ExactRational(1, 60));
    CHECK(spncov::dedekind_zeta_neg(k, 3) == ExactRational(67, 630));
    CHECK(spncov::dedekind_zeta_neg(k, 4) == ExactRational(361, 120));
    for (unsigned long j = 1; j <= 15; ++j)
        CHECK(spncov::dedekind_zeta_neg(k, j) > ExactRational(0));
    CHECK(spncov::dedekind_zeta_neg(QuadraticFieldData::rationals(), 1) == ExactRational(-1, 12));
}

TEST_CASE("zeta product reproduces exact uniform covolume cells") {
    // (n+1) * prod_{j<=n+1} zeta_k(1-2j)/4 against the frozen exact values;
    // this anchors the whole L-value chain.
    auto k = QuadraticFieldData::real_quadratic(5);
    auto chi_delta = [&](long n) {
        ExactRational prod(static_cast<long>(n) + 1);
        for (unsigned long j = 1; j <= static_cast<unsigned long>(n) + 1; ++j)
            prod *= spncov::dedekind_zeta_neg(k, j) / ExactRational(4);
        return prod;
    };
    ExactRational d2 = ExactRational(67) /
        (ExactRational(2).pow(10) * ExactRational(3).pow(3) * ExactRational(5).pow(3) * ExactRational(7));
    ExactRational d3 = ExactRational(19L * 19L * 67L) /
        (ExactRational(2).pow(13) * ExactRational(3).pow(5) * ExactRational(5).pow(4) * ExactRational(7));
    ExactRational d4 = ExactRational(mpz_class(19) * 19 * 67 * 191 * 2161) /
        (ExactRational(2).pow(18) * ExactRational(3).pow(6) * ExactRational(5).pow(5) *
         ExactRational(7) * ExactRational(11));
    CHECK(chi_delta(2) == d2);
    CHECK(chi_delta(3) == d3);
    CHECK(chi_delta(4) == d4);
}
