#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spncov/bernoulli.hpp"
#include "spncov/factored.hpp"
#include "spncov/rational.hpp"

using spncov::ExactRational;
using spncov::FactoredRational;

TEST_CASE("rational normalization and accessors") {
    ExactRational r(mpz_class(6), mpz_class(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.sign() == -1);
    CHECK(!r.is_integer());
    CHECK(ExactRational(10, 5).is_integer());
    CHECK(ExactRational(0).is_zero());
    CHECK_THROWS_AS(ExactRational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
    ExactRational a(1, 6), b(1, 10);
    CHECK(a + b == ExactRational(4, 15));
    CHECK(a - b == ExactRational(1, 15));
    CHECK(a * b == ExactRational(1, 60));
    CHECK(a / b == ExactRational(5, 3));
    CHECK(-a == ExactRational(-1, 6));
    CHECK_THROWS_AS(a / ExactRational(0), std::domain_error);
    CHECK(a < b * ExactRational(2));
    CHECK(ExactRational(-1, 2) < ExactRational(1, 3));
}

TEST_CASE("rational pow, abs, floor") {
    CHECK(ExactRational(2, 3).pow(3) == ExactRational(8, 27));
    CHECK(ExactRational(2, 3).pow(-2) == ExactRational(9, 4));
    CHECK(ExactRational(5).pow(0) == ExactRational(1));
    CHECK_THROWS_AS(ExactRational(0).pow(-1), std::domain_error);
    CHECK(ExactRational(-7, 2).abs() == ExactRational(7, 2));
    CHECK(ExactRational(7, 2).floor() == 3);
    CHECK(ExactRational(-7, 2).floor() == -4);
    CHECK(ExactRational(6, 3).floor() == 2);
}

TEST_CASE("rational parse and to_string") {
    CHECK(ExactRational::parse("67/24192000") == ExactRational(67, 24192000));
    CHECK(ExactRational::parse("-3") == ExactRational(-3));
    CHECK(ExactRational::parse("-3/6").to_string() == "-1/2");
    CHECK(ExactRational(67, 24192000).to_string() == "67/24192000");
    CHECK(ExactRational(4, 2).to_string() == "2");
    CHECK_THROWS_AS(ExactRational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(ExactRational::parse("abc"), std::invalid_argument);
}

TEST_CASE("approx_decimal pinned renderings") {
    CHECK(spncov::approx_decimal(ExactRational(1, 55296), 4) == "1.808e-5");
    CHECK(spncov::approx_decimal(ExactRational(1, 2), 4) == "5.000e-1");
    CHECK(spncov::approx_decimal(ExactRational(67, 24192000), 4) == "2.769e-6");
    CHECK(spncov::approx_decimal(ExactRational(0), 4) == "0");
    CHECK(spncov::approx_decimal(ExactRational(-1, 3), 3) == "-3.33e-1");
    CHECK(spncov::approx_decimal(ExactRational(173600000), 4) == "1.736e8");
    CHECK(spncov::approx_decimal(ExactRational(2), 1) == "2e0");
    CHECK(spncov::approx_display(ExactRational(316227, 100000), 4) == "3.162");
    CHECK(spncov::approx_display(ExactRational(1, 2), 4) == "5.000e-1");
}

TEST_CASE("approx_decimal truncates toward zero") {
    // 2.7695... must stay 2.769 at four digits, never round up.
    CHECK(spncov::approx_decimal(ExactRational(27695, 10000), 4) == "2.769e0");
    CHECK(spncov::approx_decimal(ExactRational(19999, 10000), 4) == "1.999e0");
    CHECK(spncov::approx_decimal(ExactRational(-27695, 10000), 4) == "-2.769e0");
}

TEST_CASE("approx_decimal guard-digit stability") {
    // Truncating an s+10 digit rendering to s digits matches the s digit one.
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<long> numd(1, 1000000000L);
    std::uniform_int_distribution<long> dend(1, 1000000000L);
    for (int i = 0; i < 500; ++i) {
        ExactRational r(numd(rng), dend(rng));
        if (rng() % 2) r = -r;
        std::string s4 = spncov::approx_decimal(r, 4);
        std::string s14 = spncov::approx_decimal(r, 14);
        // mantissa of s14 truncated to the mantissa length of s4
        auto mant = [](const std::string& s) { return s.substr(0, s.find('e')); };
        auto expo = [](const std::string& s) { return s.substr(s.find('e')); };
        std::string m14 = mant(s14);
        std::string m4 = mant(s4);
        CHECK(m14.substr(0, m4.size()) == m4);
        CHECK(expo(s14) == expo(s4));
    }
}

TEST_CASE("bernoulli pinned values") {
    CHECK(spncov::bernoulli(0) == ExactRational(1));
    CHECK(spncov::bernoulli(1) == ExactRational(-1, 2));
    CHECK(spncov::bernoulli(2) == ExactRational(1, 6));
    CHECK(spncov::bernoulli(3) == ExactRational(0));
    CHECK(spncov::bernoulli(4) == ExactRational(-1, 30));
    CHECK(spncov::bernoulli(6) == ExactRational(1, 42));
    CHECK(spncov::bernoulli(8) == ExactRational(-1, 30));
    CHECK(spncov::bernoulli(12) == ExactRational(-691, 2730));
    for (unsigned long m = 3; m <= 41; m += 2) CHECK(spncov::bernoulli(m).is_zero());
}

TEST_CASE("bernoulli against the double-sum oracle") {
    // B_m = sum_{k<=m} 1/(k+1) sum_{j<=k} (-1)^j C(k,j) j^m, with 0^0 = 1.
    auto oracle = [](unsigned long m) {
        ExactRational total(0);
        for (unsigned long k = 0; k <= m; ++k) {
            ExactRational inner(0);
            for (unsigned long j = 0; j <= k; ++j) {
                mpz_class c, jm;
                mpz_bin_uiui(c.get_mpz_t(), k, j);
                if (j == 0)
                    jm = (m == 0) ? 1 : 0;
                else
                    mpz_ui_pow_ui(jm.get_mpz_t(), j, m);
                ExactRational term = ExactRational(c * jm);
                inner += (j % 2 == 0) ? term : -term;
            }
            total += inner / ExactRational(static_cast<long>(k) + 1);
        }
        return total;
    };
    for (unsigned long m = 0; m <= 60; ++m) CHECK(spncov::bernoulli(m) == oracle(m));
}

TEST_CASE("bernoulli polynomial identities") {
    CHECK(spncov::bernoulli_poly(1, ExactRational(0)) == ExactRational(-1, 2));
    CHECK(spncov::bernoulli_poly(2, ExactRational(1, 2)) == ExactRational(-1, 12));
    for (unsigned long n = 0; n <= 12; ++n)
        CHECK(spncov::bernoulli_poly(n, ExactRational(0)) == spncov::bernoulli(n));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coeff(-50, 50);
    for (int i = 0; i < 50; ++i) {
        long p = coeff(rng);
        long q = 1 + std::abs(coeff(rng));
        ExactRational x(p, q);
        unsigned long n = 1 + (rng() % 10);
        // B_n(x+1) - B_n(x) = n x^(n-1)
        ExactRational lhs = spncov::bernoulli_poly(n, x + ExactRational(1)) -
                            spncov::bernoulli_poly(n, x);
        ExactRational rhs = ExactRational(static_cast<long>(n)) * x.pow(static_cast<long>(n) - 1);
        CHECK(lhs == rhs);
        // B_n(1-x) = (-1)^n B_n(x)
        ExactRational refl = spncov::bernoulli_poly(n, ExactRational(1) - x);
        ExactRational sym = spncov::bernoulli_poly(n, x);
        CHECK(refl == (n % 2 == 0 ? sym : -sym));
    }
}

TEST_CASE("factorize pinned examples") {
    FactoredRational f = spncov::factorize(ExactRational(1, 55296));
    CHECK(f.sign() == 1);
    CHECK(f.factors() == std::map<mpz_class, long>{{2, -11}, {3, -3}});

    CHECK(spncov::factorize(ExactRational(1)) == FactoredRational::one());
    FactoredRational g = spncov::factorize(ExactRational(-12));
    CHECK(g.sign() == -1);
    CHECK(g.factors() == std::map<mpz_class, long>{{2, 2}, {3, 1}});
    CHECK(spncov::factorize(ExactRational(0)).sign() == 0);
}

TEST_CASE("factored display form") {
    ExactRational v = ExactRational(17 * 31) /
                      (ExactRational(2).pow(19) * ExactRational(3).pow(6) * ExactRational(11));
    CHECK(spncov::factorize(v).to_string() == "17·31/(2^19·3^6·11)");
    CHECK(spncov::factorize(ExactRational(1)).to_string() == "1");
    CHECK(spncov::factorize(ExactRational(-12)).to_string() == "-2^2·3");
    CHECK(spncov::factorize(ExactRational(0)).to_string() == "0");
    CHECK(spncov::factorize(ExactRational(1, 55296)).to_string() == "1/(2^11·3^3)");
}

TEST_CASE("factorize round trip on randomized smooth rationals") {
    std::mt19937_64 rng(424242);
    const long pool[] = {2, 3, 5, 7, 11, 13, 17, 19, 67, 691, 2161, 104729};
    std::uniform_int_distribution<int> pick(0, std::size(pool) - 1);
    std::uniform_int_distribution<int> expo(1, 12);
    for (int i = 0; i < 100; ++i) {
        ExactRational r(1);
        for (int j = 0; j < 6; ++j) {
            ExactRational p(pool[pick(rng)]);
            int e = expo(rng);
            r *= (rng() % 2) ? p.pow(e) : p.pow(-e);
        }
        if (rng() % 2) r = -r;
        FactoredRational f = spncov::factorize(r);
        CHECK(f.to_rational() == r);
        // factorize of the reconstruction is the identity on the factored form
        CHECK(spncov::factorize(f.to_rational()) == f);
    }
}

TEST_CASE("factored arithmetic") {
    FactoredRational a = spncov::factorize(ExactRational(12));
    FactoredRational b = spncov::factorize(ExactRational(18));
    CHECK((a * b).to_rational() == ExactRational(216));
    CHECK((a / b).to_rational() == ExactRational(2, 3));
    CHECK(a.pow(3).to_rational() == ExactRational(1728));
    CHECK(a.pow(0).to_rational() == ExactRational(1));
    CHECK(a.pow(-1).to_rational() == ExactRational(1, 12));
    FactoredRational neg = spncov::factorize(ExactRational(-2));
    CHECK(neg.pow(2).sign() == 1);
    CHECK(neg.pow(3).sign() == -1);
}

TEST_CASE("factorization envelope and splitting") {
    // Semiprime near 1e18 splits via the rho stage.
    mpz_class p1("1000000007"), p2("999999937");
    auto f = spncov::factor_integer(p1 * p2);
    CHECK(f == std::map<mpz_class, long>{{p2, 1}, {p1, 1}});

    // A composite cofactor beyond 1e40 raises the distinct error.
    mpz_class q1, q2;
    mpz_ui_pow_ui(q1.get_mpz_t(), 10, 21);
    mpz_nextprime(q1.get_mpz_t(), q1.get_mpz_t());
    mpz_nextprime(q2.get_mpz_t(), q1.get_mpz_t());
    CHECK_THROWS_AS(spncov::factor_integer(q1 * q2), spncov::UnfactoredCofactor);

    // A large prime is fine.
    CHECK(spncov::factor_integer(q1) == std::map<mpz_class, long>{{q1, 1}});
}

TEST_CASE("primality spot checks") {
    CHECK(spncov::is_prime(2));
    CHECK(spncov::is_prime(104729));
    CHECK(spncov::is_prime(mpz_class("1000000000000000003")));
    CHECK(!spncov::is_prime(1));
    CHECK(!spncov::is_prime(104729L * 104729L));
    CHECK(!spncov::is_prime(mpz_class("3215031751")));  // strong pseudoprime to bases 2,3,5,7
}
