#include "spncov/local_factors.hpp"

#include "spncov/factored.hpp"

namespace spncov {

namespace {

mpz_class zpow(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

void require_rank(long r) {
    if (r < 1) throw std::invalid_argument("group_order: rank must be >= 1");
}

}  // namespace

void require_prime_power(const mpz_class& q) {
    if (q < 2) throw std::invalid_argument("residue size must be >= 2");
    auto f = factor_integer(q);
    if (f.size() != 1)
        throw std::invalid_argument("residue size " + q.get_str() + " is not a prime power");
}

mpz_class group_order(const FiniteGroupKind& kind) {
    require_prime_power(kind.q);
    const mpz_class& q = kind.q;
    switch (kind.series) {
        case FiniteGroupKind::Series::SPLIT_C: {
            require_rank(kind.rank);
            unsigned long r = static_cast<unsigned long>(kind.rank);
            mpz_class out = zpow(q, r * r);
            for (unsigned long j = 1; j <= r; ++j) out *= zpow(q, 2 * j) - 1;
            return out;
        }
        case FiniteGroupKind::Series::UNITARY_2A: {
            require_rank(kind.rank);
            unsigned long r = static_cast<unsigned long>(kind.rank);
            mpz_class out = zpow(q, r * (r - 1) / 2);
            for (unsigned long j = 2; j <= r; ++j)
                out *= zpow(q, j) - ((j % 2 == 0) ? 1 : -1);
            return out;
        }
        case FiniteGroupKind::Series::NONSPLIT_TORUS_DIM1:
            return q + 1;
    }
    throw std::logic_error("group_order: unreachable");
}

mpz_class e_prime_alpha0(const mpz_class& q, long n) {
    require_prime_power(q);
    if (n < 2) throw std::invalid_argument("e_prime_alpha0: n must be >= 2");
    mpz_class out = 1;
    for (unsigned long j = 1; j <= static_cast<unsigned long>(n) + 1; ++j)
        out *= zpow(q, j) + ((j % 2 == 0) ? 1 : -1);
    return out;
}

mpz_class e_prime_alpha1(const mpz_class& q, long n) {
    require_prime_power(q);
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("e_prime_alpha1: n must be odd and >= 3");
    unsigned long m = static_cast<unsigned long>(n + 1) / 2;
    mpz_class num = 1, den = 1;
    for (unsigned long j = 1; j <= 2 * m; ++j) num *= zpow(q, 2 * j) - 1;
    for (unsigned long j = 1; j <= m; ++j) den *= zpow(q, 4 * j) - 1;
    mpz_class out;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("e_prime_alpha1: division is not exact");
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

ExactRational e_prime_from_definition(const mpz_class& q, long n, ParahoricType type) {
    require_prime_power(q);
    if (n < 2) throw std::invalid_argument("e_prime_from_definition: n must be >= 2");
    if (type == ParahoricType::HYPERSPECIAL) return ExactRational(1);

    long dim_hat = (n + 1) * (2 * n + 3);
    mpz_class order_hat = group_order(FiniteGroupKind::split_c(n + 1, q));

    long dim_bar;
    mpz_class order_bar;
    if (type == ParahoricType::SPECIAL_ALPHA0) {
        dim_bar = (n + 1) * (n + 1);
        order_bar = group_order(FiniteGroupKind::nonsplit_torus(q)) *
                    group_order(FiniteGroupKind::unitary_2a(n + 1, q));
    } else {
        if (n % 2 == 0)
            throw std::invalid_argument("e_prime_from_definition: alpha1 requires odd n");
        long m = (n + 1) / 2;
        dim_bar = 2 * m * (2 * m + 1);
        order_bar = group_order(FiniteGroupKind::split_c(m, q * q));
    }

    long half_diff = (dim_bar - dim_hat) / 2;  // always a negative integer here
    ExactRational scale = ExactRational(q).pow(half_diff);
    return scale * ExactRational(order_hat, order_bar);
}

}  // namespace spncov
