#include "spncov/bounds.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "spncov/factored.hpp"
#include "spncov/local_factors.hpp"

namespace spncov {

namespace {

void require_rank(unsigned long n) {
    if (n < 2) throw std::invalid_argument("rank must be at least 2");
}

// base^(twice_exponent / 2) for base > 0, splitting off one square root when
// the exponent is a half-integer.
HighPrecisionReal pow_half(const ExactRational& base, unsigned long twice_exponent, unsigned prec) {
    if (base.sign() <= 0) throw std::invalid_argument("half-integer power of a nonpositive base");
    HighPrecisionReal out =
        HighPrecisionReal(base, prec).pow_int(static_cast<long>(twice_exponent / 2));
    if (twice_exponent % 2 != 0) out = out * HighPrecisionReal::sqrt_of(base, prec);
    return out;
}

}  // namespace

HighPrecisionReal bound_C(unsigned long n, unsigned prec) {
    require_rank(n);
    mpz_class fact_prod = 1;
    for (unsigned long j = 1; j <= n + 1; ++j) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), 2 * j - 1);
        fact_prod *= f;
    }
    unsigned long exponent = (n + 1) * (n + 2);
    HighPrecisionReal two_pi =
        HighPrecisionReal(ExactRational(2), prec) * HighPrecisionReal::pi(prec);
    return HighPrecisionReal(ExactRational(fact_prod), prec) /
           two_pi.pow_int(static_cast<long>(exponent));
}

HighPrecisionReal bound_f(unsigned long n, unsigned d, const ExactRational& discriminant,
                          unsigned prec) {
    require_rank(n);
    if (d < 2) throw std::invalid_argument("field degree must be at least 2");
    if (discriminant < ExactRational(5)) {
        throw std::invalid_argument("discriminant must be at least 5");
    }
    HighPrecisionReal front(ExactRational(1, 39) / discriminant, prec);
    HighPrecisionReal twelve_over_pi =
        HighPrecisionReal(ExactRational(12), prec) / HighPrecisionReal::pi(prec);
    unsigned long dim = (n + 1) * (2 * n + 3);
    HighPrecisionReal disc_pow = pow_half(discriminant / ExactRational(5), dim, prec);
    HighPrecisionReal c_half = bound_C(n, prec) / HighPrecisionReal(ExactRational(2), prec);
    return front * twelve_over_pi.pow_int(d) * disc_pow *
           c_half.pow_int(static_cast<long>(d) - 2);
}

HighPrecisionReal bound_a(unsigned long n, unsigned prec) {
    require_rank(n);
    unsigned long twice_delta = (n + 1) * (2 * n + 3) - 2;
    HighPrecisionReal six_over_pi =
        HighPrecisionReal(ExactRational(6), prec) / HighPrecisionReal::pi(prec);
    return six_over_pi * bound_C(n, prec) * pow_half(ExactRational(13, 2), twice_delta, prec);
}

bool odlyzko_check(unsigned long n, unsigned d, unsigned prec) {
    if (n < 2 || n > 13) throw std::invalid_argument("rank outside the audited range");
    if (d < 5) {
        throw std::invalid_argument("degrees below 5 are settled by direct discriminant checks");
    }
    unsigned long twice_delta = (n + 1) * (2 * n + 3) - 2;
    HighPrecisionReal prefactor =
        HighPrecisionReal(ExactRational(1, 195), prec) *
        (HighPrecisionReal(ExactRational(12), prec) / HighPrecisionReal::pi(prec)).pow_int(2) *
        pow_half(ExactRational(169, 20), twice_delta, prec);
    HighPrecisionReal rhs = prefactor * bound_a(n, prec).pow_int(static_cast<long>(d) - 2);
    return certified_greater(rhs, HighPrecisionReal(ExactRational(1), prec));
}

mpz_class index_bound(const QuadraticFieldData& field, unsigned num_ramified) {
    if (field.class_number <= 0 || field.tp_units_mod_squares <= 0) {
        throw std::invalid_argument("field data does not record class number and unit index");
    }
    mpz_class out = mpz_class(1) << num_ramified;
    out *= field.class_number;
    out *= field.tp_units_mod_squares;
    return out;
}

HighPrecisionReal class_number_bound(unsigned d, const ExactRational& discriminant,
                                     unsigned prec) {
    if (d == 0) throw std::invalid_argument("field degree must be positive");
    if (discriminant.sign() <= 0) throw std::invalid_argument("discriminant must be positive");
    HighPrecisionReal pi_over_12 =
        HighPrecisionReal::pi(prec) / HighPrecisionReal(ExactRational(12), prec);
    return HighPrecisionReal(ExactRational(16) * discriminant, prec) *
           pi_over_12.pow_int(static_cast<long>(d));
}

mpz_class unit_index_bound(unsigned d) {
    if (d == 0) throw std::invalid_argument("field degree must be positive");
    return mpz_class(1) << (d - 1);
}

std::string DerivationAudit::summary() const {
    std::string out;
    out += std::string("class-number bounds: ") + (class_number_bounds_hold ? "ok" : "FAIL");
    out += std::string("; unit-index bounds: ") + (unit_index_bounds_hold ? "ok" : "FAIL");
    out += std::string("; constant chain: ") + (chain_constant_dominates ? "ok" : "FAIL");
    return out;
}

DerivationAudit f_derivation_audit(unsigned prec) {
    DerivationAudit audit;
    struct FieldCase {
        QuadraticFieldData field;
        unsigned degree;
        ExactRational disc;
    };
    const FieldCase cases[] = {
        {QuadraticFieldData::rationals(), 1, ExactRational(1)},
        {QuadraticFieldData::real_quadratic(5), 2, ExactRational(5)},
    };
    bool h_ok = true;
    bool u_ok = true;
    for (const auto& c : cases) {
        HighPrecisionReal h_bound = class_number_bound(c.degree, c.disc, prec);
        h_ok = h_ok && certified_less(
                           HighPrecisionReal(ExactRational(c.field.class_number), prec), h_bound);
        u_ok = u_ok && (mpz_class(c.field.tp_units_mod_squares) <= unit_index_bound(c.degree));
    }
    audit.class_number_bounds_hold = h_ok;
    audit.unit_index_bounds_hold = u_ok;
    // 16 * 6/5 * 2^{d-1} <= 39 * 2^{d-2} reduces to 192/5 <= 39. Confirm the
    // reduced inequality exactly, then the unreduced one per degree with
    // certified interval comparisons.
    bool chain = ExactRational(192, 5) <= ExactRational(39);
    for (unsigned d = 2; d <= 8 && chain; ++d) {
        ExactRational lhs = ExactRational(16) * ExactRational(6, 5) *
                            ExactRational(mpz_class(1) << (d - 1));
        ExactRational rhs = ExactRational(39) * ExactRational(mpz_class(1) << (d - 2));
        chain = certified_less(HighPrecisionReal(lhs, prec), HighPrecisionReal(rhs, prec));
    }
    audit.chain_constant_dominates = chain;
    return audit;
}

ExactRational nonuniform_lower_bound(unsigned long n, const std::vector<mpz_class>& ramified) {
    require_rank(n);
    if (ramified.empty()) throw std::invalid_argument("ramification set must be nonempty");
    std::set<mpz_class> seen;
    ExactRational out(static_cast<long>(n) + 1);
    for (const auto& q : ramified) {
        if (!is_prime(q)) throw std::invalid_argument("ramified places must be rational primes");
        if (!seen.insert(q).second) throw std::invalid_argument("repeated ramified place");
        mpz_class e = e_prime_alpha0(q, static_cast<long>(n));
        if (n % 2 == 1) e = std::min(e, e_prime_alpha1(q, static_cast<long>(n)));
        out *= ExactRational(e, mpz_class(2));
    }
    for (unsigned long j = 1; j <= n + 1; ++j) {
        out *= riemann_zeta_neg(j).abs() / ExactRational(2);
    }
    return out;
}

bool verify_min_at_q2(unsigned long n, const std::vector<mpz_class>& candidate_primes) {
    require_rank(n);
    std::set<mpz_class> seen;
    bool has_two = false;
    for (const auto& q : candidate_primes) {
        if (!is_prime(q)) throw std::invalid_argument("candidates must be rational primes");
        if (!seen.insert(q).second) throw std::invalid_argument("repeated candidate prime");
        if (q == 2) has_two = true;
    }
    if (!has_two) throw std::invalid_argument("candidate list must contain the place 2");
    ExactRational base = nonuniform_lower_bound(n, {mpz_class(2)});
    for (std::size_t i = 0; i < candidate_primes.size(); ++i) {
        if (candidate_primes[i] != 2) {
            if (!(base < nonuniform_lower_bound(n, {candidate_primes[i]}))) return false;
        }
        for (std::size_t j = i + 1; j < candidate_primes.size(); ++j) {
            ExactRational pair_bound =
                nonuniform_lower_bound(n, {candidate_primes[i], candidate_primes[j]});
            if (!(base < pair_bound)) return false;
        }
    }
    return true;
}

}  // namespace spncov
