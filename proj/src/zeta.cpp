#include "spncov/zeta.hpp"

#include "spncov/bernoulli.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace spncov {

namespace {

bool squarefree(long n) {
    for (long d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

}  // namespace

bool is_fundamental_discriminant(long d) {
    if (d <= 1) return false;  // only positive (real) discriminants are used here
    if (d % 4 == 1) return squarefree(d);
    if (d % 4 == 0) {
        long m = d / 4;
        return (m % 4 == 2 || m % 4 == 3) && squarefree(m);
    }
    return false;
}

QuadraticFieldData QuadraticFieldData::real_quadratic(long discriminant) {
    if (!is_fundamental_discriminant(discriminant))
        throw std::invalid_argument("real_quadratic: " + std::to_string(discriminant) +
                                    " is not a fundamental discriminant");
    long h = 0, tp = 0;
    if (discriminant == 5) { h = 1; tp = 1; }
    return {Label::REAL_QUADRATIC, discriminant, 2, h, tp};
}

QuadraticCharacter::QuadraticCharacter(long fundamental_discriminant)
    : d_(fundamental_discriminant) {
    if (!is_fundamental_discriminant(d_))
        throw std::invalid_argument("QuadraticCharacter: modulus must be a fundamental discriminant");
}

int QuadraticCharacter::operator()(long a) const { return mpz_kronecker_si(mpz_class(d_).get_mpz_t(), a); }

int QuadraticCharacter::operator()(const mpz_class& a) const {
    return mpz_kronecker(mpz_class(d_).get_mpz_t(), a.get_mpz_t());
}

ExactRational riemann_zeta_neg(unsigned long j) {
    if (j < 1) throw std::invalid_argument("riemann_zeta_neg: j must be >= 1");
    return -bernoulli(2 * j) / ExactRational(static_cast<long>(2 * j));
}

ExactRational generalized_bernoulli(unsigned long n, const QuadraticCharacter& chi) {
    if (n < 1) throw std::invalid_argument("generalized_bernoulli: n must be >= 1");
    long d = chi.modulus();
    ExactRational sum(0);
    for (long a = 1; a <= d; ++a) {
        int c = chi(a);
        if (c == 0) continue;
        ExactRational term = bernoulli_poly(n, ExactRational(a, d));
        sum += (c > 0) ? term : -term;
    }
    return ExactRational(d).pow(static_cast<long>(n) - 1) * sum;
}

ExactRational dirichlet_L_neg(unsigned long n, const QuadraticCharacter& chi) {
    if (n < 1) throw std::invalid_argument("dirichlet_L_neg: n must be >= 1");
    return -generalized_bernoulli(n, chi) / ExactRational(static_cast<long>(n));
}

ExactRational dedekind_zeta_neg(const QuadraticFieldData& field, unsigned long j) {
    if (j < 1) throw std::invalid_argument("dedekind_zeta_neg: j must be >= 1");
    if (field.degree == 1) return riemann_zeta_neg(j);
    if (field.degree != 2 || !is_fundamental_discriminant(field.discriminant))
        throw std::invalid_argument("dedekind_zeta_neg: unsupported field");
    // The covolume scans evaluate the same (D, j) pairs thousands of times and
    // each quadratic value costs D Bernoulli-polynomial evaluations, so memoize.
    static std::mutex mu;
    static std::map<std::pair<long, unsigned long>, ExactRational> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(field.discriminant, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    QuadraticCharacter chi(field.discriminant);
    ExactRational value = riemann_zeta_neg(j) * dirichlet_L_neg(2 * j, chi);
    memo.emplace(key, value);
    return value;
}

}  // namespace spncov
