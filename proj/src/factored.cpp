#include "spncov/factored.hpp"

#include <cstdint>
#include <vector>

namespace spncov {

FactoredRational::FactoredRational(int sign, std::map<mpz_class, long> factors)
    : sign_(sign), factors_(std::move(factors)) {
    if (sign_ < -1 || sign_ > 1)
        throw std::invalid_argument("FactoredRational: sign must be -1, 0 or 1");
    if (sign_ == 0 && !factors_.empty())
        throw std::invalid_argument("FactoredRational: zero carries no factors");
    for (auto it = factors_.begin(); it != factors_.end();) {
        if (it->second == 0) { it = factors_.erase(it); continue; }
        if (!is_prime(it->first))
            throw std::invalid_argument("FactoredRational: non-prime key " + it->first.get_str());
        ++it;
    }
}

ExactRational FactoredRational::to_rational() const {
    if (sign_ == 0) return ExactRational(0);
    mpz_class num = 1, den = 1;
    for (const auto& [p, e] : factors_) {
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e > 0 ? e : -e));
        (e > 0 ? num : den) *= pe;
    }
    if (sign_ < 0) num = -num;
    return ExactRational(num, den);
}

std::string FactoredRational::to_string() const {
    if (sign_ == 0) return "0";
    std::string num, den;
    for (const auto& [p, e] : factors_) {
        std::string& part = (e > 0) ? num : den;
        if (!part.empty()) part += "·";
        part += p.get_str();
        long ae = e > 0 ? e : -e;
        if (ae != 1) part += "^" + std::to_string(ae);
    }
    std::string out = (sign_ < 0) ? "-" : "";
    out += num.empty() ? "1" : num;
    if (!den.empty()) out += "/(" + den + ")";
    return out;
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& o) {
    if (sign_ == 0 || o.sign_ == 0) { sign_ = 0; factors_.clear(); return *this; }
    sign_ *= o.sign_;
    for (const auto& [p, e] : o.factors_) {
        long& mine = factors_[p];
        mine += e;
        if (mine == 0) factors_.erase(p);
    }
    return *this;
}

FactoredRational& FactoredRational::operator/=(const FactoredRational& o) {
    if (o.sign_ == 0) throw std::domain_error("FactoredRational: division by zero");
    if (sign_ == 0) return *this;
    sign_ *= o.sign_;
    for (const auto& [p, e] : o.factors_) {
        long& mine = factors_[p];
        mine -= e;
        if (mine == 0) factors_.erase(p);
    }
    return *this;
}

FactoredRational FactoredRational::pow(long e) const {
    if (sign_ == 0) {
        if (e <= 0) throw std::domain_error("FactoredRational: 0 to a nonpositive power");
        return *this;
    }
    FactoredRational r;
    r.sign_ = (sign_ < 0 && (e % 2 != 0)) ? -1 : 1;
    if (e != 0)
        for (const auto& [p, ex] : factors_) r.factors_[p] = ex * e;
    return r;
}

namespace {

constexpr unsigned long kTrialLimit = 1000000;

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> sieve(kTrialLimit + 1, true);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= kTrialLimit; j += i)
                sieve[static_cast<size_t>(j)] = false;
        }
        return out;
    }();
    return primes;
}

bool miller_rabin_witness(const mpz_class& n, const mpz_class& a, const mpz_class& d, unsigned long s) {
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

// Bounded Pollard-Brent rho; returns a nontrivial factor or 0 on failure.
mpz_class pollard_brent(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    for (long c = 1; c <= 6; ++c) {
        mpz_class y = 2, m = 128, g = 1, r = 1, q = 1, x, ys;
        long long steps = 0;
        const long long step_cap = 20000000;
        while (g == 1 && steps < step_cap) {
            x = y;
            for (mpz_class i = 0; i < r; ++i) y = (y * y + c) % n;
            mpz_class k = 0;
            while (k < r && g == 1 && steps < step_cap) {
                ys = y;
                mpz_class lim = std::min(m, mpz_class(r - k));
                for (mpz_class i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    mpz_class diff = x > y ? x - y : y - x;
                    q = (q * diff) % n;
                    ++steps;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one multiplication at a time.
            for (long long i = 0; g == 1 && i < step_cap; ++i) {
                ys = (ys * ys + c) % n;
                mpz_class diff = x > ys ? x - ys : ys - x;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != 1 && g != n) return g;
    }
    return 0;
}

const mpz_class& factor_envelope() {
    static const mpz_class limit = [] {
        mpz_class l;
        mpz_ui_pow_ui(l.get_mpz_t(), 10, 40);
        return l;
    }();
    return limit;
}

}  // namespace

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    static const unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned long b : bases) {
        if (n == b) return true;
        if (n % b == 0) return false;
    }
    // Deterministic with these bases below 3.317e24.
    static const mpz_class det_limit("3317044064679887385961981");
    if (n >= det_limit)
        return mpz_probab_prime_p(n.get_mpz_t(), 50) > 0;
    mpz_class d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (unsigned long b : bases)
        if (miller_rabin_witness(n, b, d, s)) return false;
    return true;
}

std::map<mpz_class, long> factor_integer(mpz_class n) {
    if (n < 1) throw std::invalid_argument("factor_integer: argument must be >= 1");
    std::map<mpz_class, long> out;
    for (std::uint32_t p : small_primes()) {
        if (mpz_class(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[p];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (n == 1) return out;
    if (n <= mpz_class(kTrialLimit) * kTrialLimit) {
        // No factor up to the trial limit, so the remainder is prime.
        ++out[n];
        return out;
    }
    std::vector<mpz_class> pending{n};
    while (!pending.empty()) {
        mpz_class c = pending.back();
        pending.pop_back();
        if (is_prime(c)) {
            ++out[c];
            continue;
        }
        if (c > factor_envelope()) throw UnfactoredCofactor(c);
        mpz_class g = pollard_brent(c);
        if (g == 0) throw UnfactoredCofactor(c);
        pending.push_back(g);
        pending.push_back(c / g);
    }
    return out;
}

FactoredRational factorize(const ExactRational& r) {
    if (r.is_zero()) return FactoredRational();
    std::map<mpz_class, long> factors = factor_integer(::abs(r.num()));
    for (auto& [p, e] : factor_integer(r.den())) factors[p] = -e;
    return FactoredRational(r.sign(), std::move(factors));
}

}  // namespace spncov
