#include "spncov/rational.hpp"

namespace spncov {

ExactRational::ExactRational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw std::domain_error("ExactRational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

ExactRational::ExactRational(long num, long den)
    : ExactRational(mpz_class(num), mpz_class(den)) {}

ExactRational ExactRational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        mpz_class n;
        if (mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("ExactRational::parse: bad integer '" + s + "'");
        return ExactRational(n);
    }
    mpz_class n, d;
    if (mpz_set_str(n.get_mpz_t(), s.substr(0, slash).c_str(), 10) != 0 ||
        mpz_set_str(d.get_mpz_t(), s.substr(slash + 1).c_str(), 10) != 0)
        throw std::invalid_argument("ExactRational::parse: bad rational '" + s + "'");
    if (sgn(d) <= 0)
        throw std::invalid_argument("ExactRational::parse: denominator must be positive");
    return ExactRational(n, d);
}

ExactRational ExactRational::operator-() const {
    ExactRational r;
    r.v_ = -v_;
    return r;
}

ExactRational& ExactRational::operator+=(const ExactRational& o) { v_ += o.v_; return *this; }
ExactRational& ExactRational::operator-=(const ExactRational& o) { v_ -= o.v_; return *this; }
ExactRational& ExactRational::operator*=(const ExactRational& o) { v_ *= o.v_; return *this; }

ExactRational& ExactRational::operator/=(const ExactRational& o) {
    if (o.is_zero()) throw std::domain_error("ExactRational: division by zero");
    v_ /= o.v_;
    return *this;
}

ExactRational ExactRational::abs() const {
    ExactRational r;
    r.v_ = ::abs(v_);
    return r;
}

ExactRational ExactRational::pow(long e) const {
    if (e == 0) return ExactRational(1);
    if (is_zero() && e < 0) throw std::domain_error("ExactRational: 0 to a negative power");
    unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), ue);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), ue);
    return e > 0 ? ExactRational(n, d) : ExactRational(d, n);
}

mpz_class ExactRational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

std::string ExactRational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

// Exact count of decimal digits of |z|, z != 0.
size_t digits10(const mpz_class& z) {
    size_t est = mpz_sizeinbase(z.get_mpz_t(), 10);
    if (est == 1) return 1;
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, est - 1);
    return mpz_cmpabs(z.get_mpz_t(), p.get_mpz_t()) >= 0 ? est : est - 1;
}

}  // namespace

std::string approx_decimal(const ExactRational& r, unsigned sig_figs) {
    if (sig_figs < 1) throw std::invalid_argument("approx_decimal: sig_figs must be >= 1");
    if (r.is_zero()) return "0";

    mpz_class a = ::abs(r.num());
    mpz_class b = r.den();
    long da = static_cast<long>(digits10(a));
    long db = static_cast<long>(digits10(b));

    // Scale so that M = floor(|r| * 10^k) has at least sig_figs + 1 digits;
    // then truncating M's digit string is exact truncation of |r|.
    long k = static_cast<long>(sig_figs) + db - da + 2;
    mpz_class scaled_num = a, scaled_den = b, M;
    if (k >= 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
        scaled_num *= p;
    } else {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-k));
        scaled_den *= p;
    }
    mpz_fdiv_q(M.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());

    std::string digits = M.get_str();
    long exp10 = static_cast<long>(digits.size()) - 1 - k;
    digits.resize(sig_figs, '0');

    std::string out;
    if (r.sign() < 0) out += '-';
    out += digits[0];
    if (sig_figs > 1) {
        out += '.';
        out += digits.substr(1);
    }
    out += 'e';
    out += std::to_string(exp10);
    return out;
}

std::string approx_display(const ExactRational& r, unsigned sig_figs) {
    std::string s = approx_decimal(r, sig_figs);
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "e0") == 0)
        s.erase(s.size() - 2);
    return s;
}

}  // namespace spncov
