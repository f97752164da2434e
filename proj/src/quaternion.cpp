#include "spncov/quaternion.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "spncov/factored.hpp"

namespace spncov {

namespace {

std::string golden_part_string(const std::string& coeff, bool is_one) {
    return is_one ? "phi" : coeff + "*phi";
}

}  // namespace

std::string GoldenInteger::to_string() const {
    if (b == 0) return a.get_str();
    if (a == 0) {
        if (b == -1) return "-phi";
        return b < 0 ? "-" + golden_part_string(mpz_class(-b).get_str(), false)
                     : golden_part_string(b.get_str(), b == 1);
    }
    mpz_class nb = b < 0 ? mpz_class(-b) : b;
    return a.get_str() + (b < 0 ? "-" : "+") + golden_part_string(nb.get_str(), nb == 1);
}

std::string GoldenRational::to_string() const {
    if (b.is_zero()) return a.to_string();
    ExactRational nb = b.abs();
    std::string phi_part = golden_part_string(nb.to_string(), nb == ExactRational(1));
    if (a.is_zero()) return (b.sign() < 0 ? "-" : "") + phi_part;
    return a.to_string() + (b.sign() < 0 ? "-" : "+") + phi_part;
}

mpz_class golden_norm(const GoldenInteger& x) { return x.a * x.a + x.a * x.b - x.b * x.b; }

bool is_golden_unit(const GoldenInteger& x) {
    mpz_class n = golden_norm(x);
    return n == 1 || n == -1;
}

GoldenInteger golden_divmod(const GoldenInteger& x, const GoldenInteger& y, GoldenInteger& rem) {
    if (y.is_zero()) throw std::invalid_argument("golden_divmod: division by zero");
    mpz_class n = golden_norm(y);
    GoldenInteger num = x * y.conjugate();
    if (n < 0) {
        n = -n;
        num = -num;
    }
    auto round_nearest = [&n](const mpz_class& p) {
        // floor(p/n + 1/2) with n > 0
        mpz_class q;
        mpz_class twice = 2 * p + n;
        mpz_class den = 2 * n;
        mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den.get_mpz_t());
        return q;
    };
    GoldenInteger q{round_nearest(num.a), round_nearest(num.b)};
    rem = x - q * y;
    // nearest rounding bounds |N(rem)| by (5/16)|N(y)|
    mpz_class nr = golden_norm(rem);
    mpz_class ny = golden_norm(y);
    if (mpz_cmpabs(nr.get_mpz_t(), ny.get_mpz_t()) >= 0)
        throw std::logic_error("golden_divmod: remainder norm did not decrease");
    return q;
}

// --- Hurwitz order ----------------------------------------------------------

bool is_hurwitz(const RationalQuaternion& q) {
    const ExactRational* c[4] = {&q.w, &q.x, &q.y, &q.z};
    mpz_class doubled[4];
    for (int i = 0; i < 4; ++i) {
        ExactRational t = *c[i] + *c[i];
        if (!t.is_integer()) return false;
        doubled[i] = t.num();
    }
    bool odd0 = mpz_odd_p(doubled[0].get_mpz_t()) != 0;
    for (int i = 1; i < 4; ++i)
        if ((mpz_odd_p(doubled[i].get_mpz_t()) != 0) != odd0) return false;
    return true;
}

std::vector<RationalQuaternion> hurwitz_units() {
    std::vector<RationalQuaternion> units;
    long d[4];
    for (long code = 0; code < 625; ++code) {
        long rest = code;
        long sq = 0;
        for (int i = 3; i >= 0; --i) {
            d[i] = rest % 5 - 2;
            rest /= 5;
            sq += d[i] * d[i];
        }
        if (sq != 4) continue;
        bool odd0 = d[0] % 2 != 0;
        bool ok = true;
        for (int i = 1; i < 4; ++i)
            if ((d[i] % 2 != 0) != odd0) ok = false;
        if (!ok) continue;
        units.push_back({ExactRational(d[0], 2), ExactRational(d[1], 2), ExactRational(d[2], 2),
                         ExactRational(d[3], 2)});
    }
    if (units.size() != 24) throw std::logic_error("hurwitz_units: enumeration failed");
    return units;
}

RationalQuaternion conjugation_by_one_plus_i(const RationalQuaternion& q) {
    RationalQuaternion u{ExactRational(1), ExactRational(1), ExactRational(0), ExactRational(0)};
    RationalQuaternion u_inv{ExactRational(1, 2), ExactRational(-1, 2), ExactRational(0),
                             ExactRational(0)};
    return u * q * u_inv;
}

// --- normalizer checks ------------------------------------------------------

std::string NormalizationReport::failures() const {
    std::string out;
    auto note = [&out](bool ok, const char* name) {
        if (ok) return;
        if (!out.empty()) out += "; ";
        out += name;
    };
    note(square_is_i, "square_is_i");
    note(square_hurwitz_entries, "square_hurwitz_entries");
    note(square_isometry, "square_isometry");
    note(scalar_unitary, "scalar_unitary");
    note(conjugation_stable, "conjugation_stable");
    note(conjugation_multiplicative, "conjugation_multiplicative");
    return out;
}

NormalizationReport g_normalization_checks(unsigned long n) {
    if (n < 2) throw std::invalid_argument("g_normalization_checks: n must be >= 2");
    NormalizationReport rep;

    // g = c I with c = (1+i)/sqrt2, handled through u = 1+i only:
    // c^2 = u^2/2 and conj(c) c = conj(u) u / 2, no sqrt2 numerics.
    RationalQuaternion u{ExactRational(1), ExactRational(1), ExactRational(0), ExactRational(0)};
    RationalQuaternion two_i{ExactRational(0), ExactRational(2), ExactRational(0), ExactRational(0)};
    rep.square_is_i = (u * u == two_i);
    rep.scalar_unitary = (u.conjugate() * u == RationalQuaternion::scalar(ExactRational(2)));

    auto g_square = QuaternionMatrix<ExactRational>::scalar(n + 1, RationalQuaternion::unit_i());
    rep.square_hurwitz_entries = true;
    for (std::size_t r = 0; r < g_square.dim(); ++r)
        for (std::size_t c = 0; c < g_square.dim(); ++c)
            if (!is_hurwitz(g_square.at(r, c))) rep.square_hurwitz_entries = false;
    rep.square_isometry =
        is_isometry(g_square, HermitianForm<ExactRational>::standard_indefinite(n + 1));

    std::vector<RationalQuaternion> test_set = hurwitz_units();
    test_set.push_back({ExactRational(3), ExactRational(-2), ExactRational(1), ExactRational(0)});
    test_set.push_back({ExactRational(1, 2), ExactRational(1, 2), ExactRational(1, 2),
                        ExactRational(5, 2)});
    test_set.push_back({ExactRational(0), ExactRational(2), ExactRational(0), ExactRational(-1)});
    test_set.push_back({ExactRational(-3, 2), ExactRational(7, 2), ExactRational(1, 2),
                        ExactRational(-1, 2)});

    rep.conjugation_stable = true;
    for (const auto& t : test_set)
        if (!is_hurwitz(conjugation_by_one_plus_i(t))) rep.conjugation_stable = false;

    rep.conjugation_multiplicative = true;
    for (const auto& s : test_set)
        for (const auto& t : test_set) {
            if (conjugation_by_one_plus_i(s * t) !=
                conjugation_by_one_plus_i(s) * conjugation_by_one_plus_i(t))
                rep.conjugation_multiplicative = false;
        }
    for (const auto& t : test_set)
        if (conjugation_by_one_plus_i(t.conjugate()) != conjugation_by_one_plus_i(t).conjugate())
            rep.conjugation_multiplicative = false;

    return rep;
}

// --- icosian order ----------------------------------------------------------

std::optional<std::array<mpz_class, 8>> doubled_golden_key(const GoldenQuaternion& q) {
    const GoldenRational* c[4] = {&q.w, &q.x, &q.y, &q.z};
    std::array<mpz_class, 8> key;
    for (int i = 0; i < 4; ++i) {
        GoldenRational t = *c[i] + *c[i];
        if (!t.is_integral()) return std::nullopt;
        key[2 * i] = t.a.num();
        key[2 * i + 1] = t.b.num();
    }
    return key;
}

namespace {

struct KeyLess {
    bool operator()(const std::array<mpz_class, 8>& u, const std::array<mpz_class, 8>& v) const {
        for (int i = 0; i < 8; ++i) {
            int c = cmp(u[i], v[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }
};

GoldenQuaternion from_doubled(const long* a, const long* b) {
    auto coord = [](long aa, long bb) {
        return GoldenRational{ExactRational(aa, 2), ExactRational(bb, 2)};
    };
    return {coord(a[0], b[0]), coord(a[1], b[1]), coord(a[2], b[2]), coord(a[3], b[3])};
}

// All norm-1 elements of the half-golden box: doubled coordinates a_i + b_i phi
// with |a_i|, |b_i| <= 2 and sum of squares exactly 4. The box is exhaustive
// for norm-1 elements because both real embeddings of each doubled coordinate
// are bounded by 2, which pins b_i to {-1,0,1} and a_i to the box.
std::vector<GoldenQuaternion> half_golden_box_units() {
    std::vector<GoldenQuaternion> out;
    long a[4], b[4];
    for (long code = 0; code < 390625; ++code) {  // 5^8 digit patterns
        long rest = code;
        for (int i = 3; i >= 0; --i) {
            b[i] = rest % 5 - 2;
            rest /= 5;
            a[i] = rest % 5 - 2;
            rest /= 5;
        }
        // sum of d_i^2 with d = a + b phi: rational part a^2 + b^2, phi part
        // 2ab + b^2; need 4 + 0 phi.
        long ra = 0, rb = 0;
        for (int i = 0; i < 4; ++i) {
            ra += a[i] * a[i] + b[i] * b[i];
            rb += 2 * a[i] * b[i] + b[i] * b[i];
        }
        if (ra == 4 && rb == 0) out.push_back(from_doubled(a, b));
    }
    return out;
}

// Multiplicative closure inside the half-golden lattice; nullopt when the
// closure escapes the lattice or exceeds the cap.
std::optional<std::vector<GoldenQuaternion>> multiplicative_closure(
    const std::vector<GoldenQuaternion>& seed, std::size_t cap) {
    std::vector<GoldenQuaternion> elems;
    std::map<std::array<mpz_class, 8>, std::size_t, KeyLess> index;
    auto add = [&](const GoldenQuaternion& q) -> int {
        auto key = doubled_golden_key(q);
        if (!key) return -1;
        if (index.find(*key) != index.end()) return 0;
        index.emplace(*key, elems.size());
        elems.push_back(q);
        return 1;
    };
    for (const auto& s : seed)
        if (add(s) < 0) return std::nullopt;
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t sz = elems.size();
        for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t j = 0; j < sz; ++j) {
                int r = add(elems[i] * elems[j]);
                if (r < 0) return std::nullopt;
                if (r > 0) {
                    if (elems.size() > cap) return std::nullopt;
                    grew = true;
                }
            }
    }
    return elems;
}

bool rational_coordinates(const GoldenQuaternion& q) {
    return q.w.b.is_zero() && q.x.b.is_zero() && q.y.b.is_zero() && q.z.b.is_zero();
}

}  // namespace

std::vector<GoldenQuaternion> icosian_units() {
    static std::mutex mu;
    static std::vector<GoldenQuaternion> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (!cache.empty()) return cache;

    std::vector<GoldenQuaternion> hurwitz;
    std::vector<GoldenQuaternion> golden;
    for (const auto& q : half_golden_box_units())
        (rational_coordinates(q) ? hurwitz : golden).push_back(q);
    if (hurwitz.size() != 24)
        throw std::logic_error("icosian_units: Hurwitz sublist has wrong size");

    // Seed with the Hurwitz units plus one genuinely golden candidate; the
    // first candidate whose closure is a 120-element group wins. Either
    // Galois-conjugate copy of the ring passes every downstream check.
    for (const auto& cand : golden) {
        std::vector<GoldenQuaternion> seed = hurwitz;
        seed.push_back(cand);
        auto closed = multiplicative_closure(seed, 200);
        if (!closed || closed->size() != 120) continue;
        std::sort(closed->begin(), closed->end(),
                  [](const GoldenQuaternion& u, const GoldenQuaternion& v) {
                      return KeyLess{}(*doubled_golden_key(u), *doubled_golden_key(v));
                  });
        cache = *closed;
        return cache;
    }
    throw std::logic_error("icosian_units: no stable closure found");
}

IcosianBasis icosian_basis() {
    auto units = icosian_units();
    std::vector<std::array<mpz_class, 8>> rows;
    rows.reserve(units.size());
    for (const auto& u : units) rows.push_back(*doubled_golden_key(u));

    // Hermite reduction over Z of the doubled-coordinate vectors.
    std::size_t rank = 0;
    for (int col = 0; col < 8; ++col) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = rank; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() ||
                    mpz_cmpabs(rows[i][col].get_mpz_t(), rows[best][col].get_mpz_t()) < 0)
                    best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[rank], rows[best]);
            bool leftover = false;
            for (std::size_t i = rank + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[rank][col].get_mpz_t());
                if (q != 0)
                    for (int k = 0; k < 8; ++k) rows[i][k] -= q * rows[rank][k];
                if (rows[i][col] != 0) leftover = true;
            }
            if (!leftover) {
                if (rows[rank][col] < 0)
                    for (int k = 0; k < 8; ++k) rows[rank][k] = -rows[rank][k];
                for (std::size_t i = 0; i < rank; ++i) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(),
                               rows[rank][col].get_mpz_t());
                    if (q != 0)
                        for (int k = 0; k < 8; ++k) rows[i][k] -= q * rows[rank][k];
                }
                ++rank;
                break;
            }
        }
    }
    rows.resize(rank);

    IcosianBasis basis;
    basis.hnf = rows;
    basis.z_determinant = 1;
    if (rank == 8)
        for (int k = 0; k < 8; ++k) basis.z_determinant *= rows[k][k];
    else
        basis.z_determinant = 0;
    for (const auto& row : rows) {
        auto coord = [&row](int i) {
            return GoldenRational{ExactRational(row[2 * i], mpz_class(2)),
                                  ExactRational(row[2 * i + 1], mpz_class(2))};
        };
        basis.z_basis.push_back({coord(0), coord(1), coord(2), coord(3)});
    }

    // Z[phi]-reduction of the same vectors, using the Euclidean divmod.
    std::vector<std::array<GoldenInteger, 4>> grows;
    grows.reserve(units.size());
    for (const auto& u : units) {
        auto key = *doubled_golden_key(u);
        grows.push_back({GoldenInteger(key[0], key[1]), GoldenInteger(key[2], key[3]),
                         GoldenInteger(key[4], key[5]), GoldenInteger(key[6], key[7])});
    }
    std::size_t grank = 0;
    for (int col = 0; col < 4; ++col) {
        while (true) {
            std::size_t best = grows.size();
            mpz_class best_norm;
            for (std::size_t i = grank; i < grows.size(); ++i) {
                if (grows[i][col].is_zero()) continue;
                mpz_class n = golden_norm(grows[i][col]);
                if (best == grows.size() || mpz_cmpabs(n.get_mpz_t(), best_norm.get_mpz_t()) < 0) {
                    best = i;
                    best_norm = n;
                }
            }
            if (best == grows.size()) break;
            std::swap(grows[grank], grows[best]);
            bool leftover = false;
            for (std::size_t i = grank + 1; i < grows.size(); ++i) {
                if (grows[i][col].is_zero()) continue;
                GoldenInteger rem;
                GoldenInteger q = golden_divmod(grows[i][col], grows[grank][col], rem);
                if (!q.is_zero())
                    for (int k = 0; k < 4; ++k)
                        grows[i][k] = grows[i][k] - q * grows[grank][k];
                if (!grows[i][col].is_zero()) leftover = true;
            }
            if (!leftover) {
                for (std::size_t i = 0; i < grank; ++i) {
                    if (grows[i][col].is_zero()) continue;
                    GoldenInteger rem;
                    GoldenInteger q = golden_divmod(grows[i][col], grows[grank][col], rem);
                    if (!q.is_zero())
                        for (int k = 0; k < 4; ++k)
                            grows[i][k] = grows[i][k] - q * grows[grank][k];
                }
                ++grank;
                break;
            }
        }
    }
    for (std::size_t r = 0; r < grank; ++r) {
        auto coord = [&](int i) {
            return GoldenRational{ExactRational(grows[r][i].a, mpz_class(2)),
                                  ExactRational(grows[r][i].b, mpz_class(2))};
        };
        basis.golden_basis.push_back({coord(0), coord(1), coord(2), coord(3)});
    }
    return basis;
}

bool icosian_module_contains(const IcosianBasis& basis, const GoldenQuaternion& q) {
    auto key = doubled_golden_key(q);
    if (!key) return false;
    std::array<mpz_class, 8> v = *key;
    for (const auto& row : basis.hnf) {
        int pivot = -1;
        for (int k = 0; k < 8; ++k)
            if (row[k] != 0) {
                pivot = k;
                break;
            }
        if (pivot < 0) continue;
        if (v[pivot] == 0) continue;
        mpz_class quo, rem;
        mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), v[pivot].get_mpz_t(),
                    row[pivot].get_mpz_t());
        if (rem != 0) return false;
        for (int k = 0; k < 8; ++k) v[k] -= quo * row[k];
    }
    for (int k = 0; k < 8; ++k)
        if (v[k] != 0) return false;
    return true;
}

// --- ramification and regularity --------------------------------------------

int hilbert_minus1_minus1(const mpz_class& p) {
    if (p < 2 || !is_prime(p))
        throw std::invalid_argument("hilbert_minus1_minus1: argument must be a rational prime");
    // (-1,-1)_2 = (-1)^{eps(-1) eps(-1)} = -1; at odd p both entries are units,
    // so the symbol is trivial.
    return p == 2 ? -1 : 1;
}

std::vector<mpz_class> ramification_data(QuaternionAlgebraLabel algebra) {
    std::vector<mpz_class> finite;
    std::size_t real_ramified = 0;
    switch (algebra) {
        case QuaternionAlgebraLabel::MINUS1_MINUS1_OVER_Q:
            real_ramified = 1;  // definite at the single real place
            if (hilbert_minus1_minus1(2) < 0) finite.push_back(2);
            break;
        case QuaternionAlgebraLabel::MINUS1_MINUS1_OVER_Q_SQRT5:
            real_ramified = 2;  // definite under both real embeddings
            break;
    }
    if ((finite.size() + real_ramified) % 2 != 0)
        throw std::logic_error("ramification_data: place-count parity violated");
    return finite;
}

bool is_regular_diagonal(const HermitianForm<ExactRational>& h) {
    if (h.dim() == 0) throw std::invalid_argument("is_regular_diagonal: empty form");
    for (const auto& c : h.diagonal)
        if (!c.is_integer() || c.abs() != ExactRational(1)) return false;
    return true;
}

bool is_regular_diagonal(const HermitianForm<GoldenRational>& h) {
    if (h.dim() == 0) throw std::invalid_argument("is_regular_diagonal: empty form");
    for (const auto& c : h.diagonal) {
        if (!c.is_integral()) return false;
        if (!is_golden_unit(GoldenInteger(c.a.num(), c.b.num()))) return false;
    }
    return true;
}

}  // namespace spncov
