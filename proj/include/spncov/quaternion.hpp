#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spncov/golden.hpp"
#include "spncov/rational.hpp"

namespace spncov {

// Quaternion w + x i + y j + z k over an exact coefficient ring R
// (ExactRational or GoldenRational here), with i^2 = j^2 = k^2 = -1, ij = k.
template <typename R>
struct Quaternion {
    R w{};
    R x{};
    R y{};
    R z{};

    Quaternion() = default;
    Quaternion(R w_, R x_, R y_, R z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    static Quaternion scalar(const R& s) { return {s, R{}, R{}, R{}}; }
    static Quaternion unit_i() { return {R{}, R(1), R{}, R{}}; }
    static Quaternion unit_j() { return {R{}, R{}, R(1), R{}}; }
    static Quaternion unit_k() { return {R{}, R{}, R{}, R(1)}; }

    bool is_zero() const { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }

    friend Quaternion operator+(const Quaternion& u, const Quaternion& v) {
        return {u.w + v.w, u.x + v.x, u.y + v.y, u.z + v.z};
    }
    friend Quaternion operator-(const Quaternion& u, const Quaternion& v) {
        return {u.w - v.w, u.x - v.x, u.y - v.y, u.z - v.z};
    }
    Quaternion operator-() const { return {-w, -x, -y, -z}; }

    friend Quaternion operator*(const Quaternion& u, const Quaternion& v) {
        return {u.w * v.w - u.x * v.x - u.y * v.y - u.z * v.z,
                u.w * v.x + u.x * v.w + u.y * v.z - u.z * v.y,
                u.w * v.y - u.x * v.z + u.y * v.w + u.z * v.x,
                u.w * v.z + u.x * v.y - u.y * v.x + u.z * v.w};
    }

    Quaternion conjugate() const { return {w, -x, -y, -z}; }

    // x * conj(x), central: sum of coordinate squares in R.
    R reduced_norm() const { return w * w + x * x + y * y + z * z; }

    friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

using RationalQuaternion = Quaternion<ExactRational>;
using GoldenQuaternion = Quaternion<GoldenRational>;

// --- Hurwitz order over Q ---------------------------------------------------

// Hurwitz integer: all coordinates in Z, or all in Z + 1/2.
bool is_hurwitz(const RationalQuaternion& q);

// The 24 norm-1 Hurwitz elements, in a fixed deterministic order.
std::vector<RationalQuaternion> hurwitz_units();

// x -> (1+i) x (1-i)/2. Fixes 1 and i, sends j -> k -> -j; preserves the
// Hurwitz order (1+i normalizes it).
RationalQuaternion conjugation_by_one_plus_i(const RationalQuaternion& q);

// --- diagonal hermitian forms and quaternionic matrices ---------------------

template <typename R>
struct HermitianForm {
    std::vector<R> diagonal;

    std::size_t dim() const { return diagonal.size(); }

    // diag(-1, 1, ..., 1)
    static HermitianForm standard_indefinite(std::size_t dim) {
        HermitianForm h;
        h.diagonal.assign(dim, R(1));
        if (dim > 0) h.diagonal[0] = R(-1);
        return h;
    }
};

template <typename R>
class QuaternionMatrix {
public:
    explicit QuaternionMatrix(std::size_t dim) : dim_(dim), e_(dim * dim) {}

    static QuaternionMatrix identity(std::size_t dim) {
        return scalar(dim, Quaternion<R>::scalar(R(1)));
    }
    static QuaternionMatrix scalar(std::size_t dim, const Quaternion<R>& s) {
        QuaternionMatrix m(dim);
        for (std::size_t r = 0; r < dim; ++r) m.at(r, r) = s;
        return m;
    }

    std::size_t dim() const { return dim_; }
    Quaternion<R>& at(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }
    const Quaternion<R>& at(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }

    QuaternionMatrix conjugate_transpose() const {
        QuaternionMatrix m(dim_);
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = 0; c < dim_; ++c) m.at(r, c) = at(c, r).conjugate();
        return m;
    }

    friend QuaternionMatrix operator*(const QuaternionMatrix& a, const QuaternionMatrix& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("QuaternionMatrix: dimension mismatch");
        QuaternionMatrix m(a.dim_);
        for (std::size_t r = 0; r < a.dim_; ++r)
            for (std::size_t c = 0; c < a.dim_; ++c) {
                Quaternion<R> s{};
                for (std::size_t t = 0; t < a.dim_; ++t) s = s + a.at(r, t) * b.at(t, c);
                m.at(r, c) = s;
            }
        return m;
    }

    friend bool operator==(const QuaternionMatrix&, const QuaternionMatrix&) = default;

private:
    std::size_t dim_;
    std::vector<Quaternion<R>> e_;
};

// conj-transpose(M) * diag(h) * M == diag(h), exactly.
template <typename R>
bool is_isometry(const QuaternionMatrix<R>& m, const HermitianForm<R>& h) {
    if (m.dim() != h.dim()) throw std::invalid_argument("is_isometry: dimension mismatch");
    QuaternionMatrix<R> hm(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r)
        hm.at(r, r) = Quaternion<R>::scalar(h.diagonal[r]);
    return m.conjugate_transpose() * hm * m == hm;
}

// --- normalizer scalar g = (1+i)/sqrt2 * I, handled without sqrt2 -----------

struct NormalizationReport {
    bool square_is_i = false;             // (1+i)^2 == 2i, so g^2 = i I entrywise
    bool square_hurwitz_entries = false;  // every entry of g^2 is a Hurwitz integer
    bool square_isometry = false;         // g^2 preserves diag(-1,1,...,1)
    bool scalar_unitary = false;          // conj(1+i)(1+i) == 2, so conj(c) c == 1
    bool conjugation_stable = false;      // x -> (1+i)x(1-i)/2 keeps Hurwitz test set inside
    bool conjugation_multiplicative = false;

    bool all_passed() const {
        return square_is_i && square_hurwitz_entries && square_isometry && scalar_unitary &&
               conjugation_stable && conjugation_multiplicative;
    }
    std::string failures() const;
};

NormalizationReport g_normalization_checks(unsigned long n);

// --- icosian order over Q(sqrt5) --------------------------------------------

// Coordinates of 2q as golden integers (a1,b1,...,a4,b4), or nothing when q
// is not in the half-golden lattice.
std::optional<std::array<mpz_class, 8>> doubled_golden_key(const GoldenQuaternion& q);

// The binary icosahedral group: 120 norm-1 elements of the icosian ring,
// recovered by bounded coordinate search plus multiplicative closure seeded
// on the Hurwitz units. Deterministic order; contains the 24 Hurwitz units
// (with golden coefficients that happen to be rational).
std::vector<GoldenQuaternion> icosian_units();

struct IcosianBasis {
    std::vector<GoldenQuaternion> z_basis;       // 8 elements, a Z-basis
    std::vector<GoldenQuaternion> golden_basis;  // 4 elements, a Z[phi]-basis
    // Determinant of the Hermite normal form of the doubled-coordinate
    // Z-lattice (recorded for reference, not asserted against anything).
    mpz_class z_determinant;
    // 8x8 HNF rows of the doubled lattice, for membership tests.
    std::vector<std::array<mpz_class, 8>> hnf;
};

// Z- and Z[phi]-bases of the module generated by the icosian units, by
// Hermite reduction of the 120 doubled coordinate vectors.
IcosianBasis icosian_basis();

// Membership of q in the Z-span described by basis.hnf.
bool icosian_module_contains(const IcosianBasis& basis, const GoldenQuaternion& q);

// --- ramification and regularity --------------------------------------------

enum class QuaternionAlgebraLabel { MINUS1_MINUS1_OVER_Q, MINUS1_MINUS1_OVER_Q_SQRT5 };

// Hilbert symbol (-1,-1)_p for a rational prime p: -1 (ramified) at p = 2,
// +1 (split) at every odd prime.
int hilbert_minus1_minus1(const mpz_class& p);

// Finite ramification set of the algebra. Over Q this is {2}, computed from
// the Hilbert symbol; over Q(sqrt5) it is empty (both real places ramify, so
// the parity constraint is met with no finite place). The total-count parity
// invariant is checked internally.
std::vector<mpz_class> ramification_data(QuaternionAlgebraLabel algebra);

// All diagonal coefficients are units of the ring of integers (Z here).
bool is_regular_diagonal(const HermitianForm<ExactRational>& h);
// Same over Z[phi]: coefficients must be golden integers of norm +-1.
bool is_regular_diagonal(const HermitianForm<GoldenRational>& h);

}  // namespace spncov
