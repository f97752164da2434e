#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spncov/factored.hpp"
#include "spncov/local_factors.hpp"
#include "spncov/zeta.hpp"

namespace spncov {

// Finite place where the defining quaternion algebra ramifies, recorded by the
// residue field size q (a prime power) and the parahoric type chosen there.
struct RamifiedPlace {
    mpz_class q;
    ParahoricType type;

    friend bool operator==(const RamifiedPlace&, const RamifiedPlace&) = default;
};

// The lattice families the engine knows closed forms for, plus a generic
// descriptor assembled from base-field and local data alone.
//
//   GAMMA0      normalizer of the principal lattice over the Hurwitz order,
//               special parahoric of the first kind at 2 (nonuniform)
//   GAMMA1      same but second-kind parahoric at 2; odd n only (nonuniform)
//   DELTA       principal lattice over the icosian order, no finite
//               ramification, base field Q(sqrt5); self-normalizing (uniform)
//   SP_HURWITZ  the principal Hurwitz lattice itself, index 2 in GAMMA0
//   GENERIC     anything else expressible as (field, ramified places, index)
enum class LatticeFamily { GAMMA0, GAMMA1, DELTA, SP_HURWITZ, GENERIC };

struct LatticeDescriptor {
    LatticeFamily family;
    unsigned long n;  // quaternionic rank parameter, n >= 2
    QuadraticFieldData field;
    std::vector<RamifiedPlace> places;
    // Index of the principal lattice inside the group the descriptor reports
    // on (2 for the normalizer families, 1 otherwise).
    long principal_index;

    static LatticeDescriptor gamma0(unsigned long n);
    static LatticeDescriptor gamma1(unsigned long n);  // odd n only
    static LatticeDescriptor delta(unsigned long n);
    static LatticeDescriptor sp_hurwitz(unsigned long n);
    static LatticeDescriptor generic(unsigned long n, const QuadraticFieldData& field,
                                     std::vector<RamifiedPlace> places);

    // Cocompact iff the base field is a proper extension of Q.
    bool uniform() const { return field.degree > 1; }

    std::string name() const;  // "Gamma0(n=2)", "Delta(n=3)", ...
};

// Machine-readable family tag: "gamma0", "gamma1", "delta", "sp-hurwitz",
// "generic".
std::string family_tag(LatticeFamily f);

// One Euler characteristic, carried in three views. `factored` is absent when
// a cofactor of the numerator exceeds the factorization envelope (which
// happens for large n, where Bernoulli numerators outgrow it); `exact` and
// `approx` are always present. `approx` uses 4 significant figures, truncated.
struct ChiResult {
    ExactRational exact;
    std::optional<FactoredRational> factored;
    std::string approx;
};

// --- exact cores (scan-friendly: no factoring, no string formatting) -------

// Principal lattice: chi = (n+1) * prod_v e'(P_v) * prod_{j=1}^{n+1}
// |zeta_k(1-2j)| / 2^d with d the field degree. Places must carry a ramified
// parahoric type; hyperspecial entries are rejected (an unramified place
// contributes no factor and must simply be omitted).
ExactRational chi_principal_exact(unsigned long n, const QuadraticFieldData& field,
                                  const std::vector<RamifiedPlace>& places);

// Closed Bernoulli-product form for the first normalizer family:
// (n+1)/2 * prod_{j=1}^{n+1} (2^j + (-1)^j) |B_{2j}| / (4j).
ExactRational chi_gamma0_exact(unsigned long n);

// Second normalizer family, odd n. Evaluates both the closed Bernoulli form
// (with the extra prod_{j<=(n+1)/2} 1/(2^{4j}-1) factor) and the local-factor
// ratio route e'(P1_2)/e'(P0_2) * chi_gamma0, and insists they agree exactly.
ExactRational chi_gamma1_exact(unsigned long n);

// Icosian family: (n+1) * prod_{j=1}^{n+1} zeta_k(1-2j)/4 over k = Q(sqrt5),
// written literally (the values are positive, so no bars are needed).
ExactRational chi_delta_exact(unsigned long n);

// Stabilizer of a maximal-type lattice: same data as chi_principal with the
// first-kind parahoric everywhere, but assembled j-major with the per-place
// factors (q^j + (-1)^j) distributed into the zeta product.
ExactRational chi_stabilizer_max_type_exact(unsigned long n, const QuadraticFieldData& field,
                                            const std::vector<mpz_class>& residue_sizes);

// Exact chi of any descriptor. For the named families this computes both the
// family closed form and the generic (field, places, index) assembly and
// requires exact agreement before returning.
ExactRational orbifold_chi_exact(const LatticeDescriptor& lattice);

// --- three-view results ----------------------------------------------------

ChiResult chi_principal(unsigned long n, const QuadraticFieldData& field,
                        const std::vector<RamifiedPlace>& places);
ChiResult chi_gamma0(unsigned long n);
ChiResult chi_gamma1(unsigned long n);
ChiResult chi_delta(unsigned long n);
ChiResult chi_stabilizer_max_type(unsigned long n, const QuadraticFieldData& field,
                                  const std::vector<mpz_class>& residue_sizes);
ChiResult orbifold_chi(const LatticeDescriptor& lattice);

// Covolume in a caller-chosen normalization: chi * vol_unit / (n+1), where
// vol_unit is the (positive, rational) volume assigned to one unit of
// normalized Euler characteristic. The engine fixes only this proportionality.
ExactRational orbifold_volume(const LatticeDescriptor& lattice, const ExactRational& vol_unit);

// --- minimality scans ------------------------------------------------------

struct ScanEntry {
    LatticeDescriptor desc;
    ExactRational chi;
};

// Families compared at fixed n: GAMMA0, GAMMA1 (odd n), DELTA.
struct MinReport {
    LatticeDescriptor winner;
    ChiResult chi;
    std::vector<ScanEntry> candidates;
};

MinReport min_lattice(unsigned long n);

// Range scan over n_lo..n_hi (inclusive). Comparisons are exact; the two
// winners additionally carry the factored/approx views.
struct GlobalMinReport {
    unsigned long n_lo = 0;
    unsigned long n_hi = 0;
    LatticeDescriptor overall_winner;
    ChiResult overall_chi;
    bool overall_unique = false;
    LatticeDescriptor uniform_winner;
    ChiResult uniform_chi;
    bool uniform_unique = false;
};

GlobalMinReport global_min(unsigned long n_lo, unsigned long n_hi);

// Growth table row: chi for GAMMA0, for the smallest nonuniform family at
// this parity (GAMMA1 when n is odd, GAMMA0 otherwise), and for DELTA, plus
// the uniform/nonuniform quotient and the step ratios against the previous
// row (absent on the first row).
struct GrowthRow {
    unsigned long n = 0;
    ExactRational gamma0;
    ExactRational gamma_s;
    ExactRational delta;
    ExactRational delta_over_gamma_s;
    std::optional<ExactRational> gamma0_step;
    std::optional<ExactRational> delta_step;
};

std::vector<GrowthRow> growth_report(unsigned long n_lo, unsigned long n_hi);

}  // namespace spncov
