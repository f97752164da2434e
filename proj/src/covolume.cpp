#include "spncov/covolume.hpp"

#include <stdexcept>
#include <utility>

#include "spncov/bernoulli.hpp"

namespace spncov {

namespace {

void require_rank(unsigned long n) {
    if (n < 2) throw std::invalid_argument("rank parameter n must be >= 2");
}

void require_positive(const ExactRational& chi, const char* who) {
    if (chi.sign() <= 0) throw std::logic_error(std::string(who) + ": chi must be positive");
}

mpz_class two_pow(unsigned long e) {
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), 2, e);
    return t;
}

ChiResult assemble(const ExactRational& chi) {
    require_positive(chi, "chi result");
    ChiResult r{chi, std::nullopt, approx_display(chi, 4)};
    try {
        r.factored = factorize(chi);
    } catch (const UnfactoredCofactor&) {
        // Numerator outgrew the factorization envelope (large-n Bernoulli
        // numerators); the exact and approximate views still stand.
    }
    return r;
}

}  // namespace

LatticeDescriptor LatticeDescriptor::gamma0(unsigned long n) {
    require_rank(n);
    return {LatticeFamily::GAMMA0, n, QuadraticFieldData::rationals(),
            {{mpz_class(2), ParahoricType::SPECIAL_ALPHA0}}, 2};
}

LatticeDescriptor LatticeDescriptor::gamma1(unsigned long n) {
    require_rank(n);
    if (n % 2 == 0) throw std::invalid_argument("gamma1: defined for odd n only");
    return {LatticeFamily::GAMMA1, n, QuadraticFieldData::rationals(),
            {{mpz_class(2), ParahoricType::SPECIAL_ALPHA1}}, 2};
}

LatticeDescriptor LatticeDescriptor::delta(unsigned long n) {
    require_rank(n);
    return {LatticeFamily::DELTA, n, QuadraticFieldData::real_quadratic(5), {}, 1};
}

LatticeDescriptor LatticeDescriptor::sp_hurwitz(unsigned long n) {
    require_rank(n);
    return {LatticeFamily::SP_HURWITZ, n, QuadraticFieldData::rationals(),
            {{mpz_class(2), ParahoricType::SPECIAL_ALPHA0}}, 1};
}

LatticeDescriptor LatticeDescriptor::generic(unsigned long n, const QuadraticFieldData& field,
                                             std::vector<RamifiedPlace> places) {
    require_rank(n);
    return {LatticeFamily::GENERIC, n, field, std::move(places), 1};
}

std::string LatticeDescriptor::name() const {
    std::string base;
    switch (family) {
        case LatticeFamily::GAMMA0: base = "Gamma0"; break;
        case LatticeFamily::GAMMA1: base = "Gamma1"; break;
        case LatticeFamily::DELTA: base = "Delta"; break;
        case LatticeFamily::SP_HURWITZ: base = "SpHurwitz"; break;
        case LatticeFamily::GENERIC: base = "Generic"; break;
    }
    return base + "(n=" + std::to_string(n) + ")";
}

std::string family_tag(LatticeFamily f) {
    switch (f) {
        case LatticeFamily::GAMMA0: return "gamma0";
        case LatticeFamily::GAMMA1: return "gamma1";
        case LatticeFamily::DELTA: return "delta";
        case LatticeFamily::SP_HURWITZ: return "sp-hurwitz";
        case LatticeFamily::GENERIC: return "generic";
    }
    throw std::logic_error("family_tag: unknown family");
}

ExactRational chi_principal_exact(unsigned long n, const QuadraticFieldData& field,
                                  const std::vector<RamifiedPlace>& places) {
    require_rank(n);
    ExactRational out(static_cast<long>(n) + 1);
    for (const auto& p : places) {
        switch (p.type) {
            case ParahoricType::HYPERSPECIAL:
                throw std::invalid_argument(
                    "chi_principal: a hyperspecial place contributes no factor; "
                    "list ramified places only");
            case ParahoricType::SPECIAL_ALPHA0:
                out *= ExactRational(e_prime_alpha0(p.q, static_cast<long>(n)));
                break;
            case ParahoricType::SPECIAL_ALPHA1:
                out *= ExactRational(e_prime_alpha1(p.q, static_cast<long>(n)));
                break;
        }
    }
    ExactRational scale = ExactRational(1, 2).pow(field.degree);
    for (unsigned long j = 1; j <= n + 1; ++j)
        out *= dedekind_zeta_neg(field, j).abs() * scale;
    require_positive(out, "chi_principal");
    return out;
}

ExactRational chi_gamma0_exact(unsigned long n) {
    require_rank(n);
    ExactRational out(static_cast<long>(n) + 1, 2);
    for (unsigned long j = 1; j <= n + 1; ++j) {
        mpz_class t = two_pow(j);
        t += (j % 2 == 0) ? 1 : -1;
        out *= ExactRational(t) * bernoulli(2 * j).abs() / ExactRational(4 * static_cast<long>(j));
    }
    require_positive(out, "chi_gamma0");
    return out;
}

ExactRational chi_gamma1_exact(unsigned long n) {
    require_rank(n);
    if (n % 2 == 0) throw std::invalid_argument("chi_gamma1: defined for odd n only");
    ExactRational direct(static_cast<long>(n) + 1, 2);
    for (unsigned long j = 1; j <= n + 1; ++j) {
        mpz_class t = two_pow(2 * j);
        t -= 1;
        direct *= ExactRational(t) * bernoulli(2 * j).abs() / ExactRational(4 * static_cast<long>(j));
    }
    for (unsigned long j = 1; j <= (n + 1) / 2; ++j) {
        mpz_class t = two_pow(4 * j);
        t -= 1;
        direct /= ExactRational(t);
    }
    // Independent route through the local-factor quotient; the two assemblies
    // must agree bit for bit.
    ExactRational via_ratio =
        ExactRational(e_prime_alpha1(2, static_cast<long>(n)), e_prime_alpha0(2, static_cast<long>(n))) *
        chi_gamma0_exact(n);
    if (direct != via_ratio) throw std::logic_error("chi_gamma1: formula paths disagree");
    require_positive(direct, "chi_gamma1");
    return direct;
}

ExactRational chi_delta_exact(unsigned long n) {
    require_rank(n);
    QuadraticFieldData k = QuadraticFieldData::real_quadratic(5);
    ExactRational out(static_cast<long>(n) + 1);
    for (unsigned long j = 1; j <= n + 1; ++j)
        out *= dedekind_zeta_neg(k, j) / ExactRational(4);
    require_positive(out, "chi_delta");
    return out;
}

ExactRational chi_stabilizer_max_type_exact(unsigned long n, const QuadraticFieldData& field,
                                            const std::vector<mpz_class>& residue_sizes) {
    require_rank(n);
    for (const auto& q : residue_sizes) require_prime_power(q);
    ExactRational out(static_cast<long>(n) + 1);
    ExactRational scale = ExactRational(1, 2).pow(field.degree);
    for (unsigned long j = 1; j <= n + 1; ++j) {
        ExactRational factor = dedekind_zeta_neg(field, j).abs() * scale;
        for (const auto& q : residue_sizes) {
            mpz_class qj;
            mpz_pow_ui(qj.get_mpz_t(), q.get_mpz_t(), j);
            qj += (j % 2 == 0) ? 1 : -1;
            factor *= ExactRational(qj);
        }
        out *= factor;
    }
    require_positive(out, "chi_stabilizer_max_type");
    return out;
}

ExactRational orbifold_chi_exact(const LatticeDescriptor& lattice) {
    require_rank(lattice.n);
    if (lattice.principal_index < 1)
        throw std::invalid_argument("orbifold_chi: principal_index must be >= 1");
    ExactRational assembled = chi_principal_exact(lattice.n, lattice.field, lattice.places) /
                              ExactRational(lattice.principal_index);
    ExactRational closed;
    switch (lattice.family) {
        case LatticeFamily::GAMMA0: closed = chi_gamma0_exact(lattice.n); break;
        case LatticeFamily::GAMMA1: closed = chi_gamma1_exact(lattice.n); break;
        case LatticeFamily::DELTA: closed = chi_delta_exact(lattice.n); break;
        default: return assembled;
    }
    if (closed != assembled)
        throw std::logic_error(lattice.name() + ": closed form and local assembly disagree");
    return closed;
}

ChiResult chi_principal(unsigned long n, const QuadraticFieldData& field,
                        const std::vector<RamifiedPlace>& places) {
    return assemble(chi_principal_exact(n, field, places));
}

ChiResult chi_gamma0(unsigned long n) { return assemble(chi_gamma0_exact(n)); }

ChiResult chi_gamma1(unsigned long n) { return assemble(chi_gamma1_exact(n)); }

ChiResult chi_delta(unsigned long n) { return assemble(chi_delta_exact(n)); }

ChiResult chi_stabilizer_max_type(unsigned long n, const QuadraticFieldData& field,
                                  const std::vector<mpz_class>& residue_sizes) {
    return assemble(chi_stabilizer_max_type_exact(n, field, residue_sizes));
}

ChiResult orbifold_chi(const LatticeDescriptor& lattice) {
    return assemble(orbifold_chi_exact(lattice));
}

ExactRational orbifold_volume(const LatticeDescriptor& lattice, const ExactRational& vol_unit) {
    if (vol_unit.sign() <= 0)
        throw std::invalid_argument("orbifold_volume: volume unit must be positive");
    return orbifold_chi_exact(lattice) * vol_unit / ExactRational(static_cast<long>(lattice.n) + 1);
}

MinReport min_lattice(unsigned long n) {
    require_rank(n);
    std::vector<ScanEntry> candidates;
    candidates.push_back({LatticeDescriptor::gamma0(n), chi_gamma0_exact(n)});
    if (n % 2 == 1) candidates.push_back({LatticeDescriptor::gamma1(n), chi_gamma1_exact(n)});
    candidates.push_back({LatticeDescriptor::delta(n), chi_delta_exact(n)});
    const ScanEntry* best = &candidates.front();
    for (const auto& c : candidates)
        if (c.chi < best->chi) best = &c;
    return {best->desc, assemble(best->chi), candidates};
}

GlobalMinReport global_min(unsigned long n_lo, unsigned long n_hi) {
    require_rank(n_lo);
    if (n_hi < n_lo) throw std::invalid_argument("global_min: empty range");
    std::optional<ScanEntry> overall;
    std::optional<ScanEntry> uniform;
    unsigned long overall_ties = 0;
    unsigned long uniform_ties = 0;
    auto consider = [](std::optional<ScanEntry>& slot, unsigned long& ties, ScanEntry e) {
        if (!slot || e.chi < slot->chi) {
            slot = std::move(e);
            ties = 1;
        } else if (e.chi == slot->chi) {
            ++ties;
        }
    };
    for (unsigned long n = n_lo; n <= n_hi; ++n) {
        consider(overall, overall_ties, {LatticeDescriptor::gamma0(n), chi_gamma0_exact(n)});
        if (n % 2 == 1)
            consider(overall, overall_ties, {LatticeDescriptor::gamma1(n), chi_gamma1_exact(n)});
        ScanEntry d{LatticeDescriptor::delta(n), chi_delta_exact(n)};
        consider(uniform, uniform_ties, d);
        consider(overall, overall_ties, std::move(d));
    }
    GlobalMinReport report;
    report.n_lo = n_lo;
    report.n_hi = n_hi;
    report.overall_winner = overall->desc;
    report.overall_chi = assemble(overall->chi);
    report.overall_unique = overall_ties == 1;
    report.uniform_winner = uniform->desc;
    report.uniform_chi = assemble(uniform->chi);
    report.uniform_unique = uniform_ties == 1;
    return report;
}

std::vector<GrowthRow> growth_report(unsigned long n_lo, unsigned long n_hi) {
    require_rank(n_lo);
    if (n_hi < n_lo) throw std::invalid_argument("growth_report: empty range");
    std::vector<GrowthRow> rows;
    rows.reserve(n_hi - n_lo + 1);
    for (unsigned long n = n_lo; n <= n_hi; ++n) {
        GrowthRow row;
        row.n = n;
        row.gamma0 = chi_gamma0_exact(n);
        row.gamma_s = (n % 2 == 1) ? chi_gamma1_exact(n) : row.gamma0;
        row.delta = chi_delta_exact(n);
        row.delta_over_gamma_s = row.delta / row.gamma_s;
        if (!rows.empty()) {
            row.gamma0_step = row.gamma0 / rows.back().gamma0;
            row.delta_step = row.delta / rows.back().delta;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace spncov
