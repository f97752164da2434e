#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "spncov/covolume.hpp"

using spncov::ChiResult;
using spncov::ExactRational;
using spncov::FactoredRational;
using spncov::LatticeDescriptor;
using spncov::LatticeFamily;
using spncov::ParahoricType;
using spncov::QuadraticFieldData;
using spncov::RamifiedPlace;

namespace {

const QuadraticFieldData kQ = QuadraticFieldData::rationals();
const QuadraticFieldData kQ5 = QuadraticFieldData::real_quadratic(5);

std::vector<RamifiedPlace> at2(ParahoricType t) { return {{mpz_class(2), t}}; }

FactoredRational frozen(std::map<mpz_class, long> f) { return FactoredRational(1, std::move(f)); }

}  // namespace

// Every exact-table cell, frozen as a factor map, checked against both the
// closed form and the generic local assembly.
TEST_CASE("exact table cells, both formula paths") {
    struct Cell {
        LatticeDescriptor desc;
        FactoredRational expected;
        const char* display;
    };
    const Cell cells[] = {
        {LatticeDescriptor::gamma0(2), frozen({{2, -11}, {3, -3}}), "1/(2^11·3^3)"},
        {LatticeDescriptor::gamma0(3), frozen({{2, -14}, {3, -5}, {5, -1}, {17, 1}}),
         "17/(2^14·3^5·5)"},
        {LatticeDescriptor::gamma0(4), frozen({{2, -19}, {3, -6}, {11, -1}, {17, 1}, {31, 1}}),
         "17·31/(2^19·3^6·11)"},
        {LatticeDescriptor::gamma0(5),
         frozen({{2, -22}, {3, -7}, {5, -1}, {7, -1}, {11, -1}, {17, 1}, {31, 1}, {691, 1}}),
         "17·31·691/(2^22·3^7·5·7·11)"},
        {LatticeDescriptor::gamma1(3), frozen({{2, -14}, {3, -2}, {5, -2}}), "1/(2^14·3^2·5^2)"},
        {LatticeDescriptor::gamma1(5),
         frozen({{2, -22}, {3, -3}, {5, -3}, {7, -1}, {13, -1}, {31, 1}, {691, 1}}),
         "31·691/(2^22·3^3·5^3·7·13)"},
        {LatticeDescriptor::delta(2), frozen({{2, -10}, {3, -3}, {5, -3}, {7, -1}, {67, 1}}),
         "67/(2^10·3^3·5^3·7)"},
        {LatticeDescriptor::delta(3),
         frozen({{2, -13}, {3, -5}, {5, -4}, {7, -1}, {19, 2}, {67, 1}}),
         "19^2·67/(2^13·3^5·5^4·7)"},
        {LatticeDescriptor::delta(4),
         frozen({{2, -18}, {3, -6}, {5, -5}, {7, -1}, {11, -1}, {19, 2}, {67, 1}, {191, 1}, {2161, 1}}),
         "19^2·67·191·2161/(2^18·3^6·5^5·7·11)"},
    };
    for (const auto& cell : cells) {
        CAPTURE(cell.desc.name());
        ExactRational closed;
        switch (cell.desc.family) {
            case LatticeFamily::GAMMA0: closed = spncov::chi_gamma0_exact(cell.desc.n); break;
            case LatticeFamily::GAMMA1: closed = spncov::chi_gamma1_exact(cell.desc.n); break;
            default: closed = spncov::chi_delta_exact(cell.desc.n); break;
        }
        ExactRational assembled =
            spncov::chi_principal_exact(cell.desc.n, cell.desc.field, cell.desc.places) /
            ExactRational(cell.desc.principal_index);
        CHECK(closed == assembled);
        CHECK(closed == cell.expected.to_rational());
        CHECK(spncov::factorize(closed) == cell.expected);
        CHECK(cell.expected.to_string() == cell.display);
    }
}

TEST_CASE("approximate table strings") {
    CHECK(spncov::chi_gamma0(2).approx == "1.808e-5");
    CHECK(spncov::chi_gamma1(3).approx == "2.712e-7");
    CHECK(spncov::chi_gamma0(4).approx == "1.253e-7");
    CHECK(spncov::chi_gamma1(5).approx == "1.662e-8");
    CHECK(spncov::chi_gamma0(10).approx == "1.736e8");
    CHECK(spncov::chi_gamma1(15).approx == "8.624e55");
    CHECK(spncov::chi_gamma0(20).approx == "1.654e151");

    CHECK(spncov::chi_delta(2).approx == "2.769e-6");
    CHECK(spncov::chi_delta(3).approx == "2.777e-6");
    CHECK(spncov::chi_delta(4).approx == "2.171e-4");
    CHECK(spncov::chi_delta(5).approx == "3.162");
    CHECK(spncov::approx_decimal(spncov::chi_delta_exact(5), 4) == "3.162e0");
    CHECK(spncov::chi_delta(10).approx == "5.771e64");
    CHECK(spncov::chi_delta(15).approx == "3.510e218");
    CHECK(spncov::chi_delta(20).approx == "1.833e478");
}

TEST_CASE("closed forms match the generic assembly on ranges") {
    for (unsigned long n = 2; n <= 15; ++n) {
        CAPTURE(n);
        CHECK(spncov::chi_gamma0_exact(n) ==
              spncov::chi_principal_exact(n, kQ, at2(ParahoricType::SPECIAL_ALPHA0)) /
                  ExactRational(2));
        if (n % 2 == 1)
            CHECK(spncov::chi_gamma1_exact(n) ==
                  spncov::chi_principal_exact(n, kQ, at2(ParahoricType::SPECIAL_ALPHA1)) /
                      ExactRational(2));
        if (n <= 10)
            CHECK(spncov::chi_delta_exact(n) == spncov::chi_principal_exact(n, kQ5, {}));
    }
}

TEST_CASE("hurwitz principal lattice sits at index two under its normalizer") {
    for (unsigned long n = 2; n <= 9; ++n) {
        ExactRational principal =
            spncov::orbifold_chi_exact(LatticeDescriptor::sp_hurwitz(n));
        CHECK(principal == ExactRational(2) * spncov::chi_gamma0_exact(n));
    }
    // Anchor: chi of the n=2 principal lattice is 1/27648 = 1/(2^10 3^3).
    CHECK(spncov::orbifold_chi_exact(LatticeDescriptor::sp_hurwitz(2)) ==
          ExactRational(1, 27648));
}

TEST_CASE("stabilizer assembly distributes the local factors") {
    const std::vector<std::vector<mpz_class>> residue_sets = {
        {mpz_class(2)}, {mpz_class(2), mpz_class(3)}, {mpz_class(5)}, {}};
    for (const auto& residues : residue_sets) {
        std::vector<RamifiedPlace> places;
        for (const auto& q : residues) places.push_back({q, ParahoricType::SPECIAL_ALPHA0});
        for (unsigned long n = 2; n <= 6; ++n) {
            CAPTURE(n);
            CHECK(spncov::chi_stabilizer_max_type_exact(n, kQ, residues) ==
                  spncov::chi_principal_exact(n, kQ, places));
        }
    }
    // Same identity over the quadratic field, residue size 4 (an inert even place).
    CHECK(spncov::chi_stabilizer_max_type_exact(3, kQ5, {mpz_class(4)}) ==
          spncov::chi_principal_exact(3, kQ5, {{mpz_class(4), ParahoricType::SPECIAL_ALPHA0}}));
}

TEST_CASE("minimal family at fixed n") {
    auto m2 = spncov::min_lattice(2);
    CHECK(m2.winner.family == LatticeFamily::DELTA);
    CHECK(m2.chi.exact == spncov::chi_delta_exact(2));
    CHECK(m2.candidates.size() == 2);

    auto m3 = spncov::min_lattice(3);
    CHECK(m3.winner.family == LatticeFamily::GAMMA1);
    CHECK(m3.chi.exact == ExactRational(1, 3686400));
    CHECK(m3.candidates.size() == 3);

    auto m4 = spncov::min_lattice(4);
    CHECK(m4.winner.family == LatticeFamily::GAMMA0);

    auto m5 = spncov::min_lattice(5);
    CHECK(m5.winner.family == LatticeFamily::GAMMA1);
    CHECK(m5.chi.factored.has_value());
    CHECK(m5.chi.factored->to_string() == "31·691/(2^22·3^3·5^3·7·13)");
}

TEST_CASE("range scan finds the global minimum") {
    auto report = spncov::global_min(2, 12);
    CHECK(report.overall_winner.family == LatticeFamily::GAMMA1);
    CHECK(report.overall_winner.n == 5);
    CHECK(report.overall_unique);
    CHECK(report.overall_chi.exact == spncov::chi_gamma1_exact(5));
    CHECK(report.uniform_winner.family == LatticeFamily::DELTA);
    CHECK(report.uniform_winner.n == 2);
    CHECK(report.uniform_unique);
    CHECK(report.uniform_chi.approx == "2.769e-6");
}

TEST_CASE("growth rows and step ratios") {
    auto rows = spncov::growth_report(2, 8);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0].n == 2);
    CHECK(rows[0].gamma0 == ExactRational(1, 55296));
    CHECK(rows[0].gamma_s == rows[0].gamma0);
    CHECK(!rows[0].gamma0_step.has_value());
    for (size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(rows[i].n);
        CHECK(rows[i].gamma0.sign() > 0);
        CHECK(rows[i].delta.sign() > 0);
        if (rows[i].n % 2 == 1)
            CHECK(rows[i].gamma_s == spncov::chi_gamma1_exact(rows[i].n));
        else
            CHECK(rows[i].gamma_s == rows[i].gamma0);
        CHECK(rows[i].delta_over_gamma_s == rows[i].delta / rows[i].gamma_s);
        if (i > 0) {
            REQUIRE(rows[i].gamma0_step.has_value());
            CHECK(*rows[i].gamma0_step == rows[i].gamma0 / rows[i - 1].gamma0);
            CHECK(*rows[i].delta_step == rows[i].delta / rows[i - 1].delta);
        }
    }
    // The uniform/nonuniform quotient grows monotonically past the crossover.
    for (size_t i = 2; i < rows.size(); ++i)
        CHECK(rows[i].delta_over_gamma_s > rows[i - 1].delta_over_gamma_s);
}

TEST_CASE("descriptor dispatch and volumes") {
    CHECK(spncov::orbifold_chi(LatticeDescriptor::gamma0(3)).exact ==
          spncov::chi_gamma0_exact(3));
    CHECK(spncov::orbifold_chi(LatticeDescriptor::gamma1(3)).exact ==
          spncov::chi_gamma1_exact(3));
    CHECK(spncov::orbifold_chi(LatticeDescriptor::delta(4)).exact ==
          spncov::chi_delta_exact(4));
    CHECK(spncov::orbifold_chi(
              LatticeDescriptor::generic(2, kQ, at2(ParahoricType::SPECIAL_ALPHA0)))
              .exact == ExactRational(1, 27648));

    CHECK(LatticeDescriptor::gamma0(2).name() == "Gamma0(n=2)");
    CHECK(spncov::family_tag(LatticeFamily::SP_HURWITZ) == "sp-hurwitz");
    CHECK(!LatticeDescriptor::gamma0(2).uniform());
    CHECK(LatticeDescriptor::delta(2).uniform());

    // chi * unit / (n+1), pinned at n=2 with unit 1: (1/55296)/3.
    CHECK(spncov::orbifold_volume(LatticeDescriptor::gamma0(2), ExactRational(1)) ==
          ExactRational(1, 165888));
    CHECK(spncov::orbifold_volume(LatticeDescriptor::delta(2), ExactRational(24192000)) ==
          ExactRational(67, 3));
}

TEST_CASE("large-n results keep exact and approximate views when factoring gives out") {
    ChiResult big = spncov::chi_gamma0(20);
    CHECK(big.exact.sign() > 0);
    CHECK(big.approx == "1.654e151");
    CHECK(!big.factored.has_value());
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(spncov::chi_gamma0_exact(1), std::invalid_argument);
    CHECK_THROWS_AS(spncov::chi_gamma1_exact(4), std::invalid_argument);
    CHECK_THROWS_AS(LatticeDescriptor::gamma1(4), std::invalid_argument);
    CHECK_THROWS_AS(
        spncov::chi_principal_exact(2, kQ, at2(ParahoricType::HYPERSPECIAL)),
        std::invalid_argument);
    CHECK_THROWS_AS(
        spncov::chi_principal_exact(2, kQ, {{mpz_class(6), ParahoricType::SPECIAL_ALPHA0}}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        spncov::chi_principal_exact(4, kQ, at2(ParahoricType::SPECIAL_ALPHA1)),
        std::invalid_argument);
    CHECK_THROWS_AS(spncov::chi_stabilizer_max_type_exact(2, kQ, {mpz_class(12)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        spncov::orbifold_volume(LatticeDescriptor::gamma0(2), ExactRational(0)),
        std::invalid_argument);
    CHECK_THROWS_AS(
        spncov::orbifold_volume(LatticeDescriptor::gamma0(2), ExactRational(-3)),
        std::invalid_argument);
    CHECK_THROWS_AS(spncov::global_min(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(spncov::growth_report(1, 4), std::invalid_argument);
}
