#include <gtest/gtest.h>

#include <vector>

#include <realgz/goettsche.hpp>
#include <realgz/partitions.hpp>
#include <realgz/strata.hpp>

using namespace realgz;

namespace {

const PolyEC a = symbol_a();
const PolyEC c = symbol_c();
const PolyEC one(Rational(1));

PolyEC falling(const PolyEC& x, unsigned k)
{
    PolyEC out = one;
    for (unsigned i = 0; i < k; ++i) {
        out *= x - PolyEC(Rational(i));
    }
    return out;
}

// Plain long-integer convolution powers of the partition series.
std::vector<long> naive_power_of_partition_series(unsigned power, std::size_t order)
{
    std::vector<long> base;
    for (unsigned n = 0; n <= order; ++n) {
        base.push_back(static_cast<long>(partitions::enumerate(n).size()));
    }
    std::vector<long> acc(order + 1, 0);
    acc[0] = 1;
    for (unsigned k = 0; k < power; ++k) {
        std::vector<long> next(order + 1, 0);
        for (std::size_t i = 0; i <= order; ++i) {
            for (std::size_t j = 0; i + j <= order; ++j) {
                next[i + j] += acc[i] * base[j];
            }
        }
        acc = next;
    }
    return acc;
}

} // namespace

TEST(Topology, ParityIsEnforced)
{
    EXPECT_THROW(numeric_topology(3, 24), domain_error);
    EXPECT_THROW(numeric_topology(0, 1), domain_error);
    EXPECT_NO_THROW(numeric_topology(-18, 24));
    EXPECT_THROW(real_hilbert_series(Topology<Rational>{Rational(1), Rational(2)}, 3), domain_error);
    EXPECT_THROW(welschinger_series(Topology<Rational>{Rational(1, 2), Rational(5, 2)}, 3), domain_error);
}

TEST(RealHilbertSeries, PublishedLowGenusPolynomials)
{
    const auto s = real_hilbert_series(symbolic_topology(), 4);
    EXPECT_EQ(s[0], one);
    EXPECT_EQ(s[1], a);
    EXPECT_EQ(s[2], (a * a + c) * Rational(1, 2) - a);
    EXPECT_EQ(s[3], falling(a, 3) * Rational(1, 6) + (c * a - a * a + a * Rational(2)) * Rational(1, 2));
    EXPECT_EQ(s[4], falling(a, 4) * Rational(1, 24)
                        + (c * c + c * a * a * Rational(2) - c * a * Rational(4) - a * a * a * Rational(2)
                           + c * Rational(6) + a * a * Rational(11) - a * Rational(6))
                              * Rational(1, 8));
}

TEST(WelschingerSeries, Examples)
{
    for (long er : {-18L, -4L, 0L, 6L, 20L}) {
        EXPECT_EQ(welschinger_series(numeric_topology(er, 24), 1)[1], Rational(-er));
    }
    EXPECT_EQ(welschinger_series(numeric_topology(20, 24), 2)[2], 192);
    EXPECT_EQ(welschinger_series(numeric_topology(-16, 24), 3)[3], 1152);
    EXPECT_EQ(welschinger_series(numeric_topology(-18, 24), 3)[3], 1536);
}

TEST(WelschingerSeries, CliExampleTopologyByHand)
{
    // (1+q)^{-20}(1+q^2)^{-20}(1+q^3)^{-20}(1-q^2)^{-2} through q^3:
    // q^2: 210 - 20 + 2 = 192; q^3: -1540 + 400 - 20 - 40 = -1200.
    const auto s = welschinger_series(numeric_topology(20, 24), 3);
    EXPECT_EQ(s[0], 1);
    EXPECT_EQ(s[1], -20);
    EXPECT_EQ(s[2], 192);
    EXPECT_EQ(s[3], -1200);
}

TEST(SignedCount, Examples)
{
    const auto r0 = signed_count(numeric_topology(7, 25), 0);
    EXPECT_EQ(r0.signed_count, 1);
    EXPECT_EQ(r0.euler, 1);

    const auto r2 = signed_count(numeric_topology(2, 24), 2);
    EXPECT_EQ(abs(r2.signed_count), 12);
    EXPECT_EQ(r2.lower_bound, 12);

    // (a^2 - 2a + 24)/2 at a = 0.
    const auto r0_2 = signed_count(numeric_topology(0, 24), 2);
    EXPECT_EQ(r0_2.euler, 12);
    EXPECT_EQ(r0_2.euler, BigInt(strata::hilbert(numeric_topology(0, 24), 2).get_num()));
}

TEST(SignedCount, ReportInvariant)
{
    for (long er = -20; er <= 20; er += 3) {
        const auto top = numeric_topology(er, er % 2 == 0 ? 24 : 25);
        for (std::size_t g = 0; g <= 10; ++g) {
            const auto r = signed_count(top, g);
            EXPECT_EQ(r.signed_count, g % 2 == 0 ? r.euler : BigInt(-r.euler));
            EXPECT_EQ(r.lower_bound, abs(r.euler));
        }
    }
}

TEST(ComplexGoettsche, Examples)
{
    EXPECT_EQ(complex_goettsche_series(Rational(0), 8), Series<Rational>::one(8));

    const auto p = complex_goettsche_series(Rational(1), 20);
    for (unsigned n = 0; n <= 20; ++n) {
        EXPECT_EQ(p[n], Rational(partitions::enumerate(n).size()));
    }

    const auto yz = complex_goettsche_series(Rational(24), 8);
    const auto naive = naive_power_of_partition_series(24, 8);
    for (std::size_t n = 0; n <= 8; ++n) {
        EXPECT_EQ(yz[n], Rational(naive[n])) << n;
    }
    EXPECT_EQ(yz[0], 1);
    EXPECT_EQ(yz[1], 24);
    EXPECT_EQ(yz[2], 324);
    EXPECT_EQ(yz[3], 3200);
    EXPECT_EQ(yz[4], 25650);
}

TEST(RealSymmetricSeries, Examples)
{
    for (long er : {-6L, 0L, 5L}) {
        EXPECT_EQ(real_symmetric_series(numeric_topology(er, er + 10), 1)[1], Rational(er));
    }
    EXPECT_EQ(real_symmetric_series(numeric_topology(2, 4), 2)[2], 4);

    // e_R = 0: (1 - t^2)^{-e_C/2}, the complex series of e_C/2 in t^2.
    const auto s = real_symmetric_series(numeric_topology(0, 10), 12);
    const auto expected = pow(Series<Rational>(12, {1, 0, -1}), Rational(-5));
    EXPECT_EQ(s, expected);
}

TEST(Substitution, NegatingQTurnsEulerSeriesIntoWelschingerSeries)
{
    const auto sym = symbolic_topology();
    EXPECT_EQ(substitute_negate(real_hilbert_series(sym, 24)), welschinger_series(sym, 24));
    for (long er = -20; er <= 20; er += 5) {
        for (long ec : {er, er - 2, er + 2, er + 24}) {
            const auto top = numeric_topology(er, ec);
            EXPECT_EQ(substitute_negate(real_hilbert_series(top, 24)), welschinger_series(top, 24));
        }
    }
}

TEST(Specialization, EmptyRealLocusGivesComplexSeriesInQSquared)
{
    for (long ec : {0L, 2L, 24L, 48L}) {
        const auto real = real_hilbert_series(numeric_topology(0, ec), 20);
        const auto expected = substitute_power(complex_goettsche_series(Rational(ec / 2), 20), 2);
        EXPECT_EQ(real, expected) << ec;
    }
    // Symbolically: a = 0 leaves ∏ (1 - q^{2s})^{-c/2}.
    const auto sym = real_hilbert_series(symbolic_topology(), 10);
    const auto at_zero = map_coefficients(sym, [](const PolyEC& p) {
        PolyEC out;
        for (const auto& [e, coeff] : p.terms()) {
            if (e[0] == 0) {
                out += PolyEC::monomial(e, coeff);
            }
        }
        return out;
    });
    EXPECT_EQ(at_zero, substitute_power(complex_goettsche_series(PolyEC(c * Rational(1, 2)), 10), 2));
}

TEST(Integrality, SymbolicCoefficientsAreIntegerOnTheParityLattice)
{
    const auto sym = symbolic_topology();
    const auto hilb = real_hilbert_series(sym, 12);
    const auto welsch = welschinger_series(sym, 12);
    const auto symm = real_symmetric_series(sym, 12);
    for (long er = -20; er <= 20; ++er) {
        for (long ec : {er, er - 2, er + 2, 24L}) {
            if ((ec - er) % 2 != 0) {
                continue;
            }
            for (std::size_t g = 0; g <= 12; ++g) {
                EXPECT_TRUE(is_integer(evaluate(hilb[g], Rational(er), Rational(ec)))) << er << "," << ec << "," << g;
                EXPECT_TRUE(is_integer(evaluate(welsch[g], Rational(er), Rational(ec))));
                EXPECT_TRUE(is_integer(evaluate(symm[g], Rational(er), Rational(ec))));
            }
        }
    }
}

TEST(Consistency, GenusThreeQuarticValuesAgree)
{
    const auto e3 = real_hilbert_series(numeric_topology(-16, 24), 3)[3];
    EXPECT_EQ(e3, -1152);
    EXPECT_EQ(-e3, welschinger_series(numeric_topology(-16, 24), 3)[3]);
}

TEST(SymbolicEvaluation, MatchesNumericModeEverywhere)
{
    const auto sym = real_hilbert_series(symbolic_topology(), 14);
    for (long er : {-18L, -3L, 0L, 11L, 20L}) {
        for (long ec : {er, er + 4, er - 6}) {
            EXPECT_EQ(evaluate(sym, Rational(er), Rational(ec)), real_hilbert_series(numeric_topology(er, ec), 14));
        }
    }
}
