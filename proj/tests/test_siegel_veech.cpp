#include <gtest/gtest.h>

#include "origami/orbit.hpp"
#include "origami/siegel_veech.hpp"
#include "origami/strata.hpp"
#include "test_support.hpp"

using namespace origami;
using namespace origami::testing;

namespace {
Rational r(std::int64_t p, std::int64_t q = 1) { return Rational::make(p, q); }
QuadraticSignature q(std::vector<int> d) { return QuadraticSignature(std::move(d)); }
}  // namespace

TEST(SiegelVeech, NamedOrbits) {
    const Orbit l = sl2z_orbit(l_origami());
    std::vector<Rational> per_surface;
    for (const auto& m : l.members) per_surface.push_back(horizontal_cylinders(m).modulus_sum());
    std::sort(per_surface.begin(), per_surface.end());
    EXPECT_EQ(per_surface, (std::vector<Rational>{r(1, 3), r(3, 2), r(3, 2)}));
    EXPECT_EQ(normalized_svc(l).svc, r(10, 9));
    EXPECT_EQ(normalized_svc(l).c.pi2_times_c, r(10, 3));
    EXPECT_EQ(normalized_svc(sl2z_orbit(wollmilchsau())).svc, r(1, 2));
    EXPECT_EQ(normalized_svc(sl2z_orbit(unit_torus())).svc, r(1));
}

TEST(SiegelVeech, AbelianSums) {
    EXPECT_EQ(sum_exponents_abelian_orbit(sl2z_orbit(l_origami())).value, r(4, 3));
    EXPECT_EQ(sum_exponents_abelian_orbit(sl2z_orbit(wollmilchsau())).value, r(1));
    EXPECT_EQ(sum_exponents_abelian_orbit(sl2z_orbit(unit_torus())).value, r(1));
    EXPECT_EQ(sum_exponents_abelian_orbit(sl2z_orbit(four_square_h11())).value, r(3, 2));
}

TEST(SiegelVeech, QuadraticSums) {
    EXPECT_EQ(sum_exponents_quadratic_plus(q({-1, -1, -1, -1}), r(1, 2)).value, r(0));
    EXPECT_EQ(sum_exponents_quadratic_plus(q({1, -1, -1, -1, -1, -1}), r(5, 9)).value, r(0));
    for (const Rational& s : {r(0), r(1, 3), r(7, 5)}) EXPECT_EQ(sum_exponents_quadratic_plus(q({2, 1, 1}), s).value, r(19, 72) + s);
    EXPECT_THROW(sum_exponents_quadratic_plus(q({-1, -1, -1, -1}), r(1, 3)), consistency_error);

    EXPECT_EQ(sum_exponents_minus(q({-1, -1, -1, -1}), r(0)).value, r(1));
    EXPECT_EQ(sum_exponents_minus(q({1, -1, -1, -1, -1, -1}), r(0)).value, r(4, 3));
    EXPECT_EQ(sum_exponents_minus(q({4, 4}), r(2, 7)).value, r(2, 7));
    for (const Rational& s : {r(0), r(1, 3), r(7, 5)})
        EXPECT_EQ(sum_exponents_minus(q({2, 1, 1}), s).value, s + odd_defect(q({2, 1, 1})));
}

TEST(SiegelVeech, GenusZeroAgreesWithCoveringOrbit) {
    // Q(-1^4) is covered by the torus; Q(1,-1^5) by the genus-2 L-shaped orbit.
    EXPECT_EQ(Rational(2) * genus0_values(q({-1, -1, -1, -1})).pi2_times_c, normalized_svc(sl2z_orbit(unit_torus())).c.pi2_times_c);
    EXPECT_EQ(Rational(2) * genus0_values(q({1, -1, -1, -1, -1, -1})).pi2_times_c, normalized_svc(sl2z_orbit(l_origami())).c.pi2_times_c);
    // Genus-0 self-consistency: the plus sum vanishes for the svc implied by the formula.
    for (const auto& d : std::vector<std::vector<int>>{{-1, -1, -1, -1}, {1, -1, -1, -1, -1, -1}, {2, -1, -1, -1, -1, -1, -1}, {3, 1, -1, -1, -1, -1, -1, -1, -1, -1}}) {
        const QuadraticSignature sig(d);
        EXPECT_EQ(sum_exponents_quadratic_plus(sig, genus0_values(sig).pi2_times_c / 3).value, r(0));
    }
}

TEST(CycleStatistic, OnEnumeratedOrbits) {
    EXPECT_EQ(cycle_statistic(sl2z_orbit(unit_torus())), r(1));
    int three = 0, two_two = 0;
    for (int n = 1; n <= 7; ++n)
        for (const auto& orb : enumerate_stratum(n, std::nullopt)) {
            const Rational cs = cycle_statistic(orb);
            EXPECT_EQ(cs, normalized_svc(orb).svc);
            const Rational sum = sum_exponents_abelian_orbit(orb).value;
            EXPECT_GE(sum, r(1));
            EXPECT_LE(sum, r(orb.signature.genus()));
            EXPECT_EQ(sum_exponents_abelian_orbit(sl2z_orbit(orb.members.back())).value, sum);
            const auto type = orb.representative().commutator().cycle_type();
            std::vector<int> nontrivial;
            for (int len : type)
                if (len > 1) nontrivial.push_back(len);
            if (nontrivial == std::vector<int>{3}) {
                EXPECT_EQ(cs, r(10, 9));
                ++three;
            } else if (nontrivial == std::vector<int>{2, 2}) {
                EXPECT_EQ(cs, r(5, 4));
                ++two_two;
            }
        }
    EXPECT_GT(three, 3);
    EXPECT_GT(two_two, 3);
}
