#include <gtest/gtest.h>

#include <random>

#include "origami/origami.hpp"
#include "test_support.hpp"

using namespace origami;
using namespace origami::testing;

TEST(Permutation, ParsesCycleAndImageNotation) {
    const Permutation a = Permutation::parse("(1,2)(3,4)", 4);
    EXPECT_EQ(a.images(), (std::vector<int>{1, 0, 3, 2}));
    const Permutation b = Permutation::parse("[2,1,4,3]", 4);
    EXPECT_EQ(a, b);
    EXPECT_TRUE(Permutation::parse("()", 3).is_identity());
    EXPECT_EQ(a.to_cycle_string(), "(1,2)(3,4)");
    EXPECT_EQ(Permutation::identity(2).to_cycle_string(), "()");
    EXPECT_EQ(b.to_image_string(), "[2,1,4,3]");
}

TEST(Permutation, RejectsMalformedInput) {
    EXPECT_THROW(Permutation::parse("(1,4)", 3), parse_error);
    EXPECT_THROW(Permutation::parse("(1,1)", 3), parse_error);
    EXPECT_THROW(Permutation::parse("[1,1,2]", 3), parse_error);
    EXPECT_THROW(Permutation::parse("[1,2]", 3), parse_error);
    EXPECT_THROW(Permutation::parse("1,2", 3), parse_error);
    EXPECT_THROW(Permutation(std::vector<int>{0, 0}), domain_error);
}

TEST(Permutation, CompositionAppliesRightFactorFirst) {
    const Permutation s = Permutation::parse("(1,3)", 3);
    const Permutation t = Permutation::parse("(1,2)", 3);
    EXPECT_EQ((s * t).to_cycle_string(), "(1,2,3)");
    EXPECT_EQ(s * s, Permutation::identity(3));
    const Permutation c = Permutation::parse("(1,2,3,4,5)", 5);
    EXPECT_EQ(c.power(5), Permutation::identity(5));
    EXPECT_EQ(c.power(-1), c.inverse());
    EXPECT_EQ(c.power(7), c * c);
    EXPECT_EQ(c.cycle_type(), std::vector<int>{5});
    EXPECT_EQ(Permutation::parse("(1,2)", 4).cycle_type(), (std::vector<int>{2, 1, 1}));
}

TEST(OrigamiParse, AcceptsValidPairs) {
    const Origami l = parse_origami("n=3; h=(1,2); v=(1,3)");
    EXPECT_EQ(l.size(), 3);
    EXPECT_EQ(l.to_string(), "n=3; h=(1,2); v=(1,3)");
    EXPECT_EQ(parse_origami(l.to_string()), l);
    EXPECT_EQ(unit_torus().size(), 1);
    EXPECT_EQ(parse_origami("n=2; h=[2,1]; v=[1,2]").h().to_cycle_string(), "(1,2)");
    EXPECT_EQ(parse_origami("  n = 3 ;h=(1,2);  v=(1,3) "), l);
}

TEST(OrigamiParse, ReportsErrors) {
    try {
        parse_origami("n=3; h=(1,2); v=(1,4)");
        FAIL() << "expected a parse error";
    } catch (const parse_error& e) {
        EXPECT_NE(std::string(e.what()).find("symbol 4 out of range"), std::string::npos) << e.what();
        EXPECT_GT(e.position(), 0u);
    }
    EXPECT_THROW(parse_origami("n=3; h=(1,2)"), parse_error);
    EXPECT_THROW(parse_origami("n=x; h=(); v=()"), parse_error);
    EXPECT_THROW(parse_origami("n=3; h=(1,2); v=(1,2)"), disconnected_error);
    EXPECT_THROW(make_origami(Permutation::identity(2), Permutation::identity(3)), domain_error);
}

TEST(OrigamiCore, StrataOfNamedSurfaces) {
    EXPECT_EQ(stratum_of(l_origami()).degrees(), std::vector<int>{2});
    EXPECT_EQ(stratum_of(l_origami()).genus(), 2);
    EXPECT_EQ(stratum_of(wollmilchsau()).degrees(), (std::vector<int>{1, 1, 1, 1}));
    EXPECT_EQ(stratum_of(wollmilchsau()).genus(), 3);
    EXPECT_EQ(wollmilchsau().commutator().cycle_type(), (std::vector<int>{2, 2, 2, 2}));
    const Origami flat = parse_origami("n=4; h=(1,2)(3,4); v=(1,3)(2,4)");
    EXPECT_TRUE(stratum_of(flat).degrees().empty());
    EXPECT_EQ(stratum_of(flat).genus(), 1);
    EXPECT_EQ(stratum_of(unit_torus()).genus(), 1);
    EXPECT_EQ(stratum_of(four_square_h11()).degrees(), (std::vector<int>{1, 1}));
}

TEST(OrigamiCore, CanonicalForm) {
    const Origami l = l_origami();
    const Permutation sigma = Permutation::parse("(2,3)", 3);
    EXPECT_EQ(canonical_form(conjugate(l, sigma)), canonical_form(l));
    EXPECT_EQ(canonical_form(canonical_form(l)), canonical_form(l));
    EXPECT_NE(canonical_form(l), canonical_form(parse_origami("n=3; h=(1,2,3); v=(1,2)")));
}

TEST(OrigamiCore, Generators) {
    const Origami l = l_origami();
    const Origami tl = apply_generator(l, Generator::T);
    EXPECT_EQ(tl, parse_origami("n=3; h=(1,2); v=(1,2,3)"));
    EXPECT_EQ(apply_generator(tl, Generator::T), l);
    Origami r = l;
    for (int i = 0; i < 4; ++i) r = apply_generator(r, Generator::R);
    EXPECT_EQ(r, l);
}

TEST(OrigamiCore, Cylinders) {
    const auto l = horizontal_cylinders(l_origami());
    ASSERT_EQ(l.cylinders.size(), 2u);
    EXPECT_EQ(l.cylinders[0].width, 2);
    EXPECT_EQ(l.cylinders[0].height, 1);
    EXPECT_EQ(l.cylinders[1].width, 1);
    EXPECT_EQ(l.cylinders[1].height, 1);
    EXPECT_EQ(l.modulus_sum(), Rational::make(3, 2));

    const auto flat = horizontal_cylinders(parse_origami("n=4; h=(1,2)(3,4); v=(1,3)(2,4)"));
    ASSERT_EQ(flat.cylinders.size(), 1u);
    EXPECT_EQ(flat.cylinders[0].width, 2);
    EXPECT_EQ(flat.cylinders[0].height, 2);
    EXPECT_EQ(flat.modulus_sum(), Rational(1));

    const auto w = horizontal_cylinders(wollmilchsau());
    ASSERT_EQ(w.cylinders.size(), 2u);
    for (const auto& c : w.cylinders) {
        EXPECT_EQ(c.width, 4);
        EXPECT_EQ(c.height, 1);
    }
    EXPECT_EQ(w.modulus_sum(), Rational::make(1, 2));
}

TEST(OrigamiCore, StairAndTallCylinders) {
    // A 2x3 torus is a single cylinder of height 3; regluing its right column
    // with a shift introduces cone points that split it.
    const auto tall = horizontal_cylinders(parse_origami("n=6; h=(1,2)(3,4)(5,6); v=(1,3,5)(2,4,6)"));
    ASSERT_EQ(tall.cylinders.size(), 1u);
    EXPECT_EQ(tall.cylinders[0].height, 3);
    const Origami split = parse_origami("n=6; h=(1,2)(3,4)(5,6); v=(1,3,5)(2,6,4)");
    const auto c = horizontal_cylinders(split);
    EXPECT_EQ(c.area(), 6);
    EXPECT_EQ(c.modulus_sum(), inverse_cycle_length_sum(split.h()));
}

TEST(OrigamiCore, LatticeIndex) {
    EXPECT_EQ(lattice_index(l_origami()), 1);
    EXPECT_EQ(lattice_index(wollmilchsau()), 1);
    EXPECT_EQ(lattice_index(unit_torus()), 1);
    // Plain 2x2 torus cover: all holonomies lie in 2Z x 2Z.
    EXPECT_EQ(lattice_index(parse_origami("n=4; h=(1,2)(3,4); v=(1,3)(2,4)")), 4);
    // Doubled L (each square replaced by a 2x1 block) is not reduced.
    EXPECT_FALSE(is_reduced(parse_origami("n=6; h=(1,2,3,4)(5,6); v=(1,5)(2,6)")));
}

// Properties on random connected origamis.
class RandomOrigamis : public ::testing::TestWithParam<int> {};

TEST_P(RandomOrigamis, Invariants) {
    const int n = GetParam();
    std::mt19937_64 rng(1000 + n);
    for (int trial = 0; trial < 200; ++trial) {
        const Origami o = random_origami(n, rng);
        const AbelianSignature sig = stratum_of(o);

        const auto cyl = horizontal_cylinders(o);
        EXPECT_EQ(cyl.area(), n);
        EXPECT_EQ(cyl.modulus_sum(), inverse_cycle_length_sum(o.h()));
        EXPECT_EQ(euler_genus(o), sig.genus());
        int degree_sum = 0;
        for (int m : sig.degrees()) degree_sum += m;
        EXPECT_EQ(degree_sum, 2 * sig.genus() - 2);

        const Origami c = canonical_form(o);
        EXPECT_EQ(canonical_form(c), c);
        for (int k = 0; k < 5; ++k) EXPECT_EQ(canonical_form(conjugate(o, random_permutation(n, rng))), c);

        Origami r = o;
        for (int i = 0; i < 4; ++i) r = apply_generator(r, Generator::R);
        EXPECT_EQ(r, o);
        for (Generator g : {Generator::T, Generator::R}) {
            const Origami go = apply_generator(o, g);
            EXPECT_EQ(go.size(), n);
            EXPECT_TRUE(go.transitive());
            EXPECT_EQ(stratum_of(go).degrees(), sig.degrees());
        }
        const std::int64_t idx = lattice_index(o);
        EXPECT_GE(idx, 1);
        EXPECT_EQ(n % idx, 0) << o.to_string();
    }
}

INSTANTIATE_TEST_SUITE_P(Sizes, RandomOrigamis, ::testing::Range(1, 11));
