#include "support.hpp"

#include <gtest/gtest.h>

using namespace blowup;
using namespace blowup::testing;

namespace {

// Independent oracle: expand D . Y over basis products using only
//   H . H_k = H_{k-1},  E_i . E_{i,k} = -E_{i,k-1},  H . E_{i,k} = E_i . H_k = 0,
//   E_i . E_{j,k} = 0 for i != j.
std::vector<Rational> expand_product(const std::vector<Rational>& d, const std::vector<Rational>& y) {
    std::vector<Rational> out(d.size());
    for (std::size_t p = 0; p < d.size(); ++p)
        for (std::size_t q = 0; q < y.size(); ++q) {
            if (p != q) continue;
            out[p] += (p == 0 ? 1 : -1) * d[p] * y[q];
        }
    return out;
}

// Independent oracle for D^n from H^n = 1, E_i^n = (-1)^(n-1).
Rational top_power_oracle(const std::vector<Rational>& c, int n) {
    auto pw = [](Rational x, int e) {
        Rational out = 1;
        for (int i = 0; i < e; ++i) out *= x;
        return out;
    };
    Rational out = pw(c[0], n);
    for (std::size_t i = 1; i < c.size(); ++i) out += (n % 2 == 1 ? 1 : -1) * pw(c[i], n);
    return out;
}

}  // namespace

TEST(MakeClass, SignConvention) {
    const auto c = make_class(Ambient(3, 2), 1, form(1, {1, 1}));
    EXPECT_EQ(c.coeffs(), ints({1, -1, -1}));
}

TEST(MakeClass, CilibertoMirandaClass) {
    const auto c = make_class(Ambient(2, 10), 1, uniform_form(57, 18, 10));
    EXPECT_EQ(c.degree(), 57);
    for (int i = 1; i <= 10; ++i) EXPECT_EQ(c.multiplicity(i), 18);
    EXPECT_TRUE(c.is_divisor());
}

TEST(MakeClass, SecantVarietyClass) {
    const auto c = make_class(Ambient(4, 7), 3, uniform_form(3, 2, 7));
    EXPECT_EQ(c.dim(), 3);
    EXPECT_EQ(c.form().multiplicities, std::vector<Rational>(7, Rational(2)));
}

TEST(MakeClass, RejectsBadShapes) {
    EXPECT_THROW(make_class(Ambient(3, 2), 1, ints({1, 2})), Error);
    EXPECT_THROW(make_class(Ambient(3, 2), 3, ints({1, 2, 3})), Error);
    EXPECT_THROW(make_class(Ambient(3, 2), -1, ints({1, 2, 3})), Error);
    try {
        make_class(Ambient(3, 2), 3, ints({1, 2, 3}));
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidClass);
    }
}

TEST(Ambient, Validation) {
    EXPECT_THROW(Ambient(1, 3), Error);
    EXPECT_THROW(Ambient(3, -1), Error);
    EXPECT_THROW(Ambient(3, 3, config::SpanDim{4}), Error);
    EXPECT_THROW(Ambient(3, 3, config::SpanDim{0}), Error);
    EXPECT_NO_THROW(Ambient(3, 3, config::SpanDim{3}));
    EXPECT_THROW(Ambient(4, 10, config::PlanarNinePlus{1}), Error);  // r must be s+8
    EXPECT_NO_THROW(Ambient(4, 10, config::PlanarNinePlus{2}));
    EXPECT_THROW(Ambient(2, 10, config::PlanarNinePlus{2}), Error);  // n >= s+1
}

TEST(Ambient, SpanDimOneIsCollinear) {
    EXPECT_EQ(to_string(Ambient(3, 4, config::SpanDim{1}).config()), "collinear");
}

TEST(Ambient, ConfigTextRoundTrip) {
    for (const ConfigTag& t : {ConfigTag{config::VeryGeneral{}}, ConfigTag{config::LinearlyGeneral{}},
                               ConfigTag{config::Collinear{}}, ConfigTag{config::SpanDim{3}},
                               ConfigTag{config::PlanarNinePlus{2}}, ConfigTag{config::Custom{"mine"}}})
        EXPECT_EQ(to_string(parse_config(to_string(t))), to_string(t));
    EXPECT_THROW(parse_config("bogus"), Error);
}

TEST(FormRoundTrip, RandomRationalClasses) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 500; ++t) {
        const Ambient amb(2 + t % 5, t % 9);
        const auto c = random_class(rng, amb, 1);
        EXPECT_EQ(CycleClass::from_form(amb, 1, c.form()), c);
    }
}

TEST(IntersectDivisor, SecantExample) {
    const Ambient amb(4, 7);
    const auto quadric = make_class(amb, 3, uniform_form(2, 1, 7));
    const auto secant = make_class(amb, 3, uniform_form(3, 2, 7));
    const auto z = intersect_divisor(quadric, secant);
    EXPECT_EQ(z.dim(), 2);
    EXPECT_EQ(z.form().degree, 6);
    EXPECT_EQ(z.form().multiplicities, std::vector<Rational>(7, Rational(2)));
}

TEST(IntersectDivisor, HyperplaneIsIdentityOnDegree) {
    std::mt19937_64 rng(3);
    const Ambient amb(4, 5);
    const auto y = random_class(rng, amb, 2);
    const auto z = intersect_divisor(CycleClass::hyperplane(amb, 3), y);
    EXPECT_EQ(z.degree(), y.degree());
    for (int i = 1; i <= 5; ++i) EXPECT_EQ(z.multiplicity(i), 0);
}

TEST(IntersectDivisor, ExceptionalAgainstBasisExpansion) {
    const Ambient amb(3, 1);
    const auto e1 = CycleClass::exceptional(amb, 2, 1);
    const auto y = make_class(amb, 1, form(4, {3}));
    // E_1 . (4H_1 - 3E_{1,1}) = -3 (E_1 . E_{1,1}) = 3 E_{1,0}.
    EXPECT_EQ(intersect_divisor(e1, y).coeffs(), ints({0, 3}));
    EXPECT_EQ(intersect_divisor(e1, y).coeffs(), expand_product(e1.coeffs(), y.coeffs()));
}

TEST(IntersectDivisor, MatchesBasisExpansionOnRandomClasses) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        const Ambient amb(2 + t % 6, t % 8);
        const int dim = 1 + static_cast<int>(rng() % static_cast<unsigned>(amb.n() - 1));
        const auto d = random_class(rng, amb, amb.n() - 1);
        const auto y = random_class(rng, amb, dim);
        EXPECT_EQ(intersect_divisor(d, y).coeffs(), expand_product(d.coeffs(), y.coeffs()));
    }
}

TEST(IntersectDivisor, CommutesAndIsBilinear) {
    std::mt19937_64 rng(8);
    const Ambient amb(5, 6);
    for (int t = 0; t < 100; ++t) {
        const auto d1 = random_class(rng, amb, 4);
        const auto d2 = random_class(rng, amb, 4);
        const auto y = random_class(rng, amb, 3);
        const auto y2 = random_class(rng, amb, 3);
        const Rational lambda = random_rational(rng);
        EXPECT_EQ(intersect_divisor(d1, intersect_divisor(d2, y)), intersect_divisor(d2, intersect_divisor(d1, y)));
        EXPECT_EQ(intersect_divisor(d1, lambda * y + y2), lambda * intersect_divisor(d1, y) + intersect_divisor(d1, y2));
        EXPECT_EQ(intersect_divisor(lambda * d1 + d2, y), lambda * intersect_divisor(d1, y) + intersect_divisor(d2, y));
    }
}

TEST(IntersectDivisor, Errors) {
    const auto d = CycleClass::hyperplane(Ambient(3, 2), 2);
    try {
        intersect_divisor(d, CycleClass::hyperplane(Ambient(3, 3), 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::AmbientMismatch);
    }
    EXPECT_THROW(intersect_divisor(CycleClass::hyperplane(Ambient(3, 2), 1), CycleClass::hyperplane(Ambient(3, 2), 1)), Error);
    EXPECT_THROW(intersect_divisor(d, CycleClass::hyperplane(Ambient(3, 2), 0)), Error);
}

TEST(DegreePairing, QuadricThroughNineAgainstPushforward) {
    const Ambient amb(3, 9);
    const auto q = make_class(amb, 2, uniform_form(2, 1, 9));
    PointMultiplicityForm b{78, {21}};
    for (int i = 0; i < 8; ++i) b.multiplicities.emplace_back(18);
    EXPECT_EQ(degree_pairing(q, make_class(amb, 1, b)), -9);
}

TEST(DegreePairing, HyperplaneLine) {
    const Ambient amb(3, 2);
    EXPECT_EQ(degree_pairing(CycleClass::hyperplane(amb, 2), CycleClass::hyperplane(amb, 1)), 1);
}

TEST(DegreePairing, QuadricAgainstLineThroughDoublePoint) {
    const Ambient amb(4, 8);
    auto qf = uniform_form(2, 1, 7);
    qf.multiplicities.emplace_back(2);
    PointMultiplicityForm line{1, std::vector<Rational>(8, Rational(0))};
    line.multiplicities[0] = 1;
    line.multiplicities[7] = 1;
    EXPECT_EQ(degree_pairing(make_class(amb, 3, qf), make_class(amb, 1, line)), 2 - 1 - 2);
}

TEST(DegreePairing, EqualsDegreeOfIntersection) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 200; ++t) {
        const Ambient amb(2 + t % 5, t % 7);
        const auto d = random_class(rng, amb, amb.n() - 1);
        const auto b = random_class(rng, amb, 1);
        EXPECT_EQ(degree_pairing(d, b), degree_of_points(intersect_divisor(d, b)));
    }
}

TEST(DegreePairing, DimensionErrors) {
    const Ambient amb(4, 2);
    try {
        degree_pairing(CycleClass::hyperplane(amb, 3), CycleClass::hyperplane(amb, 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidDims);
    }
}

TEST(TopSelfIntersection, QuadricsThroughPoints) {
    for (int n = 2; n <= 7; ++n)
        for (int r = 0; r <= 20; ++r) {
            const auto d = make_class(Ambient(n, r), n - 1, uniform_form(2, 1, r));
            EXPECT_EQ(top_self_intersection(d), Rational((1L << n) - r));
        }
    EXPECT_EQ(top_self_intersection(make_class(Ambient(3, 9), 2, uniform_form(2, 1, 9))), -1);
    EXPECT_EQ(top_self_intersection(CycleClass::hyperplane(Ambient(6, 3), 5)), 1);
}

TEST(TopSelfIntersection, ExceptionalChains) {
    for (int n = 2; n <= 7; ++n)
        EXPECT_EQ(top_self_intersection(CycleClass::exceptional(Ambient(n, 2), n - 1, 2)), n % 2 == 1 ? 1 : -1);
}

TEST(TopSelfIntersection, AgreesWithIteratedIntersection) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        const Ambient amb(2 + t % 5, t % 6);
        const auto d = random_class(rng, amb, amb.n() - 1);
        auto y = d;
        for (int i = 1; i < amb.n() - 1; ++i) y = intersect_divisor(d, y);
        EXPECT_EQ(degree_pairing(d, y), top_self_intersection(d));
        EXPECT_EQ(top_self_intersection(d), top_power_oracle(d.coeffs(), amb.n()));
    }
}

TEST(MukaiPairing, BasisValues) {
    const Ambient amb(4, 3);
    const auto h = CycleClass::hyperplane(amb, 3);
    const auto e1 = CycleClass::exceptional(amb, 3, 1);
    EXPECT_EQ(mukai_pairing(e1, e1), -1);
    EXPECT_EQ(mukai_pairing(h, e1), 0);
    EXPECT_EQ(mukai_pairing(h, h), 3);
}

TEST(MukaiPairing, ExpandedFormInPointMultiplicities) {
    // ((a; b), (c; d)) = (n-1) a c - sum b_i d_i, so a nonnegative pairing means (n-1) a c >= sum b_i d_i.
    std::mt19937_64 rng(4);
    for (int t = 0; t < 200; ++t) {
        const Ambient amb(2 + t % 4, 2);
        const auto x = random_class(rng, amb, amb.n() - 1);
        const auto y = random_class(rng, amb, amb.n() - 1);
        const auto fx = x.form();
        const auto fy = y.form();
        const Rational expanded = (amb.n() - 1) * fx.degree * fy.degree - fx.multiplicities[0] * fy.multiplicities[0] -
                                  fx.multiplicities[1] * fy.multiplicities[1];
        EXPECT_EQ(mukai_pairing(x, y), expanded);
        EXPECT_EQ(mukai_pairing(x, y), mukai_pairing(y, x));
    }
}

TEST(MukaiPairing, Bilinear) {
    std::mt19937_64 rng(9);
    const Ambient amb(3, 5);
    for (int t = 0; t < 100; ++t) {
        const auto x = random_class(rng, amb, 2);
        const auto y = random_class(rng, amb, 2);
        const auto z = random_class(rng, amb, 2);
        const Rational l = random_rational(rng);
        EXPECT_EQ(mukai_pairing(l * x + y, z), l * mukai_pairing(x, z) + mukai_pairing(y, z));
    }
}

TEST(MukaiPairing, AmbientMismatch) {
    try {
        mukai_pairing(CycleClass::hyperplane(Ambient(3, 2), 2), CycleClass::hyperplane(Ambient(3, 4), 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::AmbientMismatch);
    }
}

TEST(LineMultiplicityBound, Values) {
    const Ambient amb(3, 2);
    EXPECT_EQ(line_multiplicity_bound(make_class(amb, 1, form(3, {2, 2})), 1, 2), 1);
    EXPECT_EQ(line_multiplicity_bound(make_class(amb, 1, form(5, {2, 2})), 1, 2), 0);
    const auto y = make_class(Ambient(4, 7), 2, form(5, {1, 1, 1, 1, 1, 4, 3}));
    EXPECT_EQ(line_multiplicity_bound(y, 6, 7), 4 + 3 - 5);
}

TEST(LineMultiplicityBound, IndexErrors) {
    const auto y = make_class(Ambient(3, 2), 1, form(3, {2, 2}));
    for (auto [i, j] : {std::pair{1, 1}, std::pair{0, 1}, std::pair{1, 3}}) {
        try {
            line_multiplicity_bound(y, i, j);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::InvalidIndexPair);
        }
    }
}

TEST(Rational, TextForms) {
    EXPECT_EQ(to_string(Rational(226, 692)), "113/346");
    EXPECT_EQ(to_string(Rational(-4, 2)), "-2");
    EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
    EXPECT_EQ(parse_rational("17"), 17);
    EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(CycleClass, ArithmeticAndPredicates) {
    const Ambient amb(3, 2);
    const auto h = CycleClass::hyperplane(amb, 1);
    const auto e = CycleClass::exceptional(amb, 1, 2);
    EXPECT_EQ((2 * h - e).coeffs(), ints({2, 0, -1}));
    EXPECT_TRUE((h - h).is_zero());
    EXPECT_FALSE((Rational(1, 2) * h).is_integral());
    EXPECT_THROW(h + CycleClass::hyperplane(amb, 2), Error);
    EXPECT_THROW(CycleClass::exceptional(amb, 1, 3), Error);
}
