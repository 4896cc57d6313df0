#include "support.hpp"

#include <gtest/gtest.h>

#include <set>
#include <tuple>

using namespace blowup;
using namespace blowup::testing;

namespace {

bool cites(const GenerationStatus& s, const std::string& rule) {
    return std::any_of(s.citations.begin(), s.citations.end(), [&](const Citation& c) { return c.rule == rule; });
}

std::vector<ConfigTag> configs_for(int n, int r) {
    std::vector<ConfigTag> out{config::VeryGeneral{}, config::LinearlyGeneral{}, config::Collinear{}};
    for (int m = 2; m <= n; ++m) out.push_back(config::SpanDim{m});
    if (r >= 9 && n >= r - 7) out.push_back(config::PlanarNinePlus{r - 8});
    return out;
}

}  // namespace

TEST(Status, ReferenceQueries) {
    const auto a = status(4, 8, 2);
    EXPECT_EQ(a.linear, LinearVerdict::Yes);
    EXPECT_TRUE(cites(a, "eight-points-p4"));

    const auto b = status(3, 9, 1);
    EXPECT_EQ(b.linear, LinearVerdict::No);
    EXPECT_EQ(b.linear_source, "very-general-curves");

    const auto c = status(4, 10, 2);
    EXPECT_EQ(c.finite, FiniteVerdict::ConditionalNo);
    EXPECT_EQ(c.assumption, "SHGH");
    EXPECT_EQ(c.finite_source, "codim-two-shgh");
}

TEST(Status, CurvesAtNinePointsInP3AreConditional) {
    // Curves on X^3_9 are codimension two, so the SHGH rule applies as well.
    const auto s = status(3, 9, 1);
    EXPECT_EQ(s.finite, FiniteVerdict::ConditionalNo);
    EXPECT_TRUE(cites(s, "codim-two-shgh"));
}

TEST(Status, ImplicationsClose) {
    const auto s = status(3, 4, 1);
    EXPECT_EQ(s.linear, LinearVerdict::Yes);
    EXPECT_EQ(s.finite, FiniteVerdict::Yes);
    const auto p = status(4, 10, 2, config::PlanarNinePlus{2});
    EXPECT_EQ(p.finite, FiniteVerdict::No);
    EXPECT_EQ(p.linear, LinearVerdict::No);
    EXPECT_EQ(p.linear_source, "implied");
    EXPECT_EQ(status(4, 10, 3, config::PlanarNinePlus{2}).linear, LinearVerdict::Yes);
}

TEST(Status, UnknownCitesOpenRegion) {
    const auto s = status(5, 12, 2);
    EXPECT_EQ(s.linear, LinearVerdict::Unknown);
    EXPECT_TRUE(cites(s, "open-region"));
}

TEST(Status, LinearlyGeneralSharpnessIsAWitnessNotAVerdict) {
    const auto s = status(4, 8, 2, config::LinearlyGeneral{});
    EXPECT_EQ(s.linear, LinearVerdict::Unknown);
    ASSERT_TRUE(s.witness);
    EXPECT_FALSE(is_linearly_generated_class(*s.witness).member);
    EXPECT_FALSE(s.notes.empty());
    EXPECT_FALSE(status(4, 8, 2).witness);  // very general: settled, no witness attached
    EXPECT_EQ(status(4, 7, 2, config::LinearlyGeneral{}).linear, LinearVerdict::Yes);
}

TEST(Status, SpanConfigurations) {
    EXPECT_EQ(status(5, 12, 1, config::Collinear{}).linear, LinearVerdict::Yes);
    EXPECT_EQ(status(5, 12, 3, config::SpanDim{2}).linear, LinearVerdict::Yes);
    EXPECT_EQ(status(5, 12, 1, config::SpanDim{2}).linear, LinearVerdict::Unknown);
}

TEST(Status, InvalidQueries) {
    for (auto [n, r, k] : {std::tuple{3, 5, 0}, std::tuple{3, 5, 3}, std::tuple{1, 5, 1}, std::tuple{3, -1, 1}}) {
        try {
            status(n, r, k);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::InvalidQuery);
        }
    }
    EXPECT_THROW(status(3, 5, 1, config::SpanDim{4}), Error);
}

TEST(Status, RulesNeverContradictOnGrid) {
    for (int n = 2; n <= 10; ++n)
        for (int r = 0; r <= 20; ++r)
            for (int k = 1; k <= n - 1; ++k)
                for (const auto& cfg : configs_for(n, r)) {
                    const StatusQuery q{n, r, k, cfg};
                    std::optional<LinearVerdict> lin;
                    std::optional<FiniteVerdict> fin;
                    for (const auto& rule : status_rules()) {
                        const auto o = rule.apply(q);
                        if (!o) continue;
                        if (o->linear) {
                            if (lin) {
                                ASSERT_EQ(*lin, *o->linear) << rule.id << " " << n << "," << r << "," << k;
                            }
                            lin = o->linear;
                        }
                        if (o->finite) {
                            if (fin) {
                                ASSERT_EQ(*fin, *o->finite) << rule.id << " " << n << "," << r << "," << k;
                            }
                            fin = o->finite;
                        }
                    }
                    const auto s = status(q);
                    const bool finite_negative = s.finite == FiniteVerdict::No || s.finite == FiniteVerdict::ConditionalNo;
                    ASSERT_FALSE(s.linear == LinearVerdict::Yes && finite_negative) << n << "," << r << "," << k;
                    if (s.linear == LinearVerdict::Yes) {
                        ASSERT_EQ(s.finite, FiniteVerdict::Yes);
                    }
                    if (s.finite == FiniteVerdict::No) {
                        ASSERT_EQ(s.linear, LinearVerdict::No);
                    }
                    ASSERT_FALSE(s.citations.empty());
                }
}

TEST(Status, DivisorRuleMatchesGroupType) {
    for (int n = 2; n <= 12; ++n)
        for (int r = n + 2; r <= n + 8; ++r) {
            const auto s = status(n, r, n - 1);
            EXPECT_EQ(s.finite == FiniteVerdict::No, group_type(n, r).infinite()) << n << "," << r;
        }
}

TEST(Status, RuleTableIsOrderedAndLabelled) {
    std::set<std::string> ids;
    for (const auto& rule : status_rules()) {
        EXPECT_FALSE(rule.statement.empty());
        EXPECT_TRUE(ids.insert(std::string(rule.id)).second) << rule.id;
    }
    EXPECT_EQ(status_rules().front().id, "toric-range");
}

TEST(NamedClass, Constructors) {
    EXPECT_EQ(rnc(4, 6), CycleClass::from_form(Ambient(4, 6), 1, uniform_form(4, 1, 6)));
    EXPECT_EQ(cone_over_rnc(5, 3, 9).form().multiplicities, ints({3, 3, 1, 1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(cone_over_rnc(5, 3, 9).form().degree, 3);
    EXPECT_EQ(secant_quartic_p4().dim(), 3);
    EXPECT_EQ(cm_curve().form().degree, 57);
    EXPECT_EQ(ci_curve(2, 4, 5).form().degree, 8);
    EXPECT_EQ(named_class("ci_curve", {3, 3, 2}), ci_curve(3, 3, 2));
    try {
        named_class("nope", {});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownClass);
    }
    EXPECT_THROW(named_class("rnc", {3}), Error);
}

TEST(NamedClass, MembershipClaims) {
    for (int n = 3; n <= 6; ++n) {
        EXPECT_TRUE(is_linearly_generated_class(rnc(n, 2 * n)).member);
        for (int k = 1; k <= n - 1; ++k)
            EXPECT_FALSE(is_linearly_generated_class(cone_over_rnc(n, k, 2 * n - k + 2)).member);
    }
    for (int d = 1; d <= 3; ++d)
        for (int n = 2; n <= 4; ++n) {
            long deg = 1;
            for (int i = 0; i < n - 1; ++i) deg *= d;
            EXPECT_FALSE(is_linearly_generated_class(ci_curve(d, n, static_cast<int>(2 * deg + 1))).member);
            EXPECT_TRUE(is_linearly_generated_class(ci_curve(d, n, static_cast<int>(2 * deg))).member);
        }
    EXPECT_FALSE(is_linearly_generated_class(cm_curve()).member);
}

TEST(NamedClass, SecantQuarticPairing) {
    // Paired with quadrics through the seven points and then the hyperplane: 6a - sum 2 b_i.
    const auto sec = secant_quartic_p4();
    const auto q = CycleClass::from_form(Ambient(4, 7), 3, uniform_form(2, 1, 7));
    const auto surface = intersect_divisor(q, sec);
    EXPECT_EQ(surface.form().degree, 6);
    const auto y = CycleClass::from_form(Ambient(4, 7), 2, form(5, {1, 2, 0, 1, 3, 1, 1}));
    Rational expected = 6 * y.form().degree;
    for (const auto& b : y.form().multiplicities) expected -= 2 * b;
    // degree of (q . sec) . y as a pairing of the surface with y in P^4: 6a - sum 2 b_i.
    Rational pairing = surface.form().degree * y.form().degree;
    for (int i = 1; i <= 7; ++i) pairing -= surface.multiplicity(i) * y.multiplicity(i);
    EXPECT_EQ(pairing, expected);
}
