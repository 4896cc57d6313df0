#include "support.hpp"

#include <gtest/gtest.h>

using namespace blowup;
using namespace blowup::testing;

TEST(ParseClass, Basic) {
    const auto c = parse_class("3H - 2E1 - E2", Ambient(4, 2), 2);
    EXPECT_EQ(c.form().degree, 3);
    EXPECT_EQ(c.form().multiplicities, ints({2, 1}));
    EXPECT_EQ(c.dim(), 2);
}

TEST(ParseClass, EllipsisFillsEqualCoefficients) {
    const auto c = parse_class("57H - 18E1 - ... - 18E10", Ambient(2, 10), 1);
    EXPECT_EQ(c, CycleClass::from_form(Ambient(2, 10), 1, uniform_form(57, 18, 10)));
}

TEST(ParseClass, RationalAndRepeatedTerms) {
    const auto c = parse_class("1/2*H + H - 3/4 E2 + E2", Ambient(3, 2), 1);
    EXPECT_EQ(c.coeffs(), (std::vector<Rational>{Rational(3, 2), 0, Rational(1, 4)}));
    EXPECT_TRUE(parse_class("0", Ambient(3, 2), 1).is_zero());
    EXPECT_EQ(parse_class("-E1", Ambient(3, 2), 1).coeffs(), ints({0, -1, 0}));
}

TEST(ParseClass, ZeroBasedVertexLabels) {
    const auto w = parse_class("2H - 2E0 - E1", Ambient(4, 2), 2, 0);
    EXPECT_EQ(w.coeffs(), ints({2, -2, -1}));
}

TEST(ParseClass, ErrorsCarryPositions) {
    auto kind_and_message = [](const std::string& text, int r) -> std::pair<ErrorKind, std::string> {
        try {
            parse_class(text, Ambient(3, r), 1);
        } catch (const Error& e) {
            return {e.kind(), e.what()};
        }
        return {ErrorKind::InvalidQuery, "no error"};
    };
    auto [kind, msg] = kind_and_message("3H - 2E0", 1);
    EXPECT_EQ(kind, ErrorKind::Parse);
    EXPECT_NE(msg.find("position 5"), std::string::npos) << msg;
    EXPECT_EQ(kind_and_message("3H - 2E4", 3).first, ErrorKind::Parse);
    EXPECT_EQ(kind_and_message("3H -", 3).first, ErrorKind::Parse);
    EXPECT_EQ(kind_and_message("3X", 3).first, ErrorKind::Parse);
    EXPECT_EQ(kind_and_message("3H - 2E1 - ... - E3", 3).first, ErrorKind::Parse);
    EXPECT_EQ(kind_and_message("H2", 3).first, ErrorKind::Parse);
    EXPECT_EQ(kind_and_message("3H 2E1", 3).first, ErrorKind::Parse);
}

TEST(FormatClass, CanonicalRoundTrip) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 300; ++t) {
        const Ambient amb(3, t % 7);
        const auto c = random_class(rng, amb, 1);
        const auto text = format_class(c);
        const auto back = parse_class(text, amb, 1);
        EXPECT_EQ(back, c) << text;
        EXPECT_EQ(format_class(back), text);
    }
    EXPECT_EQ(format_class(parse_class("E2 - 2E1 + 3H", Ambient(3, 2), 1)), "3H - 2E1 + E2");
    EXPECT_EQ(format_class(parse_class("1/2 H", Ambient(3, 2), 1)), "1/2*H");
}

TEST(ParseAmbient, KeysAndDefaults) {
    const auto spec = parse_ambient("n=4,r=7,dim=2,config=very-general");
    EXPECT_EQ(spec.ambient.n(), 4);
    EXPECT_EQ(spec.ambient.r(), 7);
    EXPECT_EQ(spec.dim, 2);
    EXPECT_EQ(parse_ambient("r=3,n=5").dim, 4);
    EXPECT_EQ(to_string(parse_ambient("n=4,r=3,config=span-dim:2").ambient.config()), "span-dim:2");
    EXPECT_THROW(parse_ambient("n=4"), Error);
    EXPECT_THROW(parse_ambient("n=4,r=x"), Error);
    EXPECT_THROW(parse_ambient("n=4,r=2,q=1"), Error);
}
