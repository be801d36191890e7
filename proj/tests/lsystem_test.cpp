#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "arrowhead/bijection.hpp"
#include "arrowhead/curves.hpp"
#include "arrowhead/enumerate.hpp"
#include "arrowhead/errors.hpp"
#include "arrowhead/lsystem.hpp"

using namespace arrowhead;

namespace {

void expect_same_polyline(const std::vector<CartesianPoint>& a, const std::vector<CartesianPoint>& b) {
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        ASSERT_NEAR(a[i].x, b[i].x, 1e-9) << i;
        ASSERT_NEAR(a[i].y, b[i].y, 1e-9) << i;
    }
}

}  // namespace

TEST(SymbolTable, Cells) {
    EXPECT_EQ(symbol_group(Direction(0), Direction(0)), "A");
    EXPECT_EQ(symbol_group(Direction(0), Direction(5)), "A+");
    EXPECT_EQ(symbol_group(Direction(1), Direction(5)), "+A+");
    EXPECT_EQ(symbol_group(Direction(3), Direction(1)), "+A+");
    EXPECT_EQ(symbol_group(Direction(4), Direction(0)), "-B-");
    EXPECT_EQ(symbol_group(Direction(5), Direction(0)), "B-");
    EXPECT_FALSE(symbol_group(Direction(0), Direction(3)).has_value());
    EXPECT_FALSE(symbol_group(Direction(2), Direction(0)).has_value());
    EXPECT_FALSE(symbol_group(Direction(5), Direction(2)).has_value());
    EXPECT_TRUE(symbol_table_consistent());
}

TEST(SymbolTable, CellHeadingMatchesTransformTable) {
    // The group drawn for pair (a, b) leaves the turtle heading along the
    // corresponding S digit when it enters with heading a.
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            const auto group = symbol_group(Direction(a), Direction(b));
            if (!group) continue;
            int heading = a;
            int drawn = -1;
            for (const char c : *group) {
                if (c == '+') heading = (heading + 5) % 6;
                if (c == '-') heading = (heading + 1) % 6;
                if (c == 'A' || c == 'B') drawn = heading;
            }
            EXPECT_EQ(drawn, transform_cell(Direction(a), Direction(b))->code()) << a << b;
            EXPECT_EQ(heading, b) << a << b;
        }
    }
}

TEST(Rules, OrderTwo) {
    const auto er = er_rules(parse_digits("15"));
    EXPECT_EQ(er.axiom, "A");
    EXPECT_EQ(er.productions.at('A'), "-B+A+B-");
    EXPECT_EQ(er.productions.at('B'), "+A-B-A+");
    const auto nr = nr_rules(er);
    EXPECT_EQ(nr.axiom, "X");
    EXPECT_EQ(nr.productions.at('X'), "-YF+X+FY-");
    EXPECT_EQ(nr.productions.at('Y'), "+XF-Y-FX+");
}

TEST(Rules, OrderFourExample) {
    const auto er = er_rules(parse_digits("150221555"));
    EXPECT_EQ(er.productions.at('A'), "-B+A+B--B-AA++A+BBB-");
    EXPECT_EQ(er.productions.at('B'), "+A-B-A++A+BB--B-AAA+");
    const auto nr = nr_rules(er);
    EXPECT_EQ(nr.productions.at('X'), "-YF+X+FY-F-Y-FXFX+F+X+FYFYFY-");
    EXPECT_EQ(nr.productions.at('Y'), "+XF-Y-FX+F+X+FYFY-F-Y-FXFXFX+");
}

TEST(Rules, Text) {
    EXPECT_EQ(er_rules(parse_digits("15")).to_text(), "angle=60\naxiom=A\nA=-B+A+B-\nB=+A-B-A+\n");
}

TEST(Rules, BlockedPairAndMissingGroups) {
    try {
        er_rules(parse_digits("151215540"));
        FAIL() << "expected BlockedPair";
    } catch (const BlockedPair& e) {
        EXPECT_EQ(e.index(), 2u);
    }
    EXPECT_THROW(nr_rules(LSystemRuleSet{}), std::invalid_argument);
}

TEST(Mirror, Involution) {
    EXPECT_EQ(mirror("-B+A+B-"), "+A-B-A+");
    EXPECT_EQ(mirror("XFY"), "YFX");
    std::mt19937 rng(7);
    const std::string alphabet = "ABXYF+-";
    for (int t = 0; t < 200; ++t) {
        std::string s;
        for (int i = 0; i < 30; ++i) s += alphabet[rng() % alphabet.size()];
        EXPECT_EQ(mirror(mirror(s)), s);
        EXPECT_EQ(mirror(s).size(), s.size());
    }
}

TEST(Rewrite, LevelsAndGuard) {
    const auto er = er_rules(parse_digits("15"));
    EXPECT_EQ(rewrite(er, 0), "A");
    EXPECT_EQ(rewrite(er, 1), "-B+A+B-");
    EXPECT_EQ(rewrite(er, 2), "-+A-B-A++-B+A+B-++A-B-A+-");
    EXPECT_THROW(rewrite(er, 30, 1000), SizeGuard);
    EXPECT_THROW(rewrite(er, -1), std::invalid_argument);
}

TEST(Turtle, UnitSteps) {
    const auto pts = turtle_walk("A-A+F");
    ASSERT_EQ(pts.size(), 4u);
    EXPECT_NEAR(pts[1].x, 1.0, 1e-12);
    EXPECT_NEAR(pts[2].x, 1.5, 1e-12);
    EXPECT_NEAR(pts[2].y, std::sqrt(3.0) / 2, 1e-12);
    EXPECT_NEAR(pts[3].x, 2.5, 1e-12);
    EXPECT_EQ(turtle_walk("XY+-").size(), 1u);
}

TEST(Turtle, EdgeRewritingMatchesDigitWalk) {
    for (int n = 2; n <= 3; ++n) {
        for (const auto& w : enumerate_paths(PathKind::W, n)) {
            const auto er = er_rules(w);
            for (int k = 0; k <= 3; ++k) {
                const auto curve = er_expand(w_to_s(w), n, k);
                expect_same_polyline(expand_and_walk(er, k), curve_polyline(curve));
                const auto trace = turtle_trace(rewrite(er, k));
                EXPECT_EQ(trace.headings, curve.digits);
            }
        }
    }
}

TEST(Turtle, NodeRewritingMatchesCentroidWalk) {
    const CartesianPoint start = tile_centroid(DarkTile{0, 0});
    for (int n = 2; n <= 3; ++n) {
        for (const auto& w : enumerate_paths(PathKind::W, n)) {
            const auto nr = nr_rules(er_rules(w));
            for (int k = 0; k <= 3; ++k) {
                expect_same_polyline(expand_and_walk(nr, k, start), curve_polyline(nr_expand(w, n, k)));
            }
        }
    }
}

TEST(Turtle, ParityLaw) {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& w : enumerate_paths(PathKind::W, n)) {
            const auto trace = turtle_trace(rewrite(er_rules(w), 3));
            for (std::size_t i = 0; i < trace.headings.size(); ++i) {
                ASSERT_EQ(trace.drawers[i] == 'A', trace.headings[i].even());
            }
        }
    }
}
