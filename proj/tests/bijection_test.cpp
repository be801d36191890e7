#include <gtest/gtest.h>

#include <map>
#include <set>

#include "arrowhead/bijection.hpp"
#include "arrowhead/enumerate.hpp"
#include "arrowhead/errors.hpp"

using namespace arrowhead;

namespace {

std::string w2s(const std::string& w) { return to_string(w_to_s(parse_digits(w))); }
std::string s2w(const std::string& s) { return to_string(s_to_w(parse_digits(s))); }

}  // namespace

TEST(TransformTable, Cells) {
    EXPECT_EQ(transform_cell(Direction(0), Direction(1)), Direction(1));
    EXPECT_EQ(transform_cell(Direction(5), Direction(0)), Direction(5));
    EXPECT_FALSE(transform_cell(Direction(0), Direction(3)).has_value());
}

TEST(TransformTable, BlockedExactlyWhereWellFormedTurnsAreForbidden) {
    EXPECT_TRUE(transform_table_consistent());
    int blocked = 0;
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) blocked += !transform_cell(Direction(a), Direction(b)).has_value();
    }
    EXPECT_EQ(blocked, 12);
}

TEST(TransformTable, ParityPartnerRowsAreEqual) {
    for (int a = 0; a < 6; a += 2) {
        for (int b = 0; b < 6; ++b) {
            EXPECT_EQ(transform_cell(Direction(a), Direction(b)), transform_cell(Direction(a + 1), Direction(b)));
        }
    }
}

TEST(WToS, Examples) {
    EXPECT_EQ(w2s("15"), "105");
    EXPECT_EQ(w2s("150221555"), "1051220555");
    EXPECT_EQ(w2s("111544015"), "1110445105");
}

TEST(SToW, Examples) {
    EXPECT_EQ(s2w("105"), "15");
    EXPECT_EQ(s2w("012105450"), "02115540");
    EXPECT_EQ(s2w("1051220555"), "150221555");
}

TEST(WToS, BlockedPairCarriesIndexAndPair) {
    try {
        w_to_s(parse_digits("151215540"));
        FAIL() << "expected BlockedPair";
    } catch (const BlockedPair& e) {
        // padded 0151215540: pair (5,1) at index 2
        EXPECT_EQ(e.index(), 2u);
        EXPECT_EQ(e.first(), 5);
        EXPECT_EQ(e.second(), 1);
    }
}

TEST(PathStringTransforms, KindsAreChecked) {
    const PathString w(PathKind::W, 2, parse_digits("15"));
    const auto s = w_to_s(w);
    EXPECT_EQ(s.kind(), PathKind::S);
    EXPECT_EQ(s.text(), "105");
    EXPECT_EQ(s_to_w(s), w);
    EXPECT_THROW(s_to_w(w), Error);
}

TEST(Bijection, RoundTripAndImageOverEnumeratedSets) {
    for (int n = 2; n <= 6; ++n) {
        const auto ws = enumerate_paths(PathKind::W, n);
        const auto ss = enumerate_paths(PathKind::S, n);
        std::set<Digits> image;
        for (const auto& w : ws) {
            const auto s = w_to_s(w);
            EXPECT_EQ(s_to_w(s), w);
            image.insert(s);
        }
        EXPECT_EQ(image.size(), ws.size()) << "injective, n=" << n;
        EXPECT_EQ(image, std::set<Digits>(ss.begin(), ss.end())) << n;
        for (const auto& s : ss) EXPECT_EQ(w_to_s(s_to_w(s)), s);
    }
}

// The S edges touch dark tiles in the same order as the W walk visits the
// matching inscribed points.
TEST(Bijection, PreservesTilePermutation) {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& w : enumerate_paths(PathKind::W, n)) {
            const auto s = w_to_s(w);
            const auto w_points = walk({0, 0}, w);
            const auto s_points = walk({0, 0}, s);
            ASSERT_EQ(w_points.size(), s.size());
            for (std::size_t i = 0; i < s.size(); ++i) {
                const auto tile = edge_to_tile(s_points[i], s[i]);
                EXPECT_EQ(tile.x, w_points[i].x);
                EXPECT_EQ(tile.y, w_points[i].y);
            }
        }
    }
}
