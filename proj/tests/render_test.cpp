#include <gtest/gtest.h>

#include <cmath>
#include <regex>

#include "arrowhead/curves.hpp"
#include "arrowhead/errors.hpp"
#include "arrowhead/render.hpp"

using namespace arrowhead;

namespace {

int count(const std::string& text, const std::string& needle) {
    int n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

// Vertices of the first <path d="..."> as pixel pairs.
std::vector<std::pair<double, double>> path_vertices(const std::string& svg) {
    std::smatch m;
    std::regex d_attr(" d=\"([^\"]*)\"");
    std::vector<std::pair<double, double>> out;
    if (!std::regex_search(svg, m, d_attr)) return out;
    const std::string d = m[1];
    std::regex pair("[ML](-?[0-9.]+),(-?[0-9.]+)");
    for (auto it = std::sregex_iterator(d.begin(), d.end(), pair); it != std::sregex_iterator(); ++it) {
        out.emplace_back(std::stod((*it)[1]), std::stod((*it)[2]));
    }
    return out;
}

bool balanced(const std::string& svg) {
    return svg.rfind("<?xml", 0) == 0 && count(svg, "<svg ") == 1 && svg.ends_with("</svg>\n") &&
           count(svg, "<g ") == count(svg, "</g>");
}

}  // namespace

TEST(RenderCurve, OrderTwoArrowhead) {
    const auto curve = er_expand(parse_digits("105"), 2, 1);
    const auto line = curve_polyline(curve);
    const auto svg = render_curve(line);
    EXPECT_TRUE(balanced(svg));
    EXPECT_EQ(count(svg, "<path"), 1);
    const auto v = path_vertices(svg);
    ASSERT_EQ(v.size(), 4u);
    // scale 40, margin 10, y flipped; the curve spans x 0..2 and y 0..sqrt(3)/2
    EXPECT_NEAR(v[0].first, 10.0, 1e-5);
    EXPECT_NEAR(v[3].first, 90.0, 1e-5);
    EXPECT_NEAR(v[0].second, v[3].second, 1e-5);
    EXPECT_LT(v[1].second, v[0].second);
}

TEST(RenderCurve, LevelThreeVertexCount) {
    const auto svg = render_curve(curve_polyline(er_expand(parse_digits("105"), 2, 3)));
    EXPECT_EQ(path_vertices(svg).size(), 28u);
}

TEST(RenderCurve, Errors) {
    EXPECT_THROW(render_curve({}), EmptyPolyline);
    const std::vector<CartesianPoint> one{{0, 0}};
    RenderSpec bad;
    bad.scale = 0;
    EXPECT_THROW(render_curve(one, bad), std::invalid_argument);
    EXPECT_NO_THROW(render_curve(one));
}

TEST(RenderGasket, TriangleCounts) {
    EXPECT_EQ(count(render_gasket(gasket_tiles(2, 1)), "<polygon"), 3);
    EXPECT_EQ(count(render_gasket(gasket_tiles(4, 2)), "<polygon"), 100);
    const auto nr = nr_expand(parse_digits("15"), 2, 2);
    const auto line = curve_polyline(nr);
    const auto svg = render_gasket(gasket_tiles(2, 2), {}, line);
    EXPECT_TRUE(balanced(svg));
    EXPECT_EQ(count(svg, "<polygon"), 9);
    EXPECT_EQ(count(svg, "<path"), 1);
    EXPECT_EQ(path_vertices(svg).size(), 9u);
    EXPECT_EQ(count(render_gasket(gasket_tiles(2, 2)), "<path"), 0);
}

TEST(RenderGasket, OverlayFollowsTileEdges) {
    // An ER overlay on the gasket: every segment is one scaled unit long.
    const auto curve = er_expand(parse_digits("105"), 2, 2);
    const auto line = curve_polyline(curve);
    const auto svg = render_gasket(gasket_tiles(2, 2), {}, line);
    const auto v = path_vertices(svg);
    ASSERT_EQ(v.size(), 10u);
    for (std::size_t i = 1; i < v.size(); ++i) {
        EXPECT_NEAR(std::hypot(v[i].first - v[i - 1].first, v[i].second - v[i - 1].second), 40.0, 1e-4);
    }
}

TEST(RenderGasket, DeterministicAndGuarded) {
    EXPECT_EQ(render_gasket(gasket_tiles(3, 2)), render_gasket(gasket_tiles(3, 2)));
    RenderSpec small;
    small.tile_cap = 10;
    EXPECT_THROW(render_gasket(gasket_tiles(3, 2), small), SizeGuard);
    RenderSpec colored;
    colored.tile_fill = "#123456";
    EXPECT_NE(render_gasket(gasket_tiles(2, 1), colored).find("#123456"), std::string::npos);
}
