#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace arrowhead {

/// Absolute edge direction; code d points at d * 60 degrees counterclockwise
/// from the positive x axis.
class Direction {
public:
    constexpr Direction() = default;
    constexpr explicit Direction(int code) : code_(checked(code)) {}

    constexpr int code() const { return code_; }
    constexpr bool even() const { return code_ % 2 == 0; }
    constexpr Direction reversed() const { return Direction((code_ + 3) % 6); }
    constexpr Direction rotated(int turns) const { return Direction(((code_ + turns) % 6 + 6) % 6); }

    friend constexpr auto operator<=>(Direction, Direction) = default;

private:
    static constexpr std::uint8_t checked(int code) {
        if (code < 0 || code > 5) {
            throw std::out_of_range("direction code must be in 0..5");
        }
        return static_cast<std::uint8_t>(code);
    }

    std::uint8_t code_ = 0;
};

using Digits = std::vector<Direction>;

/// Parses a compact ASCII digit string such as "111544015".
Digits parse_digits(std::string_view text);
std::string to_string(const Digits& digits);

/// Axial lattice coordinates. Cartesian X = x + y/2, Y = y * sqrt(3)/2.
struct LatticePoint {
    int x = 0;
    int y = 0;

    friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Upward-facing unit triangle with corners (x,y), (x+1,y), (x,y+1).
struct DarkTile {
    int x = 0;
    int y = 0;

    friend constexpr auto operator<=>(const DarkTile&, const DarkTile&) = default;
};

struct CartesianPoint {
    double x = 0.0;
    double y = 0.0;
};

enum class GridRole { Inscribed, Overall };

/// Triangular point grid belonging to the generator pattern of a given order.
struct GridSpec {
    int order = 2;
    GridRole role = GridRole::Inscribed;

    /// Points per side: n for the inscribed grid, n + 1 for the overall grid.
    int side() const { return role == GridRole::Inscribed ? order : order + 1; }
    long long point_count() const;
};

long long triangular_number(long long n);

/// Integer power with overflow check; throws SizeGuard if the result exceeds
/// the range of long long.
long long checked_pow(long long base, int exponent);

inline constexpr std::array<LatticePoint, 6> kStepOffsets{{
    {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1},
}};

constexpr LatticePoint step(LatticePoint p, Direction d) {
    const auto offset = kStepOffsets[static_cast<std::size_t>(d.code())];
    return {p.x + offset.x, p.y + offset.y};
}

bool contains(const GridSpec& grid, LatticePoint p);
bool contains_side(int side, LatticePoint p);

/// The unique upward tile that has the edge (p, step(p, d)) as a side.
DarkTile edge_to_tile(LatticePoint p, Direction d);

/// As above, but throws OutOfGrid if the edge leaves `grid`.
DarkTile edge_to_tile(const GridSpec& grid, LatticePoint p, Direction d);

CartesianPoint to_cartesian(LatticePoint p);
CartesianPoint tile_centroid(DarkTile t);
double distance(CartesianPoint a, CartesianPoint b);

/// Every upward tile of the order-n generator pattern, row-major.
std::vector<DarkTile> generator_tiles(int order);

}  // namespace arrowhead
