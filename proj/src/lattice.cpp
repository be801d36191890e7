#include "arrowhead/lattice.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "arrowhead/errors.hpp"

namespace arrowhead {

DegenerateOrder::DegenerateOrder(int order)
    : Error("order " + std::to_string(order) + " is degenerate; orders start at 2"), order_(order) {}

BlockedPair::BlockedPair(std::size_t index, int first, int second)
    : Error("blocked direction pair (" + std::to_string(first) + "," + std::to_string(second) +
            ") at index " + std::to_string(index)),
      index_(index),
      first_(first),
      second_(second) {}

SizeGuard::SizeGuard(unsigned long long requested, unsigned long long cap)
    : Error("requested size " + std::to_string(requested) + " exceeds cap " + std::to_string(cap)) {}

Digits parse_digits(std::string_view text) {
    Digits digits;
    digits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c < '0' || c > '5') {
            std::ostringstream msg;
            msg << "invalid direction digit '" << c << "' at index " << i;
            throw ParseError(msg.str());
        }
        digits.emplace_back(c - '0');
    }
    return digits;
}

std::string to_string(const Digits& digits) {
    std::string out;
    out.reserve(digits.size());
    for (const auto d : digits) {
        out.push_back(static_cast<char>('0' + d.code()));
    }
    return out;
}

long long GridSpec::point_count() const { return triangular_number(side()); }

long long triangular_number(long long n) { return n * (n + 1) / 2; }

long long checked_pow(long long base, int exponent) {
    long long result = 1;
    for (int i = 0; i < exponent; ++i) {
        if (result > std::numeric_limits<long long>::max() / base) {
            throw SizeGuard(std::numeric_limits<unsigned long long>::max(),
                            std::numeric_limits<long long>::max());
        }
        result *= base;
    }
    return result;
}

bool contains_side(int side, LatticePoint p) { return p.x >= 0 && p.y >= 0 && p.x + p.y <= side - 1; }

bool contains(const GridSpec& grid, LatticePoint p) { return contains_side(grid.side(), p); }

DarkTile edge_to_tile(LatticePoint p, Direction d) {
    switch (d.code()) {
        case 0:
        case 1:
            return {p.x, p.y};
        case 2:
        case 3:
            return {p.x - 1, p.y};
        default:
            return {p.x, p.y - 1};
    }
}

DarkTile edge_to_tile(const GridSpec& grid, LatticePoint p, Direction d) {
    if (!contains(grid, p) || !contains(grid, step(p, d))) {
        std::ostringstream msg;
        msg << "edge from (" << p.x << "," << p.y << ") in direction " << d.code()
            << " leaves the grid of side " << grid.side();
        throw OutOfGrid(msg.str());
    }
    return edge_to_tile(p, d);
}

CartesianPoint to_cartesian(LatticePoint p) {
    return {p.x + 0.5 * p.y, p.y * std::sqrt(3.0) / 2.0};
}

CartesianPoint tile_centroid(DarkTile t) {
    return {(t.x + 0.5 * t.y) + 0.5, std::sqrt(3.0) * (t.y + 1.0 / 3.0) / 2.0};
}

double distance(CartesianPoint a, CartesianPoint b) { return std::hypot(a.x - b.x, a.y - b.y); }

std::vector<DarkTile> generator_tiles(int order) {
    std::vector<DarkTile> tiles;
    tiles.reserve(static_cast<std::size_t>(triangular_number(order)));
    for (int y = 0; y < order; ++y) {
        for (int x = 0; x + y < order; ++x) {
            tiles.push_back({x, y});
        }
    }
    return tiles;
}

}  // namespace arrowhead
