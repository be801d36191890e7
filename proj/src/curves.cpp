#include "arrowhead/curves.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "arrowhead/bijection.hpp"
#include "arrowhead/errors.hpp"
#include "arrowhead/paths.hpp"

namespace arrowhead {

namespace {

void require_order(int order) {
    if (order < 2) throw DegenerateOrder(order);
}

void require_level(int level) {
    if (level < 0) throw std::invalid_argument("approximation level must be non-negative");
}

// T_n^k, refusing anything over `cap`.
long long guarded_tile_count(int order, int level, long long cap) {
    const long long tn = triangular_number(order);
    long long count = 1;
    for (int i = 0; i < level; ++i) {
        if (count > cap / tn) {
            throw SizeGuard(static_cast<unsigned long long>(count) * static_cast<unsigned long long>(tn),
                            static_cast<unsigned long long>(cap));
        }
        count *= tn;
    }
    return count;
}

// Membership bitmap over the lattice triangle of the given side.
class TriangleBitmap {
public:
    explicit TriangleBitmap(long long side)
        : side_(side), bits_(static_cast<std::size_t>(triangular_number(side)), false) {}

    bool inside(long long x, long long y) const { return x >= 0 && y >= 0 && x + y <= side_ - 1; }

    // Returns false if (x, y) is outside the triangle.
    bool test(long long x, long long y) const { return inside(x, y) && bits_[index(x, y)]; }

    // Returns the previous value.
    bool set(long long x, long long y) {
        auto ref = bits_[index(x, y)];
        const bool previous = ref;
        ref = true;
        return previous;
    }

private:
    std::size_t index(long long x, long long y) const {
        return static_cast<std::size_t>(y * side_ - y * (y - 1) / 2 + x);
    }

    long long side_;
    std::vector<bool> bits_;
};

VerificationReport failure(std::string check, std::size_t index, const std::string& message) {
    return {false, std::move(check), index, message};
}

TriangleBitmap dark_bitmap(int order, int level, long long cap) {
    const auto gasket = gasket_tiles(order, level, cap);
    TriangleBitmap dark(checked_pow(order, level));
    for (const auto& t : gasket.tiles) dark.set(t.x, t.y);
    return dark;
}

std::string describe(LatticePoint p) {
    std::ostringstream out;
    out << "(" << p.x << "," << p.y << ")";
    return out.str();
}

}  // namespace

RewriteMethod parse_method(const std::string& text) {
    if (text == "er" || text == "ER") return RewriteMethod::EdgeRewriting;
    if (text == "nr" || text == "NR") return RewriteMethod::NodeRewriting;
    throw ParseError("unknown rewriting method '" + text + "'");
}

const char* method_name(RewriteMethod method) {
    return method == RewriteMethod::EdgeRewriting ? "ER" : "NR";
}

Digits substitute_digit(Direction d, const Digits& generator) {
    Digits out;
    out.reserve(generator.size());
    for (const auto g : generator) {
        out.push_back(d.even() ? g.rotated(d.code()) : Direction(((d.code() - g.code()) % 6 + 6) % 6));
    }
    return out;
}

CurveString er_expand(const Digits& s_generator, int order, int level, long long cap) {
    require_order(order);
    require_level(level);
    if (!validate_s(s_generator, order)) {
        throw ParseError("\"" + to_string(s_generator) + "\" is not an S-path of order " + std::to_string(order));
    }
    const auto total = guarded_tile_count(order, level, cap);

    // Precompute the six rotated/reflected copies once.
    std::array<Digits, 6> copies;
    for (int d = 0; d < 6; ++d) copies[static_cast<std::size_t>(d)] = substitute_digit(Direction(d), s_generator);

    Digits current{Direction(0)};
    for (int j = 0; j < level; ++j) {
        Digits next;
        next.reserve(current.size() * s_generator.size());
        for (const auto d : current) {
            const auto& copy = copies[static_cast<std::size_t>(d.code())];
            next.insert(next.end(), copy.begin(), copy.end());
        }
        current = std::move(next);
    }
    if (static_cast<long long>(current.size()) != total) {
        throw std::logic_error("edge rewriting produced an unexpected length");
    }
    return {order, RewriteMethod::EdgeRewriting, level, std::move(current)};
}

CurveString nr_expand(const Digits& w_generator, int order, int level, long long cap) {
    require_order(order);
    require_level(level);
    if (!validate_w(w_generator, order)) {
        throw ParseError("\"" + to_string(w_generator) + "\" is not a W-path of order " + std::to_string(order));
    }
    auto edge = er_expand(w_to_s(w_generator), order, level, cap);
    return {order, RewriteMethod::NodeRewriting, level, s_to_w(edge.digits)};
}

GasketApproximation gasket_tiles(int order, int level, long long cap) {
    require_order(order);
    require_level(level);
    guarded_tile_count(order, level, cap);

    std::vector<DarkTile> tiles{{0, 0}};
    const auto pattern = generator_tiles(order);
    for (int j = 0; j < level; ++j) {
        std::vector<DarkTile> next;
        next.reserve(tiles.size() * pattern.size());
        for (const auto& t : tiles) {
            for (const auto& offset : pattern) {
                next.push_back({order * t.x + offset.x, order * t.y + offset.y});
            }
        }
        tiles = std::move(next);
    }
    std::sort(tiles.begin(), tiles.end());
    return {order, level, std::move(tiles)};
}

bool is_dark_digitwise(int order, int level, DarkTile tile) {
    long long x = tile.x;
    long long y = tile.y;
    for (int i = 0; i < level; ++i) {
        if (x % order + y % order > order - 1) return false;
        x /= order;
        y /= order;
    }
    return x == 0 && y == 0;
}

VerificationReport verify_er(const CurveString& curve, long long cap) {
    require_order(curve.order);
    const auto total = guarded_tile_count(curve.order, curve.level, cap);
    const auto& digits = curve.digits;
    if (static_cast<long long>(digits.size()) != total) {
        return failure("length", digits.size(),
                       "expected " + std::to_string(total) + " digits, got " + std::to_string(digits.size()));
    }
    const long long side = checked_pow(curve.order, curve.level);
    const auto dark = dark_bitmap(curve.order, curve.level, cap);
    TriangleBitmap seen_points(side + 1);
    TriangleBitmap seen_tiles(side);

    LatticePoint p{0, 0};
    seen_points.set(0, 0);
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i > 0 && !s_pair_allowed(digits[i - 1], digits[i])) {
            return failure("turns", i,
                           "forbidden turn " + std::to_string(digits[i - 1].code()) +
                               std::to_string(digits[i].code()));
        }
        const auto tile = edge_to_tile(p, digits[i]);
        const auto q = step(p, digits[i]);
        if (!seen_points.inside(q.x, q.y)) {
            return failure("containment", i, "walk leaves the lattice at " + describe(q));
        }
        if (seen_points.set(q.x, q.y)) {
            return failure("self_avoidance", i, "walk revisits " + describe(q));
        }
        if (!dark.test(tile.x, tile.y)) {
            return failure("tile_bijection", i, "edge lies on no dark tile of the approximation");
        }
        if (seen_tiles.set(tile.x, tile.y)) {
            return failure("tile_bijection", i, "dark tile touched twice");
        }
        p = q;
    }
    if (p != LatticePoint{static_cast<int>(side), 0}) {
        return failure("endpoint", digits.size(), "walk ends at " + describe(p));
    }
    return {};
}

VerificationReport verify_nr(const CurveString& curve, long long cap) {
    require_order(curve.order);
    const auto total = guarded_tile_count(curve.order, curve.level, cap);
    const auto& digits = curve.digits;
    if (static_cast<long long>(digits.size()) != total - 1) {
        return failure("length", digits.size(),
                       "expected " + std::to_string(total - 1) + " digits, got " + std::to_string(digits.size()));
    }
    const long long side = checked_pow(curve.order, curve.level);
    const auto dark = dark_bitmap(curve.order, curve.level, cap);
    TriangleBitmap seen(side);

    LatticePoint p{0, 0};
    seen.set(0, 0);
    for (std::size_t i = 0; i < digits.size(); ++i) {
        p = step(p, digits[i]);
        if (!dark.test(p.x, p.y)) {
            return failure("dark_set", i, "walk leaves the dark tiles at " + describe(p));
        }
        if (seen.set(p.x, p.y)) {
            return failure("hamiltonian", i, "walk revisits tile " + describe(p));
        }
    }
    if (p != LatticePoint{static_cast<int>(side - 1), 0}) {
        return failure("endpoint", digits.size(), "walk ends at " + describe(p));
    }
    return {};
}

double hausdorff_dimension(int order) {
    require_order(order);
    return std::log(static_cast<double>(triangular_number(order))) / std::log(static_cast<double>(order));
}

std::vector<CartesianPoint> curve_polyline(const CurveString& curve) {
    const auto points = walk({0, 0}, curve.digits);
    std::vector<CartesianPoint> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        out.push_back(curve.method == RewriteMethod::EdgeRewriting ? to_cartesian(p)
                                                                   : tile_centroid(DarkTile{p.x, p.y}));
    }
    return out;
}

}  // namespace arrowhead
