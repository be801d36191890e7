#include "arrowhead/bijection.hpp"

#include <array>
#include <stdexcept>

#include "arrowhead/errors.hpp"

namespace arrowhead {

namespace {

constexpr int X = -1;

// clang-format off
constexpr std::array<std::array<int, 6>, 6> kTable{{
    {0, 1, 1, X, X, 0},
    {0, 1, 1, X, X, 0},
    {X, 2, 2, 3, 3, X},
    {X, 2, 2, 3, 3, X},
    {5, X, X, 4, 4, 5},
    {5, X, X, 4, 4, 5},
}};
// clang-format on

Direction lookup(std::size_t index, Direction a, Direction b) {
    const auto cell = transform_cell(a, b);
    if (!cell) throw BlockedPair(index, a.code(), b.code());
    return *cell;
}

// The literal table and the turn predicate must agree; checked once.
void require_consistent_table() {
    static const bool consistent = transform_table_consistent();
    if (!consistent) throw std::logic_error("transform table disagrees with the W turn rule");
}

}  // namespace

std::optional<Direction> transform_cell(Direction a, Direction b) {
    const int v = kTable[static_cast<std::size_t>(a.code())][static_cast<std::size_t>(b.code())];
    if (v == X) return std::nullopt;
    return Direction(v);
}

bool transform_table_consistent() {
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            const Direction da(a), db(b);
            if (transform_cell(da, db).has_value() != w_pair_allowed(da, db)) return false;
        }
    }
    return true;
}

Digits w_to_s(const Digits& w_digits) {
    require_consistent_table();
    const auto padded = supplement(w_digits);
    Digits s;
    s.reserve(padded.size() - 1);
    for (std::size_t i = 0; i + 1 < padded.size(); ++i) {
        s.push_back(lookup(i, padded[i], padded[i + 1]));
    }
    return s;
}

Digits s_to_w(const Digits& s_digits) {
    require_consistent_table();
    Digits w;
    if (s_digits.size() > 1) w.reserve(s_digits.size() - 1);
    for (std::size_t i = 0; i + 1 < s_digits.size(); ++i) {
        w.push_back(lookup(i, s_digits[i + 1], s_digits[i]));
    }
    return w;
}

PathString w_to_s(const PathString& w) {
    if (w.kind() != PathKind::W) throw Error("w_to_s expects a W-path");
    return PathString(PathKind::S, w.order(), w_to_s(w.digits()));
}

PathString s_to_w(const PathString& s) {
    if (s.kind() != PathKind::S) throw Error("s_to_w expects an S-path");
    return PathString(PathKind::W, s.order(), s_to_w(s.digits()));
}

}  // namespace arrowhead
