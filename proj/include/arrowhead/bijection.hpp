#pragma once

#include <optional>

#include "arrowhead/lattice.hpp"
#include "arrowhead/paths.hpp"

namespace arrowhead {

/// Cell (a, b) of the 6x6 W/S transformation table; nullopt marks a blocked
/// cell. Rows 2m and 2m+1 are identical.
std::optional<Direction> transform_cell(Direction a, Direction b);

/// True iff the blocked cells of the table coincide with the forbidden
/// well-formed turns. Checked once at startup by the CLI and in tests.
bool transform_table_consistent();

/// S digit i is the table cell of the padded W pair (i, i+1).
/// Throws BlockedPair on a forbidden pair.
Digits w_to_s(const Digits& w_digits);

/// Transposed reading: W digit i is the table cell (s[i+1], s[i]).
Digits s_to_w(const Digits& s_digits);

PathString w_to_s(const PathString& w);
PathString s_to_w(const PathString& s);

}  // namespace arrowhead
