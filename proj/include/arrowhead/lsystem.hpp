#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrowhead/lattice.hpp"

namespace arrowhead {

/// Turtle alphabet: A, B and F draw a unit segment, X and Y are non-drawing
/// variables, '+' turns 60 degrees clockwise and '-' 60 degrees
/// counterclockwise.
struct LSystemRuleSet {
    std::string axiom;
    std::map<char, std::string> productions;
    int turn_degrees = 60;
    /// Symbol groups of the first production, one per padded W digit pair.
    /// Only set by er_rules; nr_rules needs them to place the F symbols.
    std::vector<std::string> groups;

    /// One production per line, "A=-B+A+B-", preceded by the axiom and angle.
    std::string to_text() const;
};

/// Cell (a, b) of the W-pair to L-system symbol table; nullopt where the
/// pair is forbidden.
std::optional<std::string_view> symbol_group(Direction a, Direction b);

/// True iff the symbol table is blocked exactly where the W/S table is, and
/// each cell draws A for an even S code and B for an odd one.
bool symbol_table_consistent();

/// Edge-rewriting rules: A from the padded W pairs, B its mirror, axiom "A".
/// Throws BlockedPair on forbidden pairs.
LSystemRuleSet er_rules(const Digits& w_digits);

/// Swaps A/B, X/Y and +/-; order is preserved.
std::string mirror(std::string_view rule);

/// Node-rewriting rules: the ER groups joined by F with A->X and B->Y; Y is
/// the mirror of X; axiom "X".
LSystemRuleSet nr_rules(const LSystemRuleSet& er);

/// Applies the productions `level` times to the axiom.
std::string rewrite(const LSystemRuleSet& rules, int level, std::size_t max_symbols = 50'000'000);

/// Interprets `symbols` from `start` with heading 0.
std::vector<CartesianPoint> turtle_walk(std::string_view symbols, CartesianPoint start = {}, int turn_degrees = 60);

/// Direction codes of the drawn segments, tracked exactly on the 60 degree
/// lattice; also reports which symbol drew each segment.
struct TurtleTrace {
    Digits headings;
    std::string drawers;
};
TurtleTrace turtle_trace(std::string_view symbols);

std::vector<CartesianPoint> expand_and_walk(const LSystemRuleSet& rules, int level, CartesianPoint start = {});

}  // namespace arrowhead
