#include "arrowhead/lsystem.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "arrowhead/bijection.hpp"
#include "arrowhead/errors.hpp"
#include "arrowhead/paths.hpp"

namespace arrowhead {

namespace {

// Blocked cells are empty strings; no valid cell is empty.
// clang-format off
constexpr std::array<std::array<std::string_view, 6>, 6> kSymbolTable{{
    {"A",   "-B",  "-B-", "",    "",    "A+"},
    {"+A",  "B",   "B-",  "",    "",    "+A+"},
    {"",    "A+",  "A",   "-B",  "-B-", ""},
    {"",    "+A+", "+A",  "B",   "B-",  ""},
    {"-B-", "",    "",    "A+",  "A",   "-B"},
    {"B-",  "",    "",    "+A+", "+A",  "B"},
}};
// clang-format on

bool draws(char c) { return c == 'A' || c == 'B' || c == 'F'; }

}  // namespace

std::optional<std::string_view> symbol_group(Direction a, Direction b) {
    const auto cell = kSymbolTable[static_cast<std::size_t>(a.code())][static_cast<std::size_t>(b.code())];
    if (cell.empty()) return std::nullopt;
    return cell;
}

bool symbol_table_consistent() {
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            const auto group = symbol_group(Direction(a), Direction(b));
            const auto cell = transform_cell(Direction(a), Direction(b));
            if (group.has_value() != cell.has_value()) return false;
            if (!group) continue;
            const bool has_a = group->find('A') != std::string_view::npos;
            const bool has_b = group->find('B') != std::string_view::npos;
            if (has_a == has_b || has_a != cell->even()) return false;
        }
    }
    return true;
}

std::string LSystemRuleSet::to_text() const {
    std::ostringstream out;
    out << "angle=" << turn_degrees << "\n";
    out << "axiom=" << axiom << "\n";
    for (const auto& [variable, body] : productions) {
        out << variable << "=" << body << "\n";
    }
    return out.str();
}

LSystemRuleSet er_rules(const Digits& w_digits) {
    const auto padded = supplement(w_digits);
    LSystemRuleSet rules;
    rules.axiom = "A";
    std::string a_rule;
    for (std::size_t i = 0; i + 1 < padded.size(); ++i) {
        const auto group = symbol_group(padded[i], padded[i + 1]);
        if (!group) throw BlockedPair(i, padded[i].code(), padded[i + 1].code());
        rules.groups.emplace_back(*group);
        a_rule += *group;
    }
    rules.productions['B'] = mirror(a_rule);
    rules.productions['A'] = std::move(a_rule);
    return rules;
}

std::string mirror(std::string_view rule) {
    std::string out(rule);
    for (auto& c : out) {
        switch (c) {
            case 'A': c = 'B'; break;
            case 'B': c = 'A'; break;
            case 'X': c = 'Y'; break;
            case 'Y': c = 'X'; break;
            case '+': c = '-'; break;
            case '-': c = '+'; break;
            default: break;
        }
    }
    return out;
}

LSystemRuleSet nr_rules(const LSystemRuleSet& er) {
    if (er.groups.empty()) throw std::invalid_argument("node rules need the symbol groups of an edge rule set");
    std::string x_rule;
    for (std::size_t i = 0; i < er.groups.size(); ++i) {
        if (i > 0) x_rule += 'F';
        for (const char c : er.groups[i]) {
            x_rule += c == 'A' ? 'X' : c == 'B' ? 'Y' : c;
        }
    }
    LSystemRuleSet rules;
    rules.axiom = "X";
    rules.turn_degrees = er.turn_degrees;
    rules.productions['Y'] = mirror(x_rule);
    rules.productions['X'] = std::move(x_rule);
    return rules;
}

std::string rewrite(const LSystemRuleSet& rules, int level, std::size_t max_symbols) {
    if (level < 0) throw std::invalid_argument("rewrite level must be non-negative");
    std::string current = rules.axiom;
    for (int i = 0; i < level; ++i) {
        std::string next;
        for (const char c : current) {
            const auto it = rules.productions.find(c);
            if (it == rules.productions.end()) {
                next += c;
            } else {
                next += it->second;
            }
            if (next.size() > max_symbols) throw SizeGuard(next.size(), max_symbols);
        }
        current = std::move(next);
    }
    return current;
}

std::vector<CartesianPoint> turtle_walk(std::string_view symbols, CartesianPoint start, int turn_degrees) {
    std::vector<CartesianPoint> points{start};
    const double step_angle = turn_degrees * std::numbers::pi / 180.0;
    long long heading = 0;  // in turn units
    for (const char c : symbols) {
        if (c == '+') {
            --heading;
        } else if (c == '-') {
            ++heading;
        } else if (draws(c)) {
            const double angle = static_cast<double>(heading) * step_angle;
            const auto& last = points.back();
            points.push_back({last.x + std::cos(angle), last.y + std::sin(angle)});
        }
    }
    return points;
}

TurtleTrace turtle_trace(std::string_view symbols) {
    TurtleTrace trace;
    Direction heading(0);
    for (const char c : symbols) {
        if (c == '+') {
            heading = heading.rotated(-1);
        } else if (c == '-') {
            heading = heading.rotated(1);
        } else if (draws(c)) {
            trace.headings.push_back(heading);
            trace.drawers.push_back(c);
        }
    }
    return trace;
}

std::vector<CartesianPoint> expand_and_walk(const LSystemRuleSet& rules, int level, CartesianPoint start) {
    return turtle_walk(rewrite(rules, level), start, rules.turn_degrees);
}

}  // namespace arrowhead
