#include "arrowhead/paths.hpp"

#include <set>

#include <json.hpp>

#include "arrowhead/errors.hpp"

namespace arrowhead {

namespace {

int turn(Direction a, Direction b) { return ((b.code() - a.code()) % 6 + 6) % 6; }

VerificationReport failure(std::string check, std::size_t index, std::string message) {
    return {false, std::move(check), index, std::move(message)};
}

std::string pair_text(Direction a, Direction b) {
    return std::string{static_cast<char>('0' + a.code()), static_cast<char>('0' + b.code())};
}

std::string point_text(LatticePoint p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

// Containment, vertex distinctness and terminal point of the walk from the
// origin. `tiles` additionally demands pairwise distinct edge tiles.
VerificationReport check_walk(const Digits& digits, int side, LatticePoint end, bool tiles) {
    LatticePoint p{0, 0};
    std::set<LatticePoint> seen{p};
    std::set<DarkTile> covered;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const auto q = step(p, digits[i]);
        if (!contains_side(side, q)) return failure("containment", i, "walk leaves the grid at " + point_text(q));
        if (!seen.insert(q).second) return failure("self_avoidance", i, "walk revisits " + point_text(q));
        // Every edge inside the overall grid lies on a dark tile of the
        // pattern, so T_n distinct tiles means all of them.
        if (tiles && !covered.insert(edge_to_tile(p, digits[i])).second) {
            return failure("tile_coverage", i, "edge lies on an already used dark tile");
        }
        p = q;
    }
    if (p != end) return failure("endpoint", digits.size(), "walk ends at " + point_text(p));
    return {};
}

}  // namespace

char kind_letter(PathKind kind) {
    switch (kind) {
        case PathKind::H:
            return 'H';
        case PathKind::W:
            return 'W';
        case PathKind::S:
            return 'S';
    }
    return '?';
}

PathKind parse_kind(std::string_view text) {
    if (text == "H" || text == "h") return PathKind::H;
    if (text == "W" || text == "w") return PathKind::W;
    if (text == "S" || text == "s") return PathKind::S;
    throw ParseError("unknown path kind '" + std::string(text) + "'");
}

bool h_pair_allowed(Direction a, Direction b) { return turn(a, b) != 3; }

bool w_pair_allowed(Direction a, Direction b) {
    const int t = turn(a, b);
    if (t == 3) return false;
    return a.even() ? t != 4 : t != 2;
}

bool s_pair_allowed(Direction a, Direction b) {
    const int t = turn(a, b);
    if (t == 3) return false;
    return a.even() ? t != 2 : t != 4;
}

long long path_length(PathKind kind, int order) {
    const auto tn = triangular_number(order);
    return kind == PathKind::S ? tn : tn - 1;
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["ok"] = ok;
    if (!ok) {
        j["check"] = check;
        j["index"] = index;
        j["message"] = message;
    }
    return j.dump();
}

VerificationReport diagnose(PathKind kind, const Digits& digits, int order) {
    if (order < 2) return failure("order", 0, "order " + std::to_string(order) + " is degenerate");
    const auto expected = path_length(kind, order);
    if (static_cast<long long>(digits.size()) != expected) {
        return failure("length", digits.size(),
                       "expected " + std::to_string(expected) + " digits, got " + std::to_string(digits.size()));
    }
    if (kind == PathKind::S) return check_walk(digits, order + 1, {order, 0}, true);

    for (std::size_t i = 0; i + 1 < digits.size(); ++i) {
        if (!h_pair_allowed(digits[i], digits[i + 1])) {
            return failure("turn_back", i + 1, "turn back " + pair_text(digits[i], digits[i + 1]));
        }
    }
    if (auto walked = check_walk(digits, order, {order - 1, 0}, false); !walked.ok) return walked;
    if (kind == PathKind::W) {
        const auto padded = supplement(digits);
        for (std::size_t i = 0; i + 1 < padded.size(); ++i) {
            if (!w_pair_allowed(padded[i], padded[i + 1])) {
                // padded pair i ends at digit i
                return failure("forbidden_turn", i, "forbidden turn " + pair_text(padded[i], padded[i + 1]));
            }
        }
    }
    return {};
}

bool validate_h(const Digits& digits, int order) { return diagnose(PathKind::H, digits, order).ok; }
bool validate_w(const Digits& digits, int order) { return diagnose(PathKind::W, digits, order).ok; }
bool validate_s(const Digits& digits, int order) { return diagnose(PathKind::S, digits, order).ok; }

bool validate(PathKind kind, const Digits& digits, int order) { return diagnose(kind, digits, order).ok; }

PathString::PathString(PathKind kind, int order, Digits digits)
    : kind_(kind), order_(order), digits_(std::move(digits)) {
    if (order < 2) throw DegenerateOrder(order);
    if (const auto report = diagnose(kind_, digits_, order_); !report.ok) {
        throw ParseError(std::string("\"") + to_string(digits_) + "\" is not a valid " + kind_letter(kind_) +
                         "-path of order " + std::to_string(order_) + ": " + report.message + " (index " +
                         std::to_string(report.index) + ")");
    }
}

std::string PathString::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = order_;
    j["kind"] = std::string(1, kind_letter(kind_));
    j["digits"] = text();
    return j.dump();
}

PathString PathString::from_json(std::string_view line) {
    try {
        const auto j = nlohmann::json::parse(line);
        return PathString(parse_kind(j.at("kind").get<std::string>()), j.at("n").get<int>(),
                          parse_digits(j.at("digits").get<std::string>()));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed path record: ") + e.what());
    }
}

Digits supplement(const Digits& w_digits) {
    Digits padded;
    padded.reserve(w_digits.size() + 2);
    padded.emplace_back(0);
    padded.insert(padded.end(), w_digits.begin(), w_digits.end());
    padded.emplace_back(0);
    return padded;
}

PathString trivial_w(int order) {
    if (order < 2) throw DegenerateOrder(order);
    const int n = order;
    const int rounds = n % 2 == 1 ? (n - 1) / 2 : (n - 2) / 2;
    Digits digits;
    auto append = [&digits](int count, int code) { digits.insert(digits.end(), count, Direction(code)); };
    int j = 1;
    for (int r = 0; r < rounds; ++r) {
        append(n - j, 1);
        append(1, 5);
        ++j;
        append(n - j, 4);
        append(1, 0);
        ++j;
    }
    if (n % 2 == 0) {
        append(1, 1);
        append(1, 5);
    }
    return PathString(PathKind::W, order, std::move(digits));
}

std::vector<LatticePoint> walk(LatticePoint start, const Digits& digits) {
    std::vector<LatticePoint> points;
    points.reserve(digits.size() + 1);
    points.push_back(start);
    for (const auto d : digits) {
        points.push_back(step(points.back(), d));
    }
    return points;
}

}  // namespace arrowhead
