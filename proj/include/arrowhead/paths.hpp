#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "arrowhead/lattice.hpp"

namespace arrowhead {

/// H: Hamiltonian path on the inscribed grid.
/// W: well-formed Hamiltonian path (no forbidden turns once padded with zeros).
/// S: tiling path on the overall grid touching every dark tile exactly once.
enum class PathKind { H, W, S };

char kind_letter(PathKind kind);
PathKind parse_kind(std::string_view text);

/// Turn rules on consecutive direction codes (a, b).
bool h_pair_allowed(Direction a, Direction b);
bool w_pair_allowed(Direction a, Direction b);
bool s_pair_allowed(Direction a, Direction b);

/// Digit count of a path of the given kind and order: T_n - 1 for H/W, T_n for S.
long long path_length(PathKind kind, int order);

/// Outcome of a checker: the first failed check, where it failed and why.
struct VerificationReport {
    bool ok = true;
    std::string check;      // empty on success
    std::size_t index = 0;  // digit index of the failure
    std::string message;

    std::string to_json() const;
};

/// Runs the checks behind validate_* and reports the first failure.
VerificationReport diagnose(PathKind kind, const Digits& digits, int order);

bool validate_h(const Digits& digits, int order);
bool validate_w(const Digits& digits, int order);
bool validate_s(const Digits& digits, int order);
bool validate(PathKind kind, const Digits& digits, int order);

/// A direction string known to be a valid path of its kind and order.
class PathString {
public:
    /// Throws ParseError if `digits` is not a valid path of that kind.
    PathString(PathKind kind, int order, Digits digits);

    PathKind kind() const { return kind_; }
    int order() const { return order_; }
    const Digits& digits() const { return digits_; }
    std::string text() const { return to_string(digits_); }

    /// {"n": int, "kind": "H"|"W"|"S", "digits": string}
    std::string to_json() const;
    static PathString from_json(std::string_view line);

    friend bool operator==(const PathString&, const PathString&) = default;

private:
    PathKind kind_;
    int order_;
    Digits digits_;
};

/// W digits padded with a leading and trailing 0.
Digits supplement(const Digits& w_digits);

/// Constructive W-path: zig-zag rows of 1s and 4s joined by 5 and 0, with a
/// final arrowhead "15" for even orders.
PathString trivial_w(int order);

std::vector<LatticePoint> walk(LatticePoint start, const Digits& digits);

}  // namespace arrowhead
