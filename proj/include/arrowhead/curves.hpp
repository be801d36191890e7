#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arrowhead/lattice.hpp"
#include "arrowhead/paths.hpp"

namespace arrowhead {

enum class RewriteMethod { EdgeRewriting, NodeRewriting };

RewriteMethod parse_method(const std::string& text);
const char* method_name(RewriteMethod method);

/// Level-k approximation of the arrowhead curve family as direction codes.
/// Edge rewriting yields T_n^k digits, node rewriting T_n^k - 1.
struct CurveString {
    int order = 2;
    RewriteMethod method = RewriteMethod::EdgeRewriting;
    int level = 0;
    Digits digits;
};

/// Dark tiles of the k-th approximation F_n(k), keyed on the side-n^k lattice.
struct GasketApproximation {
    int order = 2;
    int level = 0;
    std::vector<DarkTile> tiles;  // sorted
};

inline constexpr long long kDefaultTileCap = 10'000'000;

/// Copy of the S generator laid along an edge of direction d: rotated by d
/// for even d, reflected then rotated for odd d.
Digits substitute_digit(Direction d, const Digits& generator);

/// Level 0 is "0"; each level substitutes every digit by a generator copy.
CurveString er_expand(const Digits& s_generator, int order, int level, long long cap = kDefaultTileCap);

/// Runs the W generator through its S partner and the edge expansion, then
/// reads the result back as node-rewriting code. Level 0 is empty.
CurveString nr_expand(const Digits& w_generator, int order, int level, long long cap = kDefaultTileCap);

GasketApproximation gasket_tiles(int order, int level, long long cap = kDefaultTileCap);

/// Closed form: (x, y) is dark iff no base-n digit position of x and y sums
/// past n - 1.
bool is_dark_digitwise(int order, int level, DarkTile tile);


/// Self-avoiding walk on the side n^k + 1 lattice from (0,0) to (n^k,0)
/// whose edges cover every dark tile of F_n(k) exactly once, with allowed
/// turns throughout.
VerificationReport verify_er(const CurveString& curve, long long cap = kDefaultTileCap);

/// Hamiltonian walk over the dark-tile keys of F_n(k), from (0,0) to
/// (n^k - 1, 0).
VerificationReport verify_nr(const CurveString& curve, long long cap = kDefaultTileCap);

/// log_n(T_n).
double hausdorff_dimension(int order);

/// Vertex polyline of the curve: lattice corners for ER, tile centroids for NR.
std::vector<CartesianPoint> curve_polyline(const CurveString& curve);

}  // namespace arrowhead
