#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arrowhead/paths.hpp"

namespace arrowhead {

/// Largest order the enumerator accepts; the overall grid of order 12 has 91
/// points, which fits the 128-bit visited sets.
inline constexpr int kMaxEnumerationOrder = 12;

/// Published counts for n = 2..9, used to flag larger orders as unverified.
inline constexpr std::uint64_t kKnownHCounts[] = {1, 2, 10, 92, 1852, 78032, 6846876, 1255156712};
inline constexpr std::uint64_t kKnownWSCounts[] = {1, 2, 4, 16, 68, 464, 3828, 44488};

std::optional<std::uint64_t> known_count(PathKind kind, int order);

struct EnumerationOptions {
    /// 0 picks std::thread::hardware_concurrency().
    unsigned workers = 1;
    /// The search tree is cut at this many digits; each prefix is one task.
    int split_depth = 3;
    /// Called after each finished task with (done, total).
    std::function<void(std::size_t, std::size_t)> progress;
};

struct EnumerationReport {
    int order = 0;
    PathKind kind = PathKind::H;
    std::uint64_t count = 0;
    double elapsed_s = 0.0;
    /// False when no published count exists for this kind and order.
    bool verified = false;
    std::size_t tasks = 0;

    /// {"n":, "kind":, "count":, "elapsed_s":, "verified":}
    std::string to_json() const;
};

/// Receives paths in lexicographic digit order.
using PathSink = std::function<void(const Digits&)>;

/// Depth-first enumeration of every valid path of `kind` and `order`.
/// Without a sink no path is materialized. Throws DegenerateOrder or
/// std::invalid_argument for orders outside 2..kMaxEnumerationOrder.
EnumerationReport enumerate(PathKind kind, int order, const EnumerationOptions& options = {},
                            const PathSink& sink = nullptr);

std::vector<Digits> enumerate_paths(PathKind kind, int order, const EnumerationOptions& options = {});

/// |W_n| == |S_n| by two independent searches.
bool count_equality_check(int order, const EnumerationOptions& options = {});

}  // namespace arrowhead
