#include "arrowhead/enumerate.hpp"

#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "arrowhead/errors.hpp"
#include "arrowhead/lattice.hpp"

namespace arrowhead {

namespace {

constexpr int kMaxPoints = 128;
constexpr int kNone = -1;

class Bits {
public:
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    int count() const {
        int total = 0;
        for (const auto w : words_) total += std::popcount(w);
        return total;
    }

private:
    std::array<std::uint64_t, kMaxPoints / 64> words_{};
};

// Row-major indexed point grid plus the tile bookkeeping needed by S-paths.
struct Layout {
    int side = 0;
    int points = 0;
    int start = 0;
    int target = 0;
    int length = 0;
    std::vector<std::array<int, 6>> neighbour;
    std::vector<std::array<int, 6>> edge_tile;
    std::vector<std::array<int, 3>> tile_corners;
    std::vector<std::array<int, 3>> point_tiles;

    int index(LatticePoint p) const {
        if (!contains_side(side, p)) return kNone;
        // rows shrink by one per y
        return p.y * side - p.y * (p.y - 1) / 2 + p.x;
    }

    Layout(PathKind kind, int order) {
        side = kind == PathKind::S ? order + 1 : order;
        points = static_cast<int>(triangular_number(side));
        start = index({0, 0});
        target = index({side - 1, 0});
        length = static_cast<int>(path_length(kind, order));
        neighbour.assign(points, {});
        edge_tile.assign(points, {});
        point_tiles.assign(points, {kNone, kNone, kNone});

        // tiles of the order-n pattern use their own row-major numbering
        auto tile_index = [order](DarkTile t) {
            if (t.x < 0 || t.y < 0 || t.x + t.y > order - 1) return kNone;
            return t.y * order - t.y * (t.y - 1) / 2 + t.x;
        };
        for (const auto& t : generator_tiles(order)) {
            tile_corners.push_back({index({t.x, t.y}), index({t.x + 1, t.y}), index({t.x, t.y + 1})});
        }
        for (int y = 0; y < side; ++y) {
            for (int x = 0; x + y < side; ++x) {
                const LatticePoint p{x, y};
                const int i = index(p);
                for (int d = 0; d < 6; ++d) {
                    const Direction dir(d);
                    const int j = index(step(p, dir));
                    neighbour[i][d] = j;
                    edge_tile[i][d] = j == kNone ? kNone : tile_index(edge_to_tile(p, dir));
                }
                const std::array<DarkTile, 3> touching{{{x, y}, {x - 1, y}, {x, y - 1}}};
                for (std::size_t k = 0; k < touching.size(); ++k) {
                    point_tiles[i][k] = kind == PathKind::S ? tile_index(touching[k]) : kNone;
                }
            }
        }
    }
};

struct TurnRules {
    std::array<std::array<bool, 6>, 6> w{};
    std::array<std::array<bool, 6>, 6> s{};

    TurnRules() {
        for (int a = 0; a < 6; ++a) {
            for (int b = 0; b < 6; ++b) {
                w[a][b] = w_pair_allowed(Direction(a), Direction(b));
                s[a][b] = s_pair_allowed(Direction(a), Direction(b));
            }
        }
    }
};

const TurnRules& turn_rules() {
    static const TurnRules rules;
    return rules;
}

// Mutable backtracking state; one instance per worker task.
template <PathKind Kind>
class Search {
public:
    explicit Search(const Layout& layout) : layout_(layout), rules_(turn_rules()) {
        current_ = layout_.start;
        visited_.set(current_);
    }

    int depth() const { return depth_; }
    const std::array<std::uint8_t, kMaxPoints>& digits() const { return digits_; }

    bool complete() const {
        if (depth_ != layout_.length || current_ != layout_.target) return false;
        if constexpr (Kind == PathKind::W) {
            return rules_.w[digits_[depth_ - 1]][0];
        }
        return true;
    }

    bool try_push(int d) {
        const int next = layout_.neighbour[current_][d];
        if (next == kNone || visited_.test(next)) return false;
        const bool last_move = depth_ + 1 == layout_.length;
        if ((next == layout_.target) != last_move) return false;

        int tile = kNone;
        if constexpr (Kind == PathKind::W) {
            const int prev = depth_ == 0 ? 0 : digits_[depth_ - 1];
            if (!rules_.w[prev][d]) return false;
        } else if constexpr (Kind == PathKind::S) {
            if (depth_ > 0 && !rules_.s[digits_[depth_ - 1]][d]) return false;
            tile = layout_.edge_tile[current_][d];
            if (tile_done_.test(tile)) return false;
        }

        const int left = current_;
        trail_[depth_] = current_;
        digits_[depth_] = static_cast<std::uint8_t>(d);
        ++depth_;
        current_ = next;
        visited_.set(next);
        if constexpr (Kind == PathKind::S) tile_done_.set(tile);

        if (!last_move && (!feasible_after_leaving(left) || !reachable_rest())) {
            pop();
            return false;
        }
        return true;
    }

    void pop() {
        --depth_;
        if constexpr (Kind == PathKind::S) {
            tile_done_.reset(layout_.edge_tile[trail_[depth_]][digits_[depth_]]);
        }
        visited_.reset(current_);
        current_ = trail_[depth_];
    }

    template <class Leaf>
    void run(Leaf&& leaf) {
        if (depth_ == layout_.length) {
            if (complete()) leaf(*this);
            return;
        }
        for (int d = 0; d < 6; ++d) {
            if (try_push(d)) {
                run(leaf);
                pop();
            }
        }
    }

private:
    // Necessary conditions that only change around the vertex just left.
    bool feasible_after_leaving(int left) const {
        if constexpr (Kind == PathKind::S) {
            // An open tile needs an edge from the head or an unvisited corner to
            // another unvisited corner; two spent corners rule that out.
            for (const int tile : layout_.point_tiles[left]) {
                if (tile == kNone || tile_done_.test(tile)) continue;
                int spent = 0;
                for (const int corner : layout_.tile_corners[tile]) {
                    if (corner != current_ && visited_.test(corner)) ++spent;
                }
                if (spent >= 2) return false;
            }
            return true;
        } else {
            // Every unvisited vertex still needs two ways in and out, the
            // target one.
            for (const int u : layout_.neighbour[left]) {
                if (u == kNone || visited_.test(u)) continue;
                int available = 0;
                for (const int w : layout_.neighbour[u]) {
                    if (w != kNone && (w == current_ || !visited_.test(w))) ++available;
                }
                if (available < (u == layout_.target ? 1 : 2)) return false;
            }
            return true;
        }
    }

    // H/W: the unvisited points must stay connected and touch the head.
    // Removing the head can only split them when its unvisited neighbours
    // form more than one arc around it; only then is a flood fill needed.
    // S: flood fill from the head through unvisited points must reach the
    // target and two corners of every open tile.
    bool reachable_rest() const {
        if constexpr (Kind != PathKind::S) {
            const auto& around = layout_.neighbour[current_];
            std::array<bool, 6> free{};
            int any = kNone;
            for (std::size_t d = 0; d < 6; ++d) {
                free[d] = around[d] != kNone && !visited_.test(around[d]);
                if (free[d]) any = around[d];
            }
            if (any == kNone) return false;
            int arcs = 0;
            for (std::size_t d = 0; d < 6; ++d) {
                if (free[d] && !free[(d + 5) % 6]) ++arcs;
            }
            if (arcs <= 1) return true;
            const auto seen = flood(any);
            return seen.count() == layout_.points - depth_ - 1;
        } else {
            // Live points: the head plus unvisited points reachable from it
            // that still have a way in and a way out (the target needs only
            // a way in). Only live points can be corners of future edges.
            Bits live;
            std::array<int, kMaxPoints> stack;
            int top = 0;
            stack[top++] = current_;
            live.set(current_);
            int reached = 1;
            int dead = 0;
            while (top > 0) {
                const int u = stack[--top];
                int available = 0;
                for (const int w : layout_.neighbour[u]) {
                    if (w == kNone) continue;
                    if (w == current_) {
                        ++available;
                    } else if (!visited_.test(w)) {
                        ++available;
                        if (!live.test(w)) {
                            live.set(w);
                            stack[top++] = w;
                            ++reached;
                        }
                    }
                }
                if (u != current_ && available < (u == layout_.target ? 1 : 2)) {
                    if (u == layout_.target) return false;
                    live.reset(u);
                    ++dead;
                }
            }
            if (!live.test(layout_.target)) return false;
            // An S-path visits T_n + 1 of the T_{n+1} points, so exactly n
            // points stay unvisited; dead and unreachable ones count
            // against that.
            const int unreachable = layout_.points - depth_ - reached;
            if (unreachable + dead > layout_.points - layout_.length - 1) return false;
            for (std::size_t t = 0; t < layout_.tile_corners.size(); ++t) {
                if (tile_done_.test(static_cast<int>(t))) continue;
                int usable = 0;
                for (const int corner : layout_.tile_corners[t]) {
                    if (live.test(corner)) ++usable;
                }
                if (usable < 2) return false;
            }
            return true;
        }
    }

    // Points reachable from `from` through unvisited points.
    Bits flood(int from) const {
        Bits seen;
        std::array<int, kMaxPoints> stack;
        int top = 0;
        stack[top++] = from;
        seen.set(from);
        while (top > 0) {
            const int u = stack[--top];
            for (const int w : layout_.neighbour[u]) {
                if (w != kNone && !visited_.test(w) && !seen.test(w)) {
                    seen.set(w);
                    stack[top++] = w;
                }
            }
        }
        return seen;
    }

    const Layout& layout_;
    const TurnRules& rules_;
    Bits visited_;
    Bits tile_done_;
    int current_ = 0;
    int depth_ = 0;
    std::array<int, kMaxPoints> trail_{};
    std::array<std::uint8_t, kMaxPoints> digits_{};
};

template <PathKind Kind>
Digits to_digits(const Search<Kind>& search) {
    Digits out;
    out.reserve(static_cast<std::size_t>(search.depth()));
    for (int i = 0; i < search.depth(); ++i) out.emplace_back(search.digits()[i]);
    return out;
}

struct TaskResult {
    std::uint64_t count = 0;
    std::vector<Digits> paths;
};

template <PathKind Kind>
std::vector<Digits> split_prefixes(const Layout& layout, int depth_limit) {
    std::vector<Digits> prefixes;
    Search<Kind> search(layout);
    const int limit = std::min(depth_limit, layout.length);
    auto descend = [&](auto&& self) -> void {
        if (search.depth() == limit) {
            prefixes.push_back(to_digits(search));
            return;
        }
        for (int d = 0; d < 6; ++d) {
            if (search.try_push(d)) {
                self(self);
                search.pop();
            }
        }
    };
    descend(descend);
    return prefixes;
}

template <PathKind Kind>
TaskResult run_task(const Layout& layout, const Digits& prefix, bool collect, const PathSink& direct) {
    TaskResult result;
    Search<Kind> search(layout);
    for (const auto d : prefix) {
        if (!search.try_push(d.code())) {
            throw std::logic_error("prefix replay diverged");
        }
    }
    search.run([&](const Search<Kind>& s) {
        ++result.count;
        if (direct) {
            direct(to_digits(s));
        } else if (collect) {
            result.paths.push_back(to_digits(s));
        }
    });
    return result;
}

template <PathKind Kind>
EnumerationReport enumerate_kind(int order, const EnumerationOptions& options, const PathSink& sink) {
    const auto started = std::chrono::steady_clock::now();
    const Layout layout(Kind, order);
    const auto prefixes = split_prefixes<Kind>(layout, std::max(options.split_depth, 0));

    unsigned workers = options.workers == 0 ? std::thread::hardware_concurrency() : options.workers;
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(prefixes.size())));

    EnumerationReport report;
    report.order = order;
    report.kind = Kind;
    report.tasks = prefixes.size();

    if (workers <= 1) {
        for (std::size_t i = 0; i < prefixes.size(); ++i) {
            report.count += run_task<Kind>(layout, prefixes[i], false, sink).count;
            if (options.progress) options.progress(i + 1, prefixes.size());
        }
    } else {
        std::vector<TaskResult> results(prefixes.size());
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> done{0};
        std::mutex progress_mutex;
        std::vector<std::exception_ptr> errors(workers);
        auto worker = [&](unsigned id) {
            try {
                for (std::size_t i = next++; i < prefixes.size(); i = next++) {
                    results[i] = run_task<Kind>(layout, prefixes[i], static_cast<bool>(sink), nullptr);
                    const auto finished = ++done;
                    if (options.progress) {
                        std::lock_guard lock(progress_mutex);
                        options.progress(finished, prefixes.size());
                    }
                }
            } catch (...) {
                errors[id] = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned id = 0; id < workers; ++id) pool.emplace_back(worker, id);
        for (auto& t : pool) t.join();
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
        for (const auto& r : results) {
            report.count += r.count;
            if (sink) {
                for (const auto& p : r.paths) sink(p);
            }
        }
    }

    report.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    report.verified = known_count(Kind, order).has_value();
    return report;
}

}  // namespace

std::optional<std::uint64_t> known_count(PathKind kind, int order) {
    if (order < 2 || order > 9) return std::nullopt;
    const auto i = static_cast<std::size_t>(order - 2);
    return kind == PathKind::H ? kKnownHCounts[i] : kKnownWSCounts[i];
}

std::string EnumerationReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = order;
    j["kind"] = std::string(1, kind_letter(kind));
    j["count"] = count;
    j["elapsed_s"] = elapsed_s;
    j["verified"] = verified;
    return j.dump();
}

EnumerationReport enumerate(PathKind kind, int order, const EnumerationOptions& options, const PathSink& sink) {
    if (order < 2) throw DegenerateOrder(order);
    if (order > kMaxEnumerationOrder) {
        throw std::invalid_argument("order " + std::to_string(order) + " exceeds the enumeration limit of " +
                                    std::to_string(kMaxEnumerationOrder));
    }
    switch (kind) {
        case PathKind::H:
            return enumerate_kind<PathKind::H>(order, options, sink);
        case PathKind::W:
            return enumerate_kind<PathKind::W>(order, options, sink);
        case PathKind::S:
            return enumerate_kind<PathKind::S>(order, options, sink);
    }
    throw std::logic_error("unknown path kind");
}

std::vector<Digits> enumerate_paths(PathKind kind, int order, const EnumerationOptions& options) {
    std::vector<Digits> out;
    enumerate(kind, order, options, [&out](const Digits& d) { out.push_back(d); });
    return out;
}

bool count_equality_check(int order, const EnumerationOptions& options) {
    return enumerate(PathKind::W, order, options).count == enumerate(PathKind::S, order, options).count;
}

}  // namespace arrowhead
