#include "liking/ref.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "liking/bitops.hpp"

namespace liking::ref {

namespace {

std::set<Arc> arc_set(const Digraph& d) {
    const auto arcs = d.arcs();
    return {arcs.begin(), arcs.end()};
}

int count_common(const std::set<Arc>& arcs, int n, const std::vector<int>& subset,
                 Direction direction) {
    int count = 0;
    for (int w = 0; w < n; ++w) {
        bool all = true;
        for (int v : subset) {
            const Arc a = direction == Direction::Out ? Arc{v, w} : Arc{w, v};
            if (v == w || !arcs.contains(a)) {
                all = false;
                break;
            }
        }
        if (all) ++count;
    }
    return count;
}

std::optional<Violation> check_all_subsets(const Digraph& d, LikingParams p, bool two_way) {
    if (p.t < 1 || p.lambda < 1) throw std::invalid_argument("t and lambda must be positive");
    if (d.order() < p.t) throw std::invalid_argument("digraph order below t");
    const auto arcs = arc_set(d);
    std::vector<int> subset(static_cast<std::size_t>(p.t));
    for (int i = 0; i < p.t; ++i) subset[static_cast<std::size_t>(i)] = i;
    do {
        const int out = count_common(arcs, d.order(), subset, Direction::Out);
        if (out != p.lambda) return Violation{subset, Direction::Out, out, p.lambda};
        if (two_way) {
            const int in = count_common(arcs, d.order(), subset, Direction::In);
            if (in != p.lambda) return Violation{subset, Direction::In, in, p.lambda};
        }
    } while (next_combination(subset, d.order()));
    return std::nullopt;
}

}  // namespace

int common_neighbor_count(const Digraph& d, const std::vector<int>& subset,
                          Direction direction) {
    return count_common(arc_set(d), d.order(), subset, direction);
}

std::optional<Violation> is_liking(const Digraph& d, LikingParams p) {
    return check_all_subsets(d, p, false);
}

std::optional<Violation> is_two_way_liking(const Digraph& d, LikingParams p) {
    return check_all_subsets(d, p, true);
}

std::vector<Digraph> enumerate_brute_force(int n, LikingParams p, bool two_way) {
    if (n < 1 || n > 4) throw std::invalid_argument("brute-force enumeration guarded to n <= 4");
    if (n < p.t) throw std::invalid_argument("order below t");
    const int cells = n * (n - 1);
    std::vector<Digraph> found;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) {
        // decode off-diagonal cells row by row
        std::vector<Arc> arcs;
        int cell = 0;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                if ((code >> cell) & 1) arcs.emplace_back(u, v);
                ++cell;
            }
        Digraph d(n, arcs);
        if (!check_all_subsets(d, p, two_way)) found.push_back(std::move(d));
    }
    std::sort(found.begin(), found.end(), [](const Digraph& a, const Digraph& b) {
        for (int v = 0; v < a.order(); ++v)
            if (a.out_mask(v) != b.out_mask(v)) return a.out_mask(v) < b.out_mask(v);
        return false;
    });
    return found;
}

std::optional<DesignParams> verify_design_recount(const Design& d) {
    const int v = d.varieties();
    const int b = d.block_count();
    const auto& blocks = d.blocks();

    const int k = static_cast<int>(blocks[0].size());
    if (k <= 0) return std::nullopt;
    for (const auto& blk : blocks)
        if (static_cast<int>(blk.size()) != k) return std::nullopt;

    std::vector<int> replication(static_cast<std::size_t>(v), 0);
    for (const auto& blk : blocks)
        for (int x : blk) ++replication[static_cast<std::size_t>(x)];
    const int r = replication[0];
    if (r <= 0) return std::nullopt;
    for (int x = 0; x < v; ++x)
        if (replication[static_cast<std::size_t>(x)] != r) return std::nullopt;

    int lambda = -1;
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y) {
            int pairs = 0;
            for (const auto& blk : blocks) {
                const bool has_x = std::find(blk.begin(), blk.end(), x) != blk.end();
                const bool has_y = std::find(blk.begin(), blk.end(), y) != blk.end();
                if (has_x && has_y) ++pairs;
            }
            if (lambda < 0) lambda = pairs;
            if (pairs != lambda || pairs <= 0) return std::nullopt;
        }

    return DesignParams{b, v, r, k, lambda, k < v, b == v && r == k};
}

}  // namespace liking::ref
