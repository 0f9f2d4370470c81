#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "liking/bitops.hpp"

namespace liking {

using Arc = std::pair<int, int>;

/// Immutable loopless digraph on vertices 0..n-1 with dense bitset adjacency.
///
/// Out- and in-neighborhoods are mirrored single-word bitsets, so arc queries
/// are O(1) and neighborhood intersections are single AND+popcount operations.
/// The order is capped at 64 (one machine word per neighborhood).
class Digraph {
  public:
    static constexpr int max_order = 64;

    /// Digraph on n vertices with no arcs. Throws std::invalid_argument
    /// unless 1 <= n <= max_order.
    explicit Digraph(int n);

    /// Digraph with exactly the given arcs, duplicates collapsed.
    /// Throws std::invalid_argument on a loop arc or an endpoint out of range.
    Digraph(int n, std::span<const Arc> arcs);

    /// Builds directly from per-vertex out-neighbor masks (bit w of row v set
    /// iff arc (v,w)). Throws on a set diagonal bit or a bit >= n.
    static Digraph from_out_rows(int n, std::span<const word> rows);

    int order() const noexcept { return n_; }
    std::size_t arc_count() const noexcept;

    bool has_arc(int u, int v) const { return (out_[u] >> v) & 1; }
    word out_mask(int v) const { return out_[v]; }
    word in_mask(int v) const { return in_[v]; }
    int out_degree(int v) const { return popcount(out_[v]); }
    int in_degree(int v) const { return popcount(in_[v]); }
    int min_out_degree() const;

    /// All arcs sorted by (tail, head).
    std::vector<Arc> arcs() const;

    /// The digraph with every arc reversed.
    Digraph converse() const;

    /// Arcs of the complete digraph minus this digraph's arcs.
    Digraph complement() const;

    /// The common degree k when every vertex has out-degree = in-degree = k.
    std::optional<int> diregular_degree() const;

    /// True iff the underlying undirected graph is connected.
    bool weakly_connected() const;

    bool operator==(const Digraph&) const = default;

  private:
    int n_;
    std::vector<word> out_, in_;
};

/// Complete digraph: both arcs between every pair of distinct vertices.
Digraph complete_digraph(int n);

/// Disjoint directed cycles of the given lengths plus a hub (vertex 0) with
/// arcs to and from every cycle vertex. Cycle vertices follow the hub
/// consecutively in input order. Each length must be >= 2 (a length-2 cycle
/// is the digon).
Digraph fancy_wheel(std::span<const int> cycle_lengths);

/// Replaces each undirected edge {u,v} with the directed 2-cycle u<->v.
Digraph double_cycle_cover(int n, std::span<const Arc> edges);

}  // namespace liking
