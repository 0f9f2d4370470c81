#pragma once

#include <optional>
#include <vector>

#include "liking/design.hpp"
#include "liking/digraph.hpp"
#include "liking/verify.hpp"

namespace liking::ref {

// Serial reference implementations. These recount everything from plain arc
// lists and element loops, independent of the bitset fast paths, and exist as
// test oracles and as the baseline side of the benchmark target.

/// Common out-/in-neighbor count of a subset, by scanning every vertex and
/// querying individual arcs.
int common_neighbor_count(const Digraph& d, const std::vector<int>& subset,
                          Direction direction);

/// Naive all-subsets recount of the liking property; same witness contract
/// as liking::is_liking.
std::optional<Violation> is_liking(const Digraph& d, LikingParams p);

/// Naive recount of the two-way property.
std::optional<Violation> is_two_way_liking(const Digraph& d, LikingParams p);

/// Filters all 2^(n(n-1)) labeled digraphs of order n for the property.
/// Guarded to n <= 4; results in ascending row-encoding order.
std::vector<Digraph> enumerate_brute_force(int n, LikingParams p, bool two_way);

/// Triple-loop recount of the balanced-design conditions: nullopt when some
/// condition fails, otherwise (b,v,r,k,lambda) with the derived flags.
std::optional<DesignParams> verify_design_recount(const Design& d);

}  // namespace liking::ref
