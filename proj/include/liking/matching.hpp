#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "liking/design.hpp"

namespace liking {

/// Family of subsets of a ground set 0..ground-1, indexed 0..size-1.
class SetFamily {
  public:
    /// Throws std::invalid_argument unless ground >= 1 and every element is
    /// in range. Sets are stored sorted with duplicates collapsed; empty sets
    /// are allowed (they make an SDR impossible).
    SetFamily(int ground, std::vector<std::vector<int>> sets);

    int ground() const noexcept { return ground_; }
    int size() const noexcept { return static_cast<int>(sets_.size()); }
    const std::vector<std::vector<int>>& sets() const noexcept { return sets_; }
    const std::vector<int>& set(int i) const { return sets_.at(static_cast<std::size_t>(i)); }

  private:
    int ground_;
    std::vector<std::vector<int>> sets_;
};

/// Matching between set indices and ground elements; rep_of_set[i] is the
/// element matched to set i, or -1.
struct BipartiteMatching {
    std::vector<int> rep_of_set;
    int size = 0;
};

/// Maximum-cardinality matching by repeated augmenting paths, started from
/// the lowest-index unmatched set and scanning elements in increasing order,
/// so the result is deterministic.
BipartiteMatching max_bipartite_matching(const SetFamily& f);

/// Index set S with |union of the sets in S| < |S|.
struct HallViolator {
    std::vector<int> indices;
    bool operator==(const HallViolator&) const = default;
};

/// Either one representative per set (all distinct) or a Hall violator.
using SdrOutcome = std::variant<std::vector<int>, HallViolator>;

/// Computes a system of distinct representatives via maximum matching. When
/// the matching does not saturate every set, the violator is the set of
/// indices reachable by alternating paths from the lowest unmatched index;
/// it is re-checked against the definition before being returned.
SdrOutcome sdr(const SetFamily& f);

/// The family { V - B_i } of block complements, in block order.
/// Throws std::invalid_argument if the design is not a verified SBIBD.
SetFamily block_complement_family(const Design& d);

/// Test oracle: checks all 2^size - 1 index subsets directly and returns the
/// first violator in mask order, or nullopt. Guarded to size <= 20 and
/// ground <= 64; throws std::invalid_argument beyond that.
std::optional<HallViolator> exhaustive_hall_violator(const SetFamily& f);

/// Every SDR of the family in lexicographic representative order, up to
/// limit outcomes. Guarded to size <= 12.
std::vector<std::vector<int>> all_sdrs(const SetFamily& f, std::size_t limit = 1 << 20);

}  // namespace liking
