#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace liking {

/// Block system over varieties 0..v-1. Blocks keep their construction order;
/// each block is stored sorted with duplicates collapsed. Two designs compare
/// equal when their block multisets are equal.
class Design {
  public:
    /// Throws std::invalid_argument unless v >= 2, at least one block, and
    /// every block element lies in 0..v-1.
    Design(int v, std::vector<std::vector<int>> blocks);

    int varieties() const noexcept { return v_; }
    int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
    const std::vector<int>& block(int i) const { return blocks_.at(static_cast<std::size_t>(i)); }

    bool operator==(const Design& other) const;

  private:
    int v_;
    std::vector<std::vector<int>> blocks_;
};

/// The five balanced-design parameters plus the derived flags.
struct DesignParams {
    int b = 0, v = 0, r = 0, k = 0, lambda = 0;
    bool incomplete = false;  // k < v
    bool symmetric = false;   // b == v and r == k
    bool operator==(const DesignParams&) const = default;
};

/// Which balance condition failed first and on what witness.
struct DesignViolation {
    std::string condition;          // "block size", "replication", "pair count", ...
    std::vector<int> witness;       // block index, variety, or variety pair
    int observed = 0, expected = 0;
};

using DesignCheck = std::variant<DesignParams, DesignViolation>;

/// Verifies the three balance conditions (uniform block size k > 0, uniform
/// replication r > 0, uniform pair count lambda > 0) and returns the
/// parameters, or the first failing condition. lambda is taken from the pair
/// (0,1), r from variety 0, k from block 0.
DesignCheck verify_design(const Design& d);

inline bool is_sbibd(const DesignParams& p) { return p.symmetric && p.incomplete; }

/// Checks |Bi intersect Bj| == lambda for all block pairs i < j of a
/// symmetric design; returns the first offending pair, or nullopt.
/// Throws std::invalid_argument if the design is not verified symmetric.
std::optional<std::pair<int, int>> block_intersection_check(const Design& d, int lambda);

/// Cyclic development of a base block: block i is { (x + i) mod v : x in base }
/// for i = 0..v-1. No balance verification is performed.
Design design_from_difference_set(int modulus, std::span<const int> base);

/// Replaces every block by its complement within 0..v-1, preserving order.
/// Throws std::invalid_argument if the design does not verify. The output may
/// be degenerate (blocks of size 1 or 0) and is not re-verified here.
Design complement_design(const Design& d);

}  // namespace liking
