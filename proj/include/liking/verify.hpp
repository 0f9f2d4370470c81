#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "liking/digraph.hpp"

namespace liking {

/// The (t, lambda) pair: every t vertices must have exactly lambda common
/// out-neighbors (and in-neighbors, for the two-way property).
struct LikingParams {
    int t = 2;
    int lambda = 1;
    bool operator==(const LikingParams&) const = default;
};

enum class Direction { Out, In };

/// Witness that a liking check failed: a t-subset whose common-neighbor
/// count in the given direction differs from lambda.
struct Violation {
    std::vector<int> subset;
    Direction direction = Direction::Out;
    int observed = 0;
    int expected = 0;
    bool operator==(const Violation&) const = default;
};

struct VerifyOptions {
    int workers = 0;  // 0 = all available OpenMP threads
};

/// Intersection of the subset's out- (or in-) neighborhoods, sorted.
/// Throws std::invalid_argument on an empty or out-of-range subset.
std::vector<int> common_neighbors(const Digraph& d, std::span<const int> subset,
                                  Direction direction);

/// Checks that every t-subset has exactly lambda common out-neighbors.
/// Returns the lexicographically first violating subset, or nullopt when the
/// property holds. Throws std::invalid_argument when |V| < t or params are
/// not positive. The t-subset space is split across OpenMP workers; the
/// reported witness does not depend on the worker count.
std::optional<Violation> is_liking(const Digraph& d, LikingParams p,
                                   const VerifyOptions& opts = {});

/// Two-way variant: both the out- and in-neighbor conditions must hold.
/// For a violating subset the Out direction is reported before In.
std::optional<Violation> is_two_way_liking(const Digraph& d, LikingParams p,
                                           const VerifyOptions& opts = {});

/// Exhaustive mode: collects every violation in lexicographic subset order
/// (per subset, Out before In when checking two-way).
std::vector<Violation> liking_violations(const Digraph& d, LikingParams p, bool two_way,
                                         const VerifyOptions& opts = {});

/// Failed degree-bound report: which bound broke and on what witness.
struct BoundsFailure {
    std::string condition;
    std::vector<int> subset;  // offending subset or vertex, when applicable
    int observed = 0;
    int required = 0;
};

/// Confirms the degree bounds that hold for every (t,lambda)-liking digraph:
/// |V| >= t+lambda, min out-degree >= t+lambda-1, and every (t-i)-subset has
/// at least lambda+i common out-neighbors for 1 <= i <= t-1. The liking
/// property itself is assumed; pass check_liking to verify it first.
std::optional<BoundsFailure> degree_bounds_check(const Digraph& d, LikingParams p,
                                                 bool check_liking = false);

/// First vertex with out-degree != in-degree, or nullopt when balanced.
std::optional<int> eulerian_check(const Digraph& d);

/// The unique integer k >= t with C(n-1,t-1)*C(lambda,t) = C(k,t)*C(lambda-1,t-1);
/// for t=2 this is k(k-1) = (n-1)*lambda. Returns nullopt when no integer
/// solution exists. Throws std::invalid_argument for t >= 3 with lambda < t
/// (both sides degenerate to zero).
std::optional<int> solve_degree_equation(int n, LikingParams p);

/// Double-counting identity audit for two-way liking digraphs with
/// lambda >= t >= 2: per vertex, the closed form
/// C(d(v),t)*C(lambda-1,t-1) = C(n-1,t-1)*C(lambda,t) must hold for both
/// degrees, and the pair count it describes is re-counted by explicit
/// enumeration. Returns the first offending vertex, or nullopt.
/// Throws std::invalid_argument when the preconditions fail.
std::optional<int> counting_identity_check(const Digraph& d, LikingParams p);

struct FancyWheelShape {
    int hub = 0;
    std::vector<int> cycle_lengths;  // in traversal order from the lowest label
    bool operator==(const FancyWheelShape&) const = default;
};

struct DiregularShape {
    int k = 0;
    bool operator==(const DiregularShape&) const = default;
};

/// Outcome of the (2,1) structure classification.
using Classification21 = std::variant<FancyWheelShape, DiregularShape, Violation>;

/// Classifies a (2,1)-liking digraph as a fancy wheel (hub with full two-way
/// adjacency whose removal leaves disjoint directed cycles) or as k-diregular
/// of order k^2-k+1; returns the violation when the digraph is not
/// (2,1)-liking. A complete digraph qualifies both ways and is reported as a
/// fancy wheel with hub 0. Throws std::logic_error if a (2,1)-liking digraph
/// matches neither shape.
Classification21 classify_21(const Digraph& d);

}  // namespace liking
