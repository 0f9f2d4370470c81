#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "liking/digraph.hpp"
#include "liking/verify.hpp"

namespace liking {

enum class SearchMode { Liking, TwoWayLiking };

/// Exhaustive enumeration request. Orders above 8 are rejected; dedupe uses
/// brute-force canonicalization and also requires n <= 8.
struct SearchSpec {
    int n = 0;
    LikingParams params;
    SearchMode mode = SearchMode::Liking;
    bool dedupe = false;
    std::uint64_t limit = 0;  // stop after this many labeled results; 0 = unlimited
    std::uint64_t node_budget = 10'000'000'000ULL;  // candidate placements; 0 = unlimited
    int workers = 0;  // 0 = all available OpenMP threads
    std::string checkpoint_path;  // empty = no checkpointing
    bool resume = false;          // skip prefixes up to the checkpointed one
};

struct SearchReport {
    std::vector<Digraph> found;  // sorted by row encoding; canonical forms if dedupe
    std::uint64_t nodes_explored = 0;
    bool budget_exhausted = false;
    bool limit_reached = false;
};

/// Sink for streamed results; return false to stop the search early. Called
/// from worker threads one at a time, in no particular order.
using FoundSink = std::function<bool(const Digraph&)>;

/// Enumerates exactly the labeled digraphs of the given order with the
/// requested liking property, by deciding out-neighbor rows vertex by vertex
/// under exact subset-count pruning (plus in-neighbor count bounds in two-way
/// mode and the min out-degree bound t+lambda-1). Every result re-passes the
/// verifier before being reported. Two-row prefixes are distributed across
/// OpenMP workers; completed searches report the same sorted result set
/// regardless of worker count.
SearchReport enumerate_liking(const SearchSpec& spec);

/// Streaming variant: results go to the sink instead of the report.
SearchReport enumerate_liking(const SearchSpec& spec, const FoundSink& sink);

struct CanonicalForm {
    Digraph digraph;
    std::vector<int> relabeling;  // old label -> new label
};

/// Lexicographically least adjacency-matrix encoding over all vertex
/// permutations, with one witnessing permutation. Equal canonical forms iff
/// isomorphic. Guarded to n <= 8.
CanonicalForm canonical_form(const Digraph& d);

/// Row-major adjacency bit code used for canonical comparison (n <= 8).
std::uint64_t adjacency_code(const Digraph& d);

/// One audited claim at one order: PASS, or FAIL with a witness description.
struct AuditVerdict {
    std::string check;
    LikingParams params;
    int n = 0;  // 0 for range-aggregated checks
    bool pass = false;
    std::string detail;
};

struct AuditOptions {
    std::uint64_t node_budget = 10'000'000'000ULL;
    int workers = 0;
};

/// Audits the characterization results desk-scale: for each (t,lambda) and
/// each order n <= n_max it enumerates the liking digraphs and checks the
/// applicable claims -- completeness of the complete digraph for t >= 3,
/// diregularity with the degree-equation k for t = 2 and lambda >= 2, the
/// fancy-wheel-or-diregular shape for (2,1), liking implying two-way liking
/// for t >= lambda+1, equal out-degrees across missing arcs for t = lambda+1,
/// and the existence of a liking digraph that is not two-way at (2,2).
/// Parameters with t < 2 are rejected. n_max is guarded to 8.
std::vector<AuditVerdict> theorem_audit(int n_max, std::span<const LikingParams> params_list,
                                        const AuditOptions& opts = {});

}  // namespace liking
