#pragma once

#include <vector>

#include "liking/design.hpp"
#include "liking/digraph.hpp"
#include "liking/verify.hpp"

namespace liking {

struct ConstructionOptions {
    bool verify = true;  // assert the constructed object's properties
};

/// Builds a two-way (2,lambda)-liking digraph from an (n,k,lambda)-SBIBD with
/// n >= 2*lambda: pick a system of distinct representatives of the block
/// complements, then add arcs from every member of each block to that block's
/// representative. The result is loopless and k-diregular; unless verification
/// is disabled, diregularity and the two-way liking property are asserted and
/// a failure raises std::logic_error (it would falsify the construction).
/// Throws std::invalid_argument when the design is not an SBIBD or n < 2*lambda.
Digraph design_to_digraph(const Design& d, const ConstructionOptions& opts = {});

/// Enumerates every SDR of the block-complement family (guarded to n <= 8)
/// and returns the digraph each one yields, in SDR order.
std::vector<Digraph> design_to_digraphs_all_sdrs(const Design& d,
                                                 const ConstructionOptions& opts = {});

/// Converse bridge: a k-diregular digraph that is (2,lambda)-liking for the
/// lambda determined by (n-1)*lambda = k(k-1) yields an (n,k,lambda)-SBIBD
/// whose blocks are the in-neighborhoods. The result is verified before being
/// returned unless verification is disabled. Throws std::invalid_argument on
/// a precondition failure and std::logic_error if verification fails.
Design digraph_to_design(const Digraph& d, const ConstructionOptions& opts = {});

}  // namespace liking
