#include "liking/construction.hpp"

#include <stdexcept>
#include <string>

#include "liking/matching.hpp"

namespace liking {

namespace {

DesignParams require_sbibd(const Design& d) {
    const auto check = verify_design(d);
    const auto* params = std::get_if<DesignParams>(&check);
    if (!params || !is_sbibd(*params))
        throw std::invalid_argument("construction requires a verified SBIBD");
    // lambda < k, so equal intersections also force the blocks to be distinct
    if (block_intersection_check(d, params->lambda))
        throw std::invalid_argument("blocks do not meet pairwise in lambda varieties");
    return *params;
}

Digraph digraph_from_sdr(const Design& d, const std::vector<int>& reps,
                         const DesignParams& params, bool verify) {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(params.v) * static_cast<std::size_t>(params.k));
    for (int t = 0; t < d.block_count(); ++t)
        for (int v : d.block(t)) arcs.emplace_back(v, reps[static_cast<std::size_t>(t)]);
    Digraph result(params.v, arcs);

    if (verify) {
        const auto k = result.diregular_degree();
        if (!k || *k != params.k)
            throw std::logic_error("constructed digraph is not k-diregular");
        if (is_two_way_liking(result, LikingParams{2, params.lambda}))
            throw std::logic_error("constructed digraph is not two-way (2,lambda)-liking");
    }
    return result;
}

}  // namespace

Digraph design_to_digraph(const Design& d, const ConstructionOptions& opts) {
    const DesignParams params = require_sbibd(d);
    if (params.v < 2 * params.lambda)
        throw std::invalid_argument("construction requires order >= 2*lambda");

    const SetFamily family = block_complement_family(d);
    const SdrOutcome outcome = sdr(family);
    const auto* reps = std::get_if<std::vector<int>>(&outcome);
    if (!reps)
        throw std::logic_error(
            "block complements of an SBIBD with n >= 2*lambda admitted no SDR");
    return digraph_from_sdr(d, *reps, params, opts.verify);
}

std::vector<Digraph> design_to_digraphs_all_sdrs(const Design& d,
                                                 const ConstructionOptions& opts) {
    const DesignParams params = require_sbibd(d);
    if (params.v < 2 * params.lambda)
        throw std::invalid_argument("construction requires order >= 2*lambda");
    if (params.v > 8)
        throw std::invalid_argument("SDR enumeration guarded to designs with v <= 8");

    const SetFamily family = block_complement_family(d);
    std::vector<Digraph> out;
    for (const auto& reps : all_sdrs(family))
        out.push_back(digraph_from_sdr(d, reps, params, opts.verify));
    return out;
}

Design digraph_to_design(const Digraph& d, const ConstructionOptions& opts) {
    const int n = d.order();
    if (n < 2) throw std::invalid_argument("conversion needs order >= 2");
    const auto k = d.diregular_degree();
    if (!k || *k < 1) throw std::invalid_argument("digraph is not k-diregular");

    const long long product = static_cast<long long>(*k) * (*k - 1);
    if (product == 0 || product % (n - 1) != 0)
        throw std::invalid_argument("no positive integer lambda satisfies (n-1)lambda = k(k-1)");
    const int lambda = static_cast<int>(product / (n - 1));

    if (auto violation = is_liking(d, LikingParams{2, lambda}))
        throw std::invalid_argument("digraph is not (2,lambda)-liking for lambda = " +
                                    std::to_string(lambda));

    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) blocks.push_back(mask_to_vertices(d.in_mask(w)));
    Design result(n, std::move(blocks));

    if (opts.verify) {
        const auto check = verify_design(result);
        const auto* params = std::get_if<DesignParams>(&check);
        if (!params || !is_sbibd(*params) || params->k != *k || params->lambda != lambda)
            throw std::logic_error("in-neighborhood blocks did not form the expected SBIBD");
    }
    return result;
}

}  // namespace liking
