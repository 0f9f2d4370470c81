#include "liking/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "liking/bitops.hpp"

namespace liking {

namespace {

constexpr std::uint64_t kSerialCutoff = 1 << 12;

void check_params(LikingParams p) {
    if (p.t < 1 || p.lambda < 1)
        throw std::invalid_argument("t and lambda must be positive");
}

word subset_intersection(const Digraph& d, const std::vector<int>& subset, Direction dir) {
    word m = full_mask(d.order());
    for (int v : subset) m &= dir == Direction::Out ? d.out_mask(v) : d.in_mask(v);
    return m;
}

// Scans combination ranks [lo, hi). Emits (order key, violation) pairs where
// key = 2*rank for Out and 2*rank+1 for In; stops after the first hit unless
// collecting. Returns whether the sink asked to stop.
template <typename Emit>
bool scan_ranks(const Digraph& d, LikingParams p, bool two_way, std::uint64_t lo,
                std::uint64_t hi, bool collect_all, const Emit& emit) {
    if (lo >= hi) return false;
    const int n = d.order();
    std::vector<int> subset = unrank_combination(n, p.t, lo);
    for (std::uint64_t r = lo; r < hi; ++r) {
        const int out = popcount(subset_intersection(d, subset, Direction::Out));
        if (out != p.lambda) {
            emit(2 * r, Violation{subset, Direction::Out, out, p.lambda});
            if (!collect_all) return true;
        }
        if (two_way) {
            const int in = popcount(subset_intersection(d, subset, Direction::In));
            if (in != p.lambda) {
                emit(2 * r + 1, Violation{subset, Direction::In, in, p.lambda});
                if (!collect_all) return true;
            }
        }
        next_combination(subset, n);
    }
    return false;
}

std::vector<std::pair<std::uint64_t, Violation>> scan_subsets(const Digraph& d, LikingParams p,
                                                              bool two_way, bool collect_all,
                                                              const VerifyOptions& opts) {
    check_params(p);
    if (d.order() < p.t) throw std::invalid_argument("digraph order below t");
    const std::uint64_t total = binomial(d.order(), p.t);

    std::vector<std::pair<std::uint64_t, Violation>> hits;
    auto serial_emit = [&hits](std::uint64_t key, Violation v) {
        hits.emplace_back(key, std::move(v));
    };

    const int workers = opts.workers > 0 ? opts.workers : omp_get_max_threads();
    if (workers <= 1 || total < kSerialCutoff) {
        scan_ranks(d, p, two_way, 0, total, collect_all, serial_emit);
        return hits;
    }

    const int chunks = workers;
    std::vector<std::vector<std::pair<std::uint64_t, Violation>>> local(
        static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(static) num_threads(workers)
    for (int c = 0; c < chunks; ++c) {
        // 128-bit products: total*chunks can exceed 64 bits for huge C(n,t)
        const auto lo = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(total) * static_cast<unsigned>(c) / chunks);
        const auto hi = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(total) * (static_cast<unsigned>(c) + 1) / chunks);
        auto& mine = local[static_cast<std::size_t>(c)];
        scan_ranks(d, p, two_way, lo, hi, collect_all,
                   [&mine](std::uint64_t key, Violation v) {
                       mine.emplace_back(key, std::move(v));
                   });
    }
    for (auto& chunk : local)
        for (auto& hit : chunk) hits.push_back(std::move(hit));
    std::sort(hits.begin(), hits.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!collect_all && hits.size() > 1) hits.resize(1);
    return hits;
}

std::uint64_t integer_sqrt(std::uint64_t x) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

// C(a,b)*C(c,d) with saturation detection.
unsigned __int128 binomial_product(int a, int b, int c, int d) {
    const std::uint64_t x = binomial(a, b);
    const std::uint64_t y = binomial(c, d);
    constexpr std::uint64_t sat = std::numeric_limits<std::uint64_t>::max();
    if (x == sat || y == sat) throw std::invalid_argument("parameters too large");
    return static_cast<unsigned __int128>(x) * y;
}

}  // namespace

std::vector<int> common_neighbors(const Digraph& d, std::span<const int> subset,
                                  Direction direction) {
    if (subset.empty()) throw std::invalid_argument("subset must be nonempty");
    word m = full_mask(d.order());
    for (int v : subset) {
        if (v < 0 || v >= d.order()) throw std::invalid_argument("subset vertex out of range");
        m &= direction == Direction::Out ? d.out_mask(v) : d.in_mask(v);
    }
    return mask_to_vertices(m);
}

std::optional<Violation> is_liking(const Digraph& d, LikingParams p,
                                   const VerifyOptions& opts) {
    auto hits = scan_subsets(d, p, false, false, opts);
    if (hits.empty()) return std::nullopt;
    return std::move(hits.front().second);
}

std::optional<Violation> is_two_way_liking(const Digraph& d, LikingParams p,
                                           const VerifyOptions& opts) {
    auto hits = scan_subsets(d, p, true, false, opts);
    if (hits.empty()) return std::nullopt;
    return std::move(hits.front().second);
}

std::vector<Violation> liking_violations(const Digraph& d, LikingParams p, bool two_way,
                                         const VerifyOptions& opts) {
    auto hits = scan_subsets(d, p, two_way, true, opts);
    std::vector<Violation> out;
    out.reserve(hits.size());
    for (auto& hit : hits) out.push_back(std::move(hit.second));
    return out;
}

std::optional<BoundsFailure> degree_bounds_check(const Digraph& d, LikingParams p,
                                                 bool check_liking) {
    check_params(p);
    if (check_liking) {
        if (auto v = is_liking(d, p))
            return BoundsFailure{"liking property", v->subset, v->observed, p.lambda};
    }
    const int n = d.order();
    if (n < p.t + p.lambda)
        return BoundsFailure{"order at least t+lambda", {}, n, p.t + p.lambda};
    for (int v = 0; v < n; ++v)
        if (d.out_degree(v) < p.t + p.lambda - 1)
            return BoundsFailure{"min out-degree t+lambda-1", {v}, d.out_degree(v),
                                 p.t + p.lambda - 1};
    for (int i = 1; i <= p.t - 1; ++i) {
        const int size = p.t - i;
        std::vector<int> subset(static_cast<std::size_t>(size));
        for (int j = 0; j < size; ++j) subset[static_cast<std::size_t>(j)] = j;
        do {
            const int cnt = popcount(subset_intersection(d, subset, Direction::Out));
            if (cnt < p.lambda + i)
                return BoundsFailure{"common out-neighbors of t-i vertices", subset, cnt,
                                     p.lambda + i};
        } while (next_combination(subset, n));
    }
    return std::nullopt;
}

std::optional<int> eulerian_check(const Digraph& d) {
    for (int v = 0; v < d.order(); ++v)
        if (d.out_degree(v) != d.in_degree(v)) return v;
    return std::nullopt;
}

std::optional<int> solve_degree_equation(int n, LikingParams p) {
    check_params(p);
    if (n < 1) throw std::invalid_argument("order must be positive");
    if (p.t >= 3 && p.lambda < p.t)
        throw std::invalid_argument(
            "equation degenerate: both sides vanish for t >= 3 with lambda < t");

    if (p.t == 2) {
        // k(k-1) = (n-1)*lambda, solved through the integer square root
        const std::uint64_t target =
            static_cast<std::uint64_t>(n - 1) * static_cast<std::uint64_t>(p.lambda);
        const std::uint64_t s = integer_sqrt(1 + 4 * target);
        if (s * s != 1 + 4 * target || (1 + s) % 2 != 0) return std::nullopt;
        const std::uint64_t k = (1 + s) / 2;
        if (k < static_cast<std::uint64_t>(p.t)) return std::nullopt;
        return static_cast<int>(k);
    }

    const unsigned __int128 target = binomial_product(n - 1, p.t - 1, p.lambda, p.t);
    for (int k = p.t;; ++k) {
        const unsigned __int128 rhs = binomial_product(k, p.t, p.lambda - 1, p.t - 1);
        if (rhs == target) return k;
        if (rhs > target) return std::nullopt;
    }
}

std::optional<int> counting_identity_check(const Digraph& d, LikingParams p) {
    if (!(p.lambda >= p.t && p.t >= 2))
        throw std::invalid_argument("counting identity requires lambda >= t >= 2");
    if (is_two_way_liking(d, p))
        throw std::invalid_argument("digraph is not a two-way (t,lambda)-liking digraph");

    const int n = d.order();
    const unsigned __int128 rhs = binomial_product(n - 1, p.t - 1, p.lambda, p.t);
    for (int v = 0; v < n; ++v) {
        const unsigned __int128 closed_out =
            binomial_product(d.out_degree(v), p.t, p.lambda - 1, p.t - 1);
        const unsigned __int128 closed_in =
            binomial_product(d.in_degree(v), p.t, p.lambda - 1, p.t - 1);
        if (closed_out != rhs || closed_in != rhs) return v;

        // re-count |S_v^+| pair by pair: X a t-subset of N+(v), Y a
        // (t-1)-subset of the common in-neighbors of X minus v
        std::uint64_t enumerated = 0;
        const std::vector<int> out_nbrs = mask_to_vertices(d.out_mask(v));
        if (static_cast<int>(out_nbrs.size()) >= p.t) {
            std::vector<int> pick(static_cast<std::size_t>(p.t));
            for (int j = 0; j < p.t; ++j) pick[static_cast<std::size_t>(j)] = j;
            do {
                word common_in = full_mask(n) & ~bit(v);
                for (int idx : pick) common_in &= d.in_mask(out_nbrs[static_cast<std::size_t>(idx)]);
                const std::vector<int> pool = mask_to_vertices(common_in);
                if (static_cast<int>(pool.size()) >= p.t - 1) {
                    std::vector<int> y(static_cast<std::size_t>(p.t - 1));
                    for (int j = 0; j < p.t - 1; ++j) y[static_cast<std::size_t>(j)] = j;
                    do {
                        ++enumerated;
                    } while (next_combination(y, static_cast<int>(pool.size())));
                }
            } while (next_combination(pick, static_cast<int>(out_nbrs.size())));
        }
        if (enumerated != static_cast<std::uint64_t>(rhs)) return v;
    }
    return std::nullopt;
}

Classification21 classify_21(const Digraph& d) {
    if (auto v = is_liking(d, LikingParams{2, 1})) return *v;

    const int n = d.order();
    const word full = full_mask(n);
    int hub = -1;
    int hub_count = 0;
    for (int v = 0; v < n; ++v) {
        const word rest = full & ~bit(v);
        if (d.out_mask(v) == rest && d.in_mask(v) == rest) {
            if (hub < 0) hub = v;
            ++hub_count;
        }
    }
    if (hub >= 0) {
        if (hub_count > 1) hub = 0;  // complete digraph; fancy wheel wins the tie
        const word rest = full & ~bit(hub);
        std::vector<int> lengths;
        word unvisited = rest;
        while (unvisited != 0) {
            const int start = std::countr_zero(unvisited);
            int cur = start;
            int len = 0;
            while (true) {
                unvisited &= ~bit(cur);
                ++len;
                const word outs = d.out_mask(cur) & rest;
                const word ins = d.in_mask(cur) & rest;
                if (popcount(outs) != 1 || popcount(ins) != 1)
                    throw std::logic_error(
                        "(2,1)-liking digraph with hub does not decompose into cycles");
                const int next = std::countr_zero(outs);
                if (next == start) break;
                if ((unvisited & bit(next)) == 0)
                    throw std::logic_error(
                        "(2,1)-liking digraph with hub does not decompose into cycles");
                cur = next;
            }
            if (len < 2)
                throw std::logic_error(
                    "(2,1)-liking digraph with hub does not decompose into cycles");
            lengths.push_back(len);
        }
        return FancyWheelShape{hub, std::move(lengths)};
    }

    const auto k = d.diregular_degree();
    if (!k || *k < 2 || n != *k * *k - *k + 1)
        throw std::logic_error("(2,1)-liking digraph is neither a fancy wheel nor "
                               "k-diregular of order k^2-k+1");
    return DiregularShape{*k};
}

}  // namespace liking
