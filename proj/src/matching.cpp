#include "liking/matching.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "liking/bitops.hpp"

namespace liking {

SetFamily::SetFamily(int ground, std::vector<std::vector<int>> sets) : ground_(ground) {
    if (ground < 1) throw std::invalid_argument("ground set must be nonempty");
    sets_.reserve(sets.size());
    for (auto& s : sets) {
        for (int x : s)
            if (x < 0 || x >= ground)
                throw std::invalid_argument("element " + std::to_string(x) +
                                            " out of range 0.." + std::to_string(ground - 1));
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        sets_.push_back(std::move(s));
    }
}

namespace {

bool augment(const SetFamily& f, int i, std::vector<bool>& visited,
             std::vector<int>& set_of_elem, std::vector<int>& rep_of_set) {
    for (int a : f.set(i)) {
        if (visited[static_cast<std::size_t>(a)]) continue;
        visited[static_cast<std::size_t>(a)] = true;
        const int owner = set_of_elem[static_cast<std::size_t>(a)];
        if (owner < 0 || augment(f, owner, visited, set_of_elem, rep_of_set)) {
            set_of_elem[static_cast<std::size_t>(a)] = i;
            rep_of_set[static_cast<std::size_t>(i)] = a;
            return true;
        }
    }
    return false;
}

}  // namespace

BipartiteMatching max_bipartite_matching(const SetFamily& f) {
    BipartiteMatching m;
    m.rep_of_set.assign(static_cast<std::size_t>(f.size()), -1);
    std::vector<int> set_of_elem(static_cast<std::size_t>(f.ground()), -1);
    for (int i = 0; i < f.size(); ++i) {
        std::vector<bool> visited(static_cast<std::size_t>(f.ground()), false);
        if (augment(f, i, visited, set_of_elem, m.rep_of_set)) ++m.size;
    }
    return m;
}

SdrOutcome sdr(const SetFamily& f) {
    const BipartiteMatching m = max_bipartite_matching(f);
    if (m.size == f.size()) return m.rep_of_set;

    // deficiency certificate: sets reachable by alternating paths from the
    // lowest unmatched index form a Hall violator
    int start = 0;
    while (m.rep_of_set[static_cast<std::size_t>(start)] >= 0) ++start;

    std::vector<int> set_of_elem(static_cast<std::size_t>(f.ground()), -1);
    for (int i = 0; i < f.size(); ++i)
        if (m.rep_of_set[static_cast<std::size_t>(i)] >= 0)
            set_of_elem[static_cast<std::size_t>(m.rep_of_set[static_cast<std::size_t>(i)])] = i;

    std::vector<bool> set_seen(static_cast<std::size_t>(f.size()), false);
    std::vector<bool> elem_seen(static_cast<std::size_t>(f.ground()), false);
    std::vector<int> stack{start};
    set_seen[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (int a : f.set(i)) {
            if (elem_seen[static_cast<std::size_t>(a)]) continue;
            elem_seen[static_cast<std::size_t>(a)] = true;
            const int owner = set_of_elem[static_cast<std::size_t>(a)];
            if (owner >= 0 && !set_seen[static_cast<std::size_t>(owner)]) {
                set_seen[static_cast<std::size_t>(owner)] = true;
                stack.push_back(owner);
            }
        }
    }

    HallViolator violator;
    std::size_t union_size = 0;
    for (int i = 0; i < f.size(); ++i)
        if (set_seen[static_cast<std::size_t>(i)]) violator.indices.push_back(i);
    for (int a = 0; a < f.ground(); ++a)
        if (elem_seen[static_cast<std::size_t>(a)]) ++union_size;
    if (union_size >= violator.indices.size())
        throw std::logic_error("extracted Hall violator is not deficient");
    return violator;
}

SetFamily block_complement_family(const Design& d) {
    const auto check = verify_design(d);
    const auto* params = std::get_if<DesignParams>(&check);
    if (!params || !is_sbibd(*params))
        throw std::invalid_argument("block complements require a verified SBIBD");
    std::vector<std::vector<int>> sets;
    sets.reserve(d.blocks().size());
    for (const auto& block : d.blocks()) {
        std::vector<int> comp;
        std::size_t idx = 0;
        for (int x = 0; x < d.varieties(); ++x) {
            if (idx < block.size() && block[idx] == x)
                ++idx;
            else
                comp.push_back(x);
        }
        sets.push_back(std::move(comp));
    }
    return SetFamily(d.varieties(), std::move(sets));
}

std::optional<HallViolator> exhaustive_hall_violator(const SetFamily& f) {
    if (f.size() > 20) throw std::invalid_argument("exhaustive Hall check guarded to 20 sets");
    if (f.ground() > 64) throw std::invalid_argument("exhaustive Hall check needs ground <= 64");
    std::vector<word> masks(static_cast<std::size_t>(f.size()));
    for (int i = 0; i < f.size(); ++i) masks[static_cast<std::size_t>(i)] = vertices_to_mask(f.set(i));
    for (std::uint32_t s = 1; s < (1u << f.size()); ++s) {
        word u = 0;
        for (std::uint32_t m = s; m != 0; m &= m - 1)
            u |= masks[static_cast<std::size_t>(std::countr_zero(m))];
        if (popcount(u) < std::popcount(s)) {
            HallViolator violator;
            for (std::uint32_t m = s; m != 0; m &= m - 1)
                violator.indices.push_back(std::countr_zero(m));
            return violator;
        }
    }
    return std::nullopt;
}

namespace {

void sdr_backtrack(const SetFamily& f, int i, word used, std::vector<int>& current,
                   std::vector<std::vector<int>>& out, std::size_t limit) {
    if (out.size() >= limit) return;
    if (i == f.size()) {
        out.push_back(current);
        return;
    }
    for (int a : f.set(i)) {
        if (used & bit(a)) continue;
        current[static_cast<std::size_t>(i)] = a;
        sdr_backtrack(f, i + 1, used | bit(a), current, out, limit);
        if (out.size() >= limit) return;
    }
}

}  // namespace

std::vector<std::vector<int>> all_sdrs(const SetFamily& f, std::size_t limit) {
    if (f.size() > 12) throw std::invalid_argument("SDR enumeration guarded to 12 sets");
    if (f.ground() > 64) throw std::invalid_argument("SDR enumeration needs ground <= 64");
    std::vector<std::vector<int>> out;
    std::vector<int> current(static_cast<std::size_t>(f.size()), -1);
    sdr_backtrack(f, 0, 0, current, out, limit);
    return out;
}

}  // namespace liking
