#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace liking {

using word = std::uint64_t;

inline int popcount(word w) noexcept { return std::popcount(w); }

/// Mask with bits 0..n-1 set.
inline word full_mask(int n) noexcept {
    return n >= 64 ? ~word{0} : (word{1} << n) - 1;
}

inline word bit(int i) noexcept { return word{1} << i; }

/// Expands a mask into its sorted list of set bit positions.
inline std::vector<int> mask_to_vertices(word m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    while (m != 0) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

inline word vertices_to_mask(const std::vector<int>& vs) {
    word m = 0;
    for (int v : vs) m |= bit(v);
    return m;
}

/// C(n, k) saturating at UINT64_MAX; zero outside the domain.
std::uint64_t binomial(int n, int k) noexcept;

/// Advances a strictly increasing index tuple to the next t-combination of
/// 0..n-1 in lexicographic order. Returns false after the last combination.
bool next_combination(std::vector<int>& c, int n) noexcept;

/// Lexicographically r-th t-combination of 0..n-1 (r counted from 0).
std::vector<int> unrank_combination(int n, int t, std::uint64_t r);

}  // namespace liking
