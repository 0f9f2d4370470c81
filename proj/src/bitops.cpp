#include "liking/bitops.hpp"

#include <limits>
#include <stdexcept>

namespace liking {

std::uint64_t binomial(int n, int k) noexcept {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    constexpr unsigned __int128 cap = std::numeric_limits<std::uint64_t>::max();
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > cap) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

bool next_combination(std::vector<int>& c, int n) noexcept {
    const int t = static_cast<int>(c.size());
    int i = t - 1;
    while (i >= 0 && c[i] == n - t + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
    return true;
}

std::vector<int> unrank_combination(int n, int t, std::uint64_t r) {
    std::vector<int> c(t);
    int v = 0;
    for (int i = 0; i < t; ++i) {
        // skip values whose descendant blocks lie entirely before rank r
        while (true) {
            if (v >= n) throw std::out_of_range("combination rank out of range");
            std::uint64_t block = binomial(n - v - 1, t - i - 1);
            if (r < block) break;
            r -= block;
            ++v;
        }
        c[i] = v++;
    }
    return c;
}

}  // namespace liking
