#include "liking/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace liking {

namespace {

void check_order(int n) {
    if (n < 1) throw std::invalid_argument("digraph order must be at least 1");
    if (n > Digraph::max_order)
        throw std::invalid_argument("digraph order exceeds " +
                                    std::to_string(Digraph::max_order));
}

void check_vertex(int v, int n) {
    if (v < 0 || v >= n)
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " out of range 0.." + std::to_string(n - 1));
}

}  // namespace

Digraph::Digraph(int n) : n_(n) {
    check_order(n);
    out_.assign(static_cast<std::size_t>(n), 0);
    in_.assign(static_cast<std::size_t>(n), 0);
}

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
    for (auto [u, v] : arcs) {
        check_vertex(u, n);
        check_vertex(v, n);
        if (u == v)
            throw std::invalid_argument("loop arc (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") not allowed");
        out_[u] |= bit(v);
        in_[v] |= bit(u);
    }
}

Digraph Digraph::from_out_rows(int n, std::span<const word> rows) {
    check_order(n);
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("row count does not match order");
    Digraph d(n);
    const word full = full_mask(n);
    for (int v = 0; v < n; ++v) {
        if (rows[v] & bit(v)) throw std::invalid_argument("loop bit on diagonal");
        if (rows[v] & ~full) throw std::invalid_argument("row bit out of range");
        d.out_[v] = rows[v];
        for (word m = rows[v]; m != 0; m &= m - 1) d.in_[std::countr_zero(m)] |= bit(v);
    }
    return d;
}

std::size_t Digraph::arc_count() const noexcept {
    std::size_t c = 0;
    for (word w : out_) c += static_cast<std::size_t>(popcount(w));
    return c;
}

int Digraph::min_out_degree() const {
    int d = n_;  // out-degree never exceeds n-1
    for (int v = 0; v < n_; ++v) d = std::min(d, out_degree(v));
    return d;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> a;
    a.reserve(arc_count());
    for (int u = 0; u < n_; ++u)
        for (word m = out_[u]; m != 0; m &= m - 1) a.emplace_back(u, std::countr_zero(m));
    return a;
}

Digraph Digraph::converse() const {
    Digraph d(n_);
    d.out_ = in_;
    d.in_ = out_;
    return d;
}

Digraph Digraph::complement() const {
    Digraph d(n_);
    const word full = full_mask(n_);
    for (int v = 0; v < n_; ++v) {
        d.out_[v] = full & ~out_[v] & ~bit(v);
        d.in_[v] = full & ~in_[v] & ~bit(v);
    }
    return d;
}

std::optional<int> Digraph::diregular_degree() const {
    const int k = out_degree(0);
    for (int v = 0; v < n_; ++v)
        if (out_degree(v) != k || in_degree(v) != k) return std::nullopt;
    return k;
}

bool Digraph::weakly_connected() const {
    word seen = bit(0);
    word frontier = seen;
    while (frontier != 0) {
        word next = 0;
        for (word m = frontier; m != 0; m &= m - 1) {
            const int v = std::countr_zero(m);
            next |= out_[v] | in_[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == full_mask(n_);
}

Digraph complete_digraph(int n) {
    Digraph d(n);
    std::vector<word> rows(static_cast<std::size_t>(n));
    const word full = full_mask(n);
    for (int v = 0; v < n; ++v) rows[v] = full & ~bit(v);
    return Digraph::from_out_rows(n, rows);
}

Digraph fancy_wheel(std::span<const int> cycle_lengths) {
    if (cycle_lengths.empty())
        throw std::invalid_argument("fancy wheel needs at least one cycle");
    int total = 1;
    for (int len : cycle_lengths) {
        if (len < 2) throw std::invalid_argument("cycle length must be at least 2");
        total += len;
    }
    std::vector<Arc> arcs;
    int start = 1;
    for (int len : cycle_lengths) {
        for (int i = 0; i < len; ++i) {
            const int v = start + i;
            arcs.emplace_back(v, start + (i + 1) % len);
            arcs.emplace_back(0, v);
            arcs.emplace_back(v, 0);
        }
        start += len;
    }
    return Digraph(total, arcs);
}

Digraph double_cycle_cover(int n, std::span<const Arc> edges) {
    std::vector<Arc> arcs;
    arcs.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loop edge not allowed");
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return Digraph(n, arcs);
}

}  // namespace liking
