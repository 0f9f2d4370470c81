#include "liking/design.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace liking {

namespace {

std::vector<int> normalized_block(std::vector<int> block, int v) {
    for (int x : block)
        if (x < 0 || x >= v)
            throw std::invalid_argument("variety " + std::to_string(x) +
                                        " out of range 0.." + std::to_string(v - 1));
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    return block;
}

}  // namespace

Design::Design(int v, std::vector<std::vector<int>> blocks) : v_(v) {
    if (v < 2) throw std::invalid_argument("design needs at least 2 varieties");
    if (blocks.empty()) throw std::invalid_argument("design needs at least one block");
    blocks_.reserve(blocks.size());
    for (auto& block : blocks) blocks_.push_back(normalized_block(std::move(block), v));
}

bool Design::operator==(const Design& other) const {
    if (v_ != other.v_ || blocks_.size() != other.blocks_.size()) return false;
    auto a = blocks_;
    auto b = other.blocks_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

DesignCheck verify_design(const Design& d) {
    const int v = d.varieties();
    const int b = d.block_count();
    const auto& blocks = d.blocks();

    const int k = static_cast<int>(blocks[0].size());
    if (k == 0) return DesignViolation{"block size", {0}, 0, 1};
    for (int i = 1; i < b; ++i)
        if (static_cast<int>(blocks[static_cast<std::size_t>(i)].size()) != k)
            return DesignViolation{"block size", {i},
                                   static_cast<int>(blocks[static_cast<std::size_t>(i)].size()), k};

    std::vector<int> replication(static_cast<std::size_t>(v), 0);
    for (const auto& block : blocks)
        for (int x : block) ++replication[static_cast<std::size_t>(x)];
    const int r = replication[0];
    if (r == 0) return DesignViolation{"replication", {0}, 0, 1};
    for (int x = 1; x < v; ++x)
        if (replication[static_cast<std::size_t>(x)] != r)
            return DesignViolation{"replication", {x}, replication[static_cast<std::size_t>(x)], r};

    // pair counts, checked against the count for (0,1)
    std::vector<std::vector<int>> pair_count(static_cast<std::size_t>(v),
                                             std::vector<int>(static_cast<std::size_t>(v), 0));
    for (const auto& block : blocks)
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                ++pair_count[static_cast<std::size_t>(block[i])][static_cast<std::size_t>(block[j])];
    const int lambda = pair_count[0][1];
    if (lambda == 0) return DesignViolation{"pair count", {0, 1}, 0, 1};
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y)
            if (pair_count[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] != lambda)
                return DesignViolation{
                    "pair count", {x, y},
                    pair_count[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)], lambda};

    DesignParams params{b, v, r, k, lambda, k < v, b == v && r == k};
    // double-counting identities every balanced design satisfies
    if (static_cast<long long>(b) * k != static_cast<long long>(v) * r ||
        static_cast<long long>(lambda) * (v - 1) != static_cast<long long>(r) * (k - 1))
        throw std::logic_error("balanced design failed its parameter identities");
    return params;
}

std::optional<std::pair<int, int>> block_intersection_check(const Design& d, int lambda) {
    const auto check = verify_design(d);
    const auto* params = std::get_if<DesignParams>(&check);
    if (!params || !params->symmetric)
        throw std::invalid_argument("block intersection check requires a verified symmetric design");
    const auto& blocks = d.blocks();
    for (int i = 0; i < d.block_count(); ++i)
        for (int j = i + 1; j < d.block_count(); ++j) {
            const auto& a = blocks[static_cast<std::size_t>(i)];
            const auto& b = blocks[static_cast<std::size_t>(j)];
            std::vector<int> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(common));
            if (static_cast<int>(common.size()) != lambda) return std::make_pair(i, j);
        }
    return std::nullopt;
}

Design design_from_difference_set(int modulus, std::span<const int> base) {
    if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
    if (base.size() < 2) throw std::invalid_argument("base block needs at least 2 varieties");
    for (int x : base)
        if (x < 0 || x >= modulus)
            throw std::invalid_argument("base variety " + std::to_string(x) + " out of range");
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<std::size_t>(modulus));
    for (int shift = 0; shift < modulus; ++shift) {
        std::vector<int> block;
        block.reserve(base.size());
        for (int x : base) block.push_back((x + shift) % modulus);
        blocks.push_back(std::move(block));
    }
    return Design(modulus, std::move(blocks));
}

Design complement_design(const Design& d) {
    if (std::holds_alternative<DesignViolation>(verify_design(d)))
        throw std::invalid_argument("complement requires a verified design");
    const int v = d.varieties();
    std::vector<std::vector<int>> blocks;
    blocks.reserve(d.blocks().size());
    for (const auto& block : d.blocks()) {
        std::vector<int> comp;
        comp.reserve(static_cast<std::size_t>(v) - block.size());
        std::size_t idx = 0;
        for (int x = 0; x < v; ++x) {
            if (idx < block.size() && block[idx] == x)
                ++idx;
            else
                comp.push_back(x);
        }
        // size-1 or empty complements are allowed; verify_design rejects them
        blocks.push_back(std::move(comp));
    }
    return Design(v, std::move(blocks));
}

}  // namespace liking
