#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "liking/design.hpp"
#include "liking/ref.hpp"

using namespace liking;

namespace {

const std::vector<int> fano_base{1, 2, 4};
const std::vector<int> biplane_base{1, 3, 4, 5, 9};
const std::vector<int> pg23_base{0, 1, 3, 9};

DesignParams expect_params(const Design& d) {
    const auto check = verify_design(d);
    REQUIRE(std::holds_alternative<DesignParams>(check));
    return std::get<DesignParams>(check);
}

Design random_block_system(std::mt19937_64& rng) {
    const int v = 3 + static_cast<int>(rng() % 8);
    const int b = 1 + static_cast<int>(rng() % 10);
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < b; ++i) {
        std::vector<int> block;
        for (int x = 0; x < v; ++x)
            if (rng() % 3 == 0) block.push_back(x);
        if (block.empty()) block.push_back(static_cast<int>(rng() % v));
        blocks.push_back(std::move(block));
    }
    return Design(v, std::move(blocks));
}

}  // namespace

TEST_CASE("difference set developments verify to the expected parameters") {
    const auto fano = expect_params(design_from_difference_set(7, fano_base));
    CHECK(fano == DesignParams{7, 7, 3, 3, 1, true, true});

    const auto biplane = expect_params(design_from_difference_set(11, biplane_base));
    CHECK(biplane == DesignParams{11, 11, 5, 5, 2, true, true});

    const auto plane = expect_params(design_from_difference_set(13, pg23_base));
    CHECK(plane == DesignParams{13, 13, 4, 4, 1, true, true});

    CHECK_THROWS_AS(design_from_difference_set(7, std::vector<int>{1, 9}),
                    std::invalid_argument);
}

TEST_CASE("all 2-subsets of a 3-set form the trivial symmetric design") {
    const Design d(3, {{0, 1}, {1, 2}, {0, 2}});
    const auto params = expect_params(d);
    CHECK(params == DesignParams{3, 3, 2, 2, 1, true, true});
}

TEST_CASE("deleting a block breaks replication") {
    const Design fano = design_from_difference_set(7, fano_base);
    auto blocks = fano.blocks();
    blocks.pop_back();
    const auto check = verify_design(Design(7, blocks));
    REQUIRE(std::holds_alternative<DesignViolation>(check));
    CHECK(std::get<DesignViolation>(check).condition == "replication");
}

TEST_CASE("non-uniform block sizes are caught first") {
    const auto check = verify_design(Design(4, {{0, 1}, {0, 1, 2}}));
    REQUIRE(std::holds_alternative<DesignViolation>(check));
    const auto& violation = std::get<DesignViolation>(check);
    CHECK(violation.condition == "block size");
    CHECK(violation.witness == std::vector<int>{1});
}

TEST_CASE("block intersections of symmetric designs") {
    const Design fano = design_from_difference_set(7, fano_base);
    CHECK_FALSE(block_intersection_check(fano, 1).has_value());
    CHECK(block_intersection_check(fano, 2).has_value());

    CHECK_FALSE(block_intersection_check(complement_design(fano), 2).has_value());
    CHECK_FALSE(
        block_intersection_check(design_from_difference_set(11, biplane_base), 2).has_value());

    CHECK_THROWS_AS(block_intersection_check(Design(3, {{0, 1}}), 1), std::invalid_argument);
}

TEST_CASE("complementing blocks") {
    const Design fano = design_from_difference_set(7, fano_base);
    const Design comp = complement_design(fano);
    CHECK(expect_params(comp) == DesignParams{7, 7, 4, 4, 2, true, true});
    CHECK(complement_design(comp) == fano);

    // complementing the trivial design leaves size-1 blocks with no pairs
    const Design trivial(3, {{0, 1}, {1, 2}, {0, 2}});
    const auto degenerate = verify_design(complement_design(trivial));
    REQUIRE(std::holds_alternative<DesignViolation>(degenerate));
    CHECK(std::get<DesignViolation>(degenerate).condition == "pair count");
}

TEST_CASE("symmetric designs satisfy lambda(v-1) = k(k-1)") {
    for (const Design& d : {design_from_difference_set(7, fano_base),
                            complement_design(design_from_difference_set(7, fano_base)),
                            design_from_difference_set(11, biplane_base),
                            design_from_difference_set(13, pg23_base)}) {
        const auto p = expect_params(d);
        CHECK(p.lambda * (p.v - 1) == p.k * (p.k - 1));
        CHECK(is_sbibd(p));
        CHECK_FALSE(block_intersection_check(d, p.lambda).has_value());
    }
}

TEST_CASE("verifier agrees with the triple-loop recount") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const Design d = random_block_system(rng);
        const auto fast = verify_design(d);
        const auto naive = ref::verify_design_recount(d);
        if (const auto* params = std::get_if<DesignParams>(&fast)) {
            REQUIRE(naive.has_value());
            CHECK(*params == *naive);
        } else {
            CHECK_FALSE(naive.has_value());
        }
    }
}

TEST_CASE("designs compare as block multisets") {
    const Design a(3, {{0, 1}, {1, 2}});
    const Design b(3, {{1, 2}, {0, 1}});
    CHECK(a == b);
    const Design c(3, {{0, 1}, {0, 2}});
    CHECK(a != c);
}
