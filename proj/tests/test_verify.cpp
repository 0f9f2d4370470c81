#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "liking/ref.hpp"
#include "liking/verify.hpp"

using namespace liking;

namespace {

Digraph random_digraph(std::mt19937_64& rng, int n, double arc_prob = 0.4) {
    std::bernoulli_distribution arc(arc_prob);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && arc(rng)) arcs.emplace_back(u, v);
    return Digraph(n, arcs);
}

const Digraph directed_triangle(3, std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}});

}  // namespace

TEST_CASE("common neighbors by mask intersection") {
    const std::vector<int> pair{0, 1};
    CHECK(common_neighbors(complete_digraph(4), pair, Direction::Out) ==
          std::vector<int>{2, 3});
    CHECK(common_neighbors(complete_digraph(2), pair, Direction::Out).empty());

    const std::vector<int> cycle{3};
    const Digraph w = fancy_wheel(cycle);
    const std::vector<int> cycle_pair{1, 2};
    CHECK(common_neighbors(w, cycle_pair, Direction::Out) == std::vector<int>{0});

    CHECK_THROWS_AS(common_neighbors(w, std::vector<int>{}, Direction::Out),
                    std::invalid_argument);
}

TEST_CASE("liking verification with lexicographically first witness") {
    CHECK_FALSE(is_liking(complete_digraph(4), {3, 1}).has_value());

    const auto v = is_liking(directed_triangle, {2, 1});
    REQUIRE(v.has_value());
    CHECK(v->subset == std::vector<int>{0, 1});
    CHECK(v->direction == Direction::Out);
    CHECK(v->observed == 0);
    CHECK(v->expected == 1);

    const std::vector<int> two_digons{2, 2};
    CHECK_FALSE(is_liking(fancy_wheel(two_digons), {2, 1}).has_value());

    CHECK_THROWS_AS(is_liking(Digraph(2), {3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(is_liking(Digraph(2), {2, 0}), std::invalid_argument);
}

TEST_CASE("two-way liking verification") {
    CHECK_FALSE(is_two_way_liking(complete_digraph(5), {3, 2}).has_value());
    CHECK_FALSE(is_two_way_liking(complete_digraph(6), {3, 3}).has_value());

    // out-degrees all 1 but vertex 0 has two in-neighbors
    const Digraph d(3, std::vector<Arc>{{0, 1}, {1, 0}, {2, 0}});
    CHECK_FALSE(is_liking(d, {1, 1}).has_value());
    const auto v = is_two_way_liking(d, {1, 1});
    REQUIRE(v.has_value());
    CHECK(v->subset == std::vector<int>{0});
    CHECK(v->direction == Direction::In);
    CHECK(v->observed == 2);
}

TEST_CASE("exhaustive violation listing matches the naive recount") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const Digraph d = random_digraph(rng, n);
        for (const int t : {1, 2, 3}) {
            if (n < t) continue;
            const LikingParams p{t, 1 + static_cast<int>(rng() % 3)};
            CHECK(is_liking(d, p) == ref::is_liking(d, p));
            CHECK(is_two_way_liking(d, p) == ref::is_two_way_liking(d, p));
            const auto all = liking_violations(d, p, true);
            if (!all.empty()) CHECK(all.front() == *ref::is_two_way_liking(d, p));
        }
    }
}

TEST_CASE("collected violations match a direct recount of every subset") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 3);
        const Digraph d = random_digraph(rng, n);
        const LikingParams p{2, 1};
        const auto all = liking_violations(d, p, true);

        std::size_t expected_count = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                const std::vector<int> subset{a, b};
                const int out = ref::common_neighbor_count(d, subset, Direction::Out);
                const int in = ref::common_neighbor_count(d, subset, Direction::In);
                expected_count += (out != p.lambda) + (in != p.lambda);
            }
        CHECK(all.size() == expected_count);
        for (const auto& v : all)
            CHECK(ref::common_neighbor_count(d, v.subset, v.direction) == v.observed);
    }
}

TEST_CASE("worker split reports the same witness as the serial scan") {
    std::mt19937_64 rng(4242);
    // large enough that the parallel path engages
    const Digraph d = random_digraph(rng, 24, 0.55);
    const LikingParams p{3, 4};
    const auto serial = is_liking(d, p, {1});
    const auto parallel = is_liking(d, p, {4});
    CHECK(serial == parallel);
    CHECK(liking_violations(d, p, true, {1}) == liking_violations(d, p, true, {4}));
}

TEST_CASE("degree bounds") {
    CHECK_FALSE(degree_bounds_check(complete_digraph(4), {3, 1}).has_value());
    // bounds hold with slack even though the complete digraph is not (2,2)-liking
    CHECK_FALSE(degree_bounds_check(complete_digraph(7), {2, 2}).has_value());

    const auto failure = degree_bounds_check(directed_triangle, {2, 1});
    REQUIRE(failure.has_value());
    CHECK(failure->condition == "min out-degree t+lambda-1");

    const auto strict = degree_bounds_check(directed_triangle, {2, 1}, true);
    REQUIRE(strict.has_value());
    CHECK(strict->condition == "liking property");

    // every pair in the complete digraph on 4 vertices has 2 >= lambda+1
    // common out-neighbors, matching the (t-i)-subset bound at t=3, i=1
    CHECK_FALSE(degree_bounds_check(complete_digraph(4), {3, 1}, true).has_value());
}

TEST_CASE("eulerian check") {
    CHECK_FALSE(eulerian_check(complete_digraph(5)).has_value());
    CHECK(eulerian_check(Digraph(2, std::vector<Arc>{{0, 1}})) == 0);
}

TEST_CASE("degree equation") {
    CHECK(solve_degree_equation(7, {2, 1}) == 3);
    CHECK(solve_degree_equation(7, {2, 2}) == 4);
    CHECK_FALSE(solve_degree_equation(6, {2, 2}).has_value());
    CHECK(solve_degree_equation(6, {3, 3}) == 5);
    CHECK_THROWS_AS(solve_degree_equation(6, {3, 2}), std::invalid_argument);
}

TEST_CASE("counting identity on complete digraphs") {
    CHECK_FALSE(counting_identity_check(complete_digraph(5), {2, 3}).has_value());
    CHECK_FALSE(counting_identity_check(complete_digraph(6), {3, 3}).has_value());
    CHECK_THROWS_AS(counting_identity_check(complete_digraph(5), {3, 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(counting_identity_check(directed_triangle, {2, 2}),
                    std::invalid_argument);
}

TEST_CASE("structure classification of (2,1)-liking digraphs") {
    const std::vector<int> lengths{3, 2};
    const auto wheel = classify_21(fancy_wheel(lengths));
    REQUIRE(std::holds_alternative<FancyWheelShape>(wheel));
    CHECK(std::get<FancyWheelShape>(wheel).hub == 0);
    CHECK(std::get<FancyWheelShape>(wheel).cycle_lengths == std::vector<int>{3, 2});

    // the complete digraph on 3 vertices is both shapes; the wheel wins
    const auto tie = classify_21(complete_digraph(3));
    REQUIRE(std::holds_alternative<FancyWheelShape>(tie));
    CHECK(std::get<FancyWheelShape>(tie).hub == 0);
    CHECK(std::get<FancyWheelShape>(tie).cycle_lengths == std::vector<int>{2});

    const auto bad = classify_21(directed_triangle);
    REQUIRE(std::holds_alternative<Violation>(bad));
    CHECK(std::get<Violation>(bad).subset == std::vector<int>{0, 1});
}

TEST_CASE("a relabeled fancy wheel still classifies as a fancy wheel") {
    const std::vector<int> lengths{4};
    const Digraph w = fancy_wheel(lengths);
    std::vector<Arc> relabeled;
    const std::vector<int> perm{3, 0, 4, 1, 2};
    for (auto [u, v] : w.arcs())
        relabeled.emplace_back(perm[static_cast<std::size_t>(u)],
                               perm[static_cast<std::size_t>(v)]);
    const auto shape = classify_21(Digraph(5, relabeled));
    REQUIRE(std::holds_alternative<FancyWheelShape>(shape));
    CHECK(std::get<FancyWheelShape>(shape).hub == 3);
    CHECK(std::get<FancyWheelShape>(shape).cycle_lengths == std::vector<int>{4});
}
