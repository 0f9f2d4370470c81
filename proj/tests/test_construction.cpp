#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "liking/construction.hpp"
#include "liking/design.hpp"

using namespace liking;

namespace {

const std::vector<int> fano_base{1, 2, 4};
const std::vector<int> biplane_base{1, 3, 4, 5, 9};
const std::vector<int> pg23_base{0, 1, 3, 9};

Design fano() { return design_from_difference_set(7, fano_base); }

DesignParams params_of(const Design& d) {
    return std::get<DesignParams>(verify_design(d));
}

}  // namespace

TEST_CASE("fano plane builds a 3-diregular two-way (2,1)-liking digraph") {
    const Digraph d = design_to_digraph(fano());
    CHECK(d.order() == 7);
    CHECK(d.diregular_degree() == 3);
    CHECK_FALSE(is_two_way_liking(d, {2, 1}).has_value());

    const auto shape = classify_21(d);
    REQUIRE(std::holds_alternative<DiregularShape>(shape));
    const int k = std::get<DiregularShape>(shape).k;
    CHECK(k == 3);
    CHECK(d.order() == k * k - k + 1);

    // the converse is two-way liking as well
    CHECK_FALSE(is_two_way_liking(d.converse(), {2, 1}).has_value());
}

TEST_CASE("lambda >= 2 constructions match the degree equation") {
    const Digraph from_comp = design_to_digraph(complement_design(fano()));
    CHECK(from_comp.diregular_degree() == 4);
    CHECK(solve_degree_equation(7, {2, 2}) == 4);
    CHECK_FALSE(is_two_way_liking(from_comp, {2, 2}).has_value());
    CHECK_FALSE(counting_identity_check(from_comp, {2, 2}).has_value());
    CHECK_FALSE(is_two_way_liking(from_comp.converse(), {2, 2}).has_value());

    const Digraph from_biplane = design_to_digraph(design_from_difference_set(11, biplane_base));
    CHECK(from_biplane.diregular_degree() == 5);
    CHECK(solve_degree_equation(11, {2, 2}) == 5);
    CHECK_FALSE(counting_identity_check(from_biplane, {2, 2}).has_value());
}

TEST_CASE("construction preconditions") {
    // not symmetric: all 2-subsets of 4 varieties give b=6 > v=4
    const Design pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(design_to_digraph(pairs), std::invalid_argument);
    CHECK_THROWS_AS(design_to_digraph(Design(3, {{0, 1}})), std::invalid_argument);

    // the (7,6,5)-SBIBD has v = 7 < 10 = 2*lambda, outside the construction's range
    const Design v_below_2lambda = digraph_to_design(complete_digraph(7));
    CHECK_THROWS_AS(design_to_digraph(v_below_2lambda), std::invalid_argument);
}

TEST_CASE("digraph to design and parameter round trips") {
    const Design k4_design = digraph_to_design(complete_digraph(4));
    CHECK(params_of(k4_design) == DesignParams{4, 4, 3, 3, 2, true, true});

    const Design k7_design = digraph_to_design(complete_digraph(7));
    CHECK(params_of(k7_design) == DesignParams{7, 7, 6, 6, 5, true, true});

    for (const Design& d :
         {fano(), complement_design(fano()), design_from_difference_set(11, biplane_base),
          design_from_difference_set(13, pg23_base)}) {
        const auto original = params_of(d);
        const auto round = params_of(digraph_to_design(design_to_digraph(d)));
        CHECK(round.v == original.v);
        CHECK(round.k == original.k);
        CHECK(round.lambda == original.lambda);
    }
}

TEST_CASE("digraph to design preconditions") {
    const Digraph path(3, std::vector<Arc>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(digraph_to_design(path), std::invalid_argument);
    // 1-diregular: k(k-1) = 0 admits no positive lambda
    const Digraph cycle(3, std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}});
    CHECK_THROWS_AS(digraph_to_design(cycle), std::invalid_argument);
}

TEST_CASE("every sdr yields a valid construction") {
    const auto digraphs = design_to_digraphs_all_sdrs(fano());
    CHECK(digraphs.size() == 144);
    for (const auto& d : digraphs) {
        CHECK(d.diregular_degree() == 3);
        CHECK_FALSE(is_two_way_liking(d, {2, 1}).has_value());
    }

    CHECK_THROWS_AS(design_to_digraphs_all_sdrs(design_from_difference_set(11, biplane_base)),
                    std::invalid_argument);
}

TEST_CASE("skipping verification still produces the same digraph") {
    const ConstructionOptions no_verify{false};
    CHECK(design_to_digraph(fano(), no_verify) == design_to_digraph(fano()));
}
