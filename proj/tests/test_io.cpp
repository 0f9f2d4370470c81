#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "liking/io.hpp"

using namespace liking;

TEST_CASE("digraph parsing") {
    const Digraph digon = io::parse_digraph("digraph 2\n0 1\n1 0\n");
    CHECK(digon == complete_digraph(2));

    const Digraph with_comment = io::parse_digraph("# a digon\ndigraph 2\n0 1\n\n1 0\n");
    CHECK(with_comment == digon);

    std::vector<io::ParseWarning> warnings;
    const Digraph dup = io::parse_digraph("digraph 2\n0 1\n0 1\n", &warnings);
    CHECK(dup.arc_count() == 1);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings.front().line == 3);
}

TEST_CASE("digraph parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(io::parse_digraph("digraph 3\n0 0\n"), "line 2: loop arc not allowed",
                         io::ParseError);
    CHECK_THROWS_AS(io::parse_digraph("digraph 2\n0 7\n"), io::ParseError);
    CHECK_THROWS_AS(io::parse_digraph("digraph 2\n0\n"), io::ParseError);
    CHECK_THROWS_AS(io::parse_digraph("graph 2\n"), io::ParseError);
    CHECK_THROWS_AS(io::parse_digraph(""), io::ParseError);
    CHECK_THROWS_AS(io::parse_digraph("digraph 0\n"), io::ParseError);
}

TEST_CASE("digraph round trip normalizes") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        std::vector<Arc> arcs;
        std::bernoulli_distribution keep(0.3);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && keep(rng)) arcs.emplace_back(u, v);
        const Digraph d(n, arcs);
        const std::string text = io::serialize_digraph(d);
        CHECK(io::parse_digraph(text) == d);
        CHECK(io::serialize_digraph(io::parse_digraph(text)) == text);
    }
}

TEST_CASE("design parsing") {
    const std::string fano_text =
        "design 7 7\n0 1 3\n1 2 4\n2 3 5\n3 4 6\n4 5 0\n5 6 1\n6 0 2\n";
    const Design fano = io::parse_design(fano_text);
    const auto check = verify_design(fano);
    REQUIRE(std::holds_alternative<DesignParams>(check));
    CHECK(std::get<DesignParams>(check) == DesignParams{7, 7, 3, 3, 1, true, true});

    const Design trivial = io::parse_design("design 3 3\n0 1\n1 2\n0 2\n");
    CHECK(trivial.block_count() == 3);

    CHECK_THROWS_WITH_AS(io::parse_design("design 3 1\n0 5\n"),
                         "line 2: variety 5 out of range 0..2", io::ParseError);
    CHECK_THROWS_AS(io::parse_design("design 3 2\n0 1\n"), io::ParseError);
    CHECK_THROWS_AS(io::parse_design("design 3 1\n-\n"), io::ParseError);
}

TEST_CASE("design round trip") {
    const Design d = io::parse_design("design 5 2\n4 0 2\n1 3 2\n");
    const std::string text = io::serialize_design(d);
    CHECK(text == "design 5 2\n0 2 4\n1 2 3\n");
    CHECK(io::parse_design(text) == d);
}

TEST_CASE("family parsing") {
    const SetFamily f = io::parse_family("family 4 3\n0 1\n-\n3\n");
    CHECK(f.size() == 3);
    CHECK(f.set(0) == std::vector<int>{0, 1});
    CHECK(f.set(1).empty());
    CHECK(f.set(2) == std::vector<int>{3});

    const std::string text = io::serialize_family(f);
    CHECK(text == "family 4 3\n0 1\n-\n3\n");

    CHECK_THROWS_AS(io::parse_family("family 2 1\n5\n"), io::ParseError);
    CHECK_THROWS_AS(io::parse_family("family 2 2\n0\n"), io::ParseError);
}
