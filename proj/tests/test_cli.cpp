#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>

#include <cstdio>
#include <sstream>

#include "liking/cli.hpp"
#include "liking/construction.hpp"
#include "liking/design.hpp"
#include "liking/io.hpp"

using json = nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = liking::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// fixture files shared by the cases below
struct Fixtures {
    Fixtures() {
        using namespace liking;
        const Design fano = design_from_difference_set(7, std::vector<int>{1, 2, 4});
        io::write_file("fano.des", io::serialize_design(fano));
        io::write_file("fano.dg", io::serialize_digraph(design_to_digraph(fano)));
        io::write_file("c3.dg", "digraph 3\n0 1\n1 2\n2 0\n");
    }
    ~Fixtures() {
        std::remove("fano.des");
        std::remove("fano.dg");
        std::remove("c3.dg");
    }
};

const Fixtures fixtures;

}  // namespace

TEST_CASE("check passes on the constructed fano digraph") {
    const auto r = run_cli({"check", "--digraph", "fano.dg", "--t", "2", "--lambda", "1",
                            "--two-way"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict: ok") != std::string::npos);
}

TEST_CASE("check reports the violating pair on the directed triangle") {
    const auto r = run_cli({"check", "--digraph", "c3.dg", "--t", "2", "--lambda", "1"});
    CHECK(r.code == 1);
    CHECK(r.out.find("subset: 0 1") != std::string::npos);

    const auto j = run_cli({"check", "--digraph", "c3.dg", "--t", "2", "--lambda", "1",
                            "--format", "json"});
    CHECK(j.code == 1);
    const json report = json::parse(j.out);
    CHECK(report["verdict"] == "violation");
    CHECK(report["exit_code"] == 1);
    CHECK(report["witness"]["subset"] == json::array({0, 1}));
    CHECK(report["witness"]["observed"] == 0);
}

TEST_CASE("text and json verdicts agree") {
    for (const std::string flag : {"--eulerian", "--classify-21"}) {
        const auto text = run_cli({"check", "--digraph", "fano.dg", flag});
        const auto as_json =
            run_cli({"check", "--digraph", "fano.dg", flag, "--format", "json"});
        CHECK(text.code == as_json.code);
        const json report = json::parse(as_json.out);
        CHECK(report["exit_code"] == text.code);
    }
}

TEST_CASE("classify-21 identifies the fano digraph as diregular") {
    const auto r =
        run_cli({"check", "--digraph", "fano.dg", "--classify-21", "--format", "json"});
    CHECK(r.code == 0);
    const json report = json::parse(r.out);
    CHECK(report["verdict"] == "diregular");
    CHECK(report["k"] == 3);
}

TEST_CASE("search finds the complete digraph for two-way (3,1) at order 4") {
    const auto r = run_cli({"search", "--n", "4", "--t", "3", "--lambda", "1", "--two-way",
                            "--dedupe", "--format", "json"});
    CHECK(r.code == 0);
    const json report = json::parse(r.out);
    CHECK(report["found"] == 1);
    CHECK(report["verdict"] == "complete");
    REQUIRE(report["digraphs"].size() == 1);
    const auto d = liking::io::parse_digraph(report["digraphs"][0].get<std::string>());
    CHECK(d == liking::complete_digraph(4));
}

TEST_CASE("design subcommand builds, complements and verifies") {
    const auto r = run_cli({"design", "--difference-set", "7:1,2,4", "--verify", "--format",
                            "json"});
    CHECK(r.code == 0);
    const json report = json::parse(r.out);
    CHECK(report["params"]["k"] == 3);
    CHECK(report["params"]["lambda"] == 1);
    CHECK(report["block_intersections"] == "ok");

    const auto comp = run_cli({"design", "--difference-set", "7:1,2,4", "--complement",
                               "--verify", "--format", "json"});
    CHECK(comp.code == 0);
    CHECK(json::parse(comp.out)["params"]["k"] == 4);
}

TEST_CASE("construct and convert round trip through files") {
    const auto c = run_cli({"construct", "--design", "fano.des", "-o", "fano_cli.dg"});
    CHECK(c.code == 0);
    const auto back = run_cli({"convert", "--digraph", "fano_cli.dg", "--format", "json"});
    CHECK(back.code == 0);
    const json report = json::parse(back.out);
    CHECK(report["params"]["v"] == 7);
    CHECK(report["params"]["k"] == 3);
    CHECK(report["params"]["lambda"] == 1);
    std::remove("fano_cli.dg");
}

TEST_CASE("construct enumerates all representative systems on request") {
    const auto r =
        run_cli({"construct", "--design", "fano.des", "--all-sdrs", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["count"] == 144);
}

TEST_CASE("sdr subcommand reports representatives and violators") {
    const auto ok = run_cli({"sdr", "--design", "fano.des", "--block-complements",
                             "--exhaustive-check", "--format", "json"});
    CHECK(ok.code == 0);
    CHECK(json::parse(ok.out)["verdict"] == "sdr");

    liking::io::write_file("pigeon.fam", "family 4 3\n0 1\n1\n0\n");
    const auto bad = run_cli({"sdr", "--family", "pigeon.fam", "--format", "json"});
    CHECK(bad.code == 1);
    const json report = json::parse(bad.out);
    CHECK(report["verdict"] == "hall_violator");
    CHECK(report["violator"] == json::array({0, 1, 2}));
    std::remove("pigeon.fam");
}

TEST_CASE("audit subcommand prints one verdict per line") {
    const auto r = run_cli({"audit", "--n-max", "4", "--params", "3:1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS only_complete_digraph") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"check"}).code == 2);                       // missing --digraph
    CHECK(run_cli({"check", "--digraph", "fano.dg"}).code == 2);  // missing t/lambda
    CHECK(run_cli({"check", "--digraph", "no_such_file.dg", "--t", "2", "--lambda", "1"})
              .code == 2);
    CHECK(run_cli({"search", "--n", "9", "--t", "2", "--lambda", "1"}).code == 2);
    CHECK(run_cli({"sdr"}).code == 2);
}

TEST_CASE("parse warnings surface on stderr and in the json report") {
    liking::io::write_file("dup.dg", "digraph 2\n0 1\n0 1\n1 0\n");
    const auto r = run_cli({"check", "--digraph", "dup.dg", "--t", "1", "--lambda", "1",
                            "--format", "json"});
    CHECK(r.err.find("duplicate arc") != std::string::npos);
    const json report = json::parse(r.out);
    REQUIRE(report.contains("warnings"));
    CHECK(report["warnings"].size() == 1);
    std::remove("dup.dg");
}

TEST_CASE("help is not an error") {
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"search", "--help"}).code == 0);
}
