#include "liking/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <sstream>

#include "liking/construction.hpp"
#include "liking/io.hpp"
#include "liking/matching.hpp"
#include "liking/search.hpp"
#include "liking/verify.hpp"

namespace liking::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Outcome {
    int code = kExitOk;
    json report;
    std::string text;
};

struct Common {
    std::string format = "text";
    std::vector<io::ParseWarning> warnings;
};

void add_format_flag(CLI::App* cmd, Common& common) {
    cmd->add_option("--format", common.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

json violation_json(const Violation& v) {
    return {{"subset", v.subset},
            {"direction", v.direction == Direction::Out ? "out" : "in"},
            {"observed", v.observed},
            {"expected", v.expected}};
}

std::string join_ints(const std::vector<int>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
    return out.str();
}

std::string violation_text(const Violation& v) {
    std::ostringstream out;
    out << "subset: " << join_ints(v.subset) << '\n'
        << "direction: " << (v.direction == Direction::Out ? "out" : "in") << '\n'
        << "observed: " << v.observed << '\n'
        << "expected: " << v.expected << '\n';
    return out.str();
}

Digraph load_digraph(const std::string& path, Common& common) {
    return io::parse_digraph(io::read_file(path), &common.warnings);
}

Design load_design(const std::string& path, Common& common) {
    return io::parse_design(io::read_file(path), &common.warnings);
}

// "v:d1,d2,..." for --difference-set, "t:lambda" for --params
std::pair<int, std::vector<int>> parse_colon_list(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("expected '<head>:<comma list>', got '" + text + "'");
    std::pair<int, std::vector<int>> result;
    try {
        result.first = std::stoi(text.substr(0, colon));
        std::string rest = text.substr(colon + 1);
        std::istringstream stream(rest);
        for (std::string item; std::getline(stream, item, ',');)
            result.second.push_back(std::stoi(item));
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected integers in '" + text + "'");
    }
    return result;
}

// --- check -----------------------------------------------------------------

struct CheckArgs {
    std::string digraph_path;
    int t = 0, lambda = 0;
    bool two_way = false, all = false;
    bool bounds = false, eulerian = false, counting = false, classify = false;
    int workers = 0;
};

Outcome run_check(const CheckArgs& a, Common& common) {
    Outcome outcome;
    const Digraph d = load_digraph(a.digraph_path, common);
    std::ostringstream text;
    json& report = outcome.report;
    report["command"] = "check";
    report["order"] = d.order();

    auto finish_violation = [&](const Violation& v) {
        report["verdict"] = "violation";
        report["witness"] = violation_json(v);
        text << "verdict: violation\n" << violation_text(v);
        outcome.code = kExitFail;
    };

    if (a.classify) {
        report["check"] = "classify-21";
        text << "check: classify-21\n";
        const auto shape = classify_21(d);
        if (const auto* wheel = std::get_if<FancyWheelShape>(&shape)) {
            report["verdict"] = "fancy_wheel";
            report["hub"] = wheel->hub;
            report["cycle_lengths"] = wheel->cycle_lengths;
            text << "verdict: fancy wheel\nhub: " << wheel->hub
                 << "\ncycle lengths: " << join_ints(wheel->cycle_lengths) << '\n';
        } else if (const auto* reg = std::get_if<DiregularShape>(&shape)) {
            report["verdict"] = "diregular";
            report["k"] = reg->k;
            text << "verdict: diregular\nk: " << reg->k << '\n';
        } else {
            finish_violation(std::get<Violation>(shape));
        }
    } else if (a.eulerian) {
        report["check"] = "eulerian";
        text << "check: eulerian\n";
        if (const auto v = eulerian_check(d)) {
            report["verdict"] = "violation";
            report["witness"] = {{"vertex", *v},
                                 {"out_degree", d.out_degree(*v)},
                                 {"in_degree", d.in_degree(*v)}};
            text << "verdict: violation\nvertex: " << *v
                 << "\nout-degree: " << d.out_degree(*v)
                 << "\nin-degree: " << d.in_degree(*v) << '\n';
            outcome.code = kExitFail;
        } else {
            report["verdict"] = "ok";
            text << "verdict: ok\n";
        }
    } else {
        if (a.t < 1 || a.lambda < 1)
            throw CLI::ValidationError("this check needs --t and --lambda (both >= 1)");
        const LikingParams p{a.t, a.lambda};
        report["t"] = a.t;
        report["lambda"] = a.lambda;
        if (a.bounds) {
            report["check"] = "bounds";
            text << "check: degree bounds\n";
            if (const auto failure = degree_bounds_check(d, p)) {
                report["verdict"] = "violation";
                report["witness"] = {{"condition", failure->condition},
                                     {"subset", failure->subset},
                                     {"observed", failure->observed},
                                     {"required", failure->required}};
                text << "verdict: violation\ncondition: " << failure->condition
                     << "\nsubset: " << join_ints(failure->subset)
                     << "\nobserved: " << failure->observed
                     << "\nrequired: " << failure->required << '\n';
                outcome.code = kExitFail;
            } else {
                report["verdict"] = "ok";
                text << "verdict: ok\n";
            }
        } else if (a.counting) {
            report["check"] = "counting-identity";
            text << "check: counting identity\n";
            if (const auto v = counting_identity_check(d, p)) {
                report["verdict"] = "violation";
                report["witness"] = {{"vertex", *v}};
                text << "verdict: violation\nvertex: " << *v << '\n';
                outcome.code = kExitFail;
            } else {
                report["verdict"] = "ok";
                text << "verdict: ok\n";
            }
        } else {
            report["check"] = a.two_way ? "two-way-liking" : "liking";
            text << "check: " << (a.two_way ? "two-way " : "") << "(" << a.t << ","
                 << a.lambda << ")-liking\n";
            const VerifyOptions opts{a.workers};
            if (a.all) {
                const auto violations = liking_violations(d, p, a.two_way, opts);
                report["violations"] = json::array();
                for (const auto& v : violations) report["violations"].push_back(violation_json(v));
                if (violations.empty()) {
                    report["verdict"] = "ok";
                    text << "verdict: ok\n";
                } else {
                    report["verdict"] = "violation";
                    report["witness"] = violation_json(violations.front());
                    text << "verdict: violation (" << violations.size() << " total)\n"
                         << violation_text(violations.front());
                    outcome.code = kExitFail;
                }
            } else {
                const auto v = a.two_way ? is_two_way_liking(d, p, opts) : is_liking(d, p, opts);
                if (v) {
                    finish_violation(*v);
                } else {
                    report["verdict"] = "ok";
                    text << "verdict: ok\n";
                }
            }
        }
    }
    outcome.text = text.str();
    return outcome;
}

// --- design ----------------------------------------------------------------

struct DesignArgs {
    std::string design_path;
    std::string difference_set;
    bool complement = false;
    bool verify = false;
    std::string output;
};

Outcome run_design(const DesignArgs& a, Common& common) {
    Outcome outcome;
    std::optional<Design> design;
    if (!a.difference_set.empty()) {
        const auto [v, base] = parse_colon_list(a.difference_set);
        design = design_from_difference_set(v, base);
    } else if (!a.design_path.empty()) {
        design = load_design(a.design_path, common);
    } else {
        throw CLI::ValidationError("need --difference-set or --design");
    }
    if (a.complement) design = complement_design(*design);

    std::ostringstream text;
    json& report = outcome.report;
    report["command"] = "design";
    report["varieties"] = design->varieties();
    report["blocks"] = design->block_count();

    if (a.verify) {
        const auto check = verify_design(*design);
        if (const auto* params = std::get_if<DesignParams>(&check)) {
            report["verdict"] = "ok";
            report["params"] = {{"b", params->b},         {"v", params->v},
                                {"r", params->r},         {"k", params->k},
                                {"lambda", params->lambda}, {"incomplete", params->incomplete},
                                {"symmetric", params->symmetric}};
            text << "verdict: ok\nparams: b=" << params->b << " v=" << params->v
                 << " r=" << params->r << " k=" << params->k << " lambda=" << params->lambda
                 << '\n'
                 << "incomplete: " << (params->incomplete ? "yes" : "no") << '\n'
                 << "symmetric: " << (params->symmetric ? "yes" : "no") << '\n';
            if (params->symmetric) {
                const auto bad = block_intersection_check(*design, params->lambda);
                report["block_intersections"] = bad ? "violation" : "ok";
                if (bad) {
                    report["witness"] = {{"blocks", {bad->first, bad->second}}};
                    text << "block intersections: violation at blocks " << bad->first << ","
                         << bad->second << '\n';
                    outcome.code = kExitFail;
                } else {
                    text << "block intersections: ok\n";
                }
            }
        } else {
            const auto& violation = std::get<DesignViolation>(check);
            report["verdict"] = "violation";
            report["witness"] = {{"condition", violation.condition},
                                 {"witness", violation.witness},
                                 {"observed", violation.observed},
                                 {"expected", violation.expected}};
            text << "verdict: violation\ncondition: " << violation.condition
                 << "\nwitness: " << join_ints(violation.witness)
                 << "\nobserved: " << violation.observed
                 << "\nexpected: " << violation.expected << '\n';
            outcome.code = kExitFail;
        }
    } else {
        report["verdict"] = "ok";
    }

    const std::string serialized = io::serialize_design(*design);
    report["design"] = serialized;
    if (!a.output.empty()) {
        io::write_file(a.output, serialized);
        text << "wrote " << a.output << '\n';
    } else if (!a.verify) {
        text << serialized;
    }
    outcome.text = text.str();
    return outcome;
}

// --- construct / convert ----------------------------------------------------

struct ConstructArgs {
    std::string design_path;
    bool all_sdrs = false;
    bool no_verify = false;
    std::string output;
};

Outcome run_construct(const ConstructArgs& a, Common& common) {
    Outcome outcome;
    const Design design = load_design(a.design_path, common);
    const ConstructionOptions opts{!a.no_verify};

    std::ostringstream text;
    json& report = outcome.report;
    report["command"] = "construct";
    report["verdict"] = "ok";

    std::vector<Digraph> digraphs;
    if (a.all_sdrs)
        digraphs = design_to_digraphs_all_sdrs(design, opts);
    else
        digraphs.push_back(design_to_digraph(design, opts));

    report["count"] = digraphs.size();
    report["digraphs"] = json::array();
    std::ostringstream serialized;
    for (const auto& d : digraphs) {
        const std::string s = io::serialize_digraph(d);
        report["digraphs"].push_back(s);
        serialized << s;
    }
    if (const auto k = digraphs.front().diregular_degree()) report["k"] = *k;
    text << "constructed " << digraphs.size() << " digraph(s) of order "
         << digraphs.front().order() << '\n';

    if (!a.output.empty()) {
        io::write_file(a.output, serialized.str());
        text << "wrote " << a.output << '\n';
    } else {
        text << serialized.str();
    }
    outcome.text = text.str();
    return outcome;
}

struct ConvertArgs {
    std::string digraph_path;
    bool no_verify = false;
    std::string output;
};

Outcome run_convert(const ConvertArgs& a, Common& common) {
    Outcome outcome;
    const Digraph d = load_digraph(a.digraph_path, common);
    const Design design = digraph_to_design(d, ConstructionOptions{!a.no_verify});

    std::ostringstream text;
    json& report = outcome.report;
    report["command"] = "convert";
    report["verdict"] = "ok";
    const auto check = verify_design(design);
    if (const auto* params = std::get_if<DesignParams>(&check)) {
        report["params"] = {{"v", params->v}, {"k", params->k}, {"lambda", params->lambda}};
        text << "params: v=" << params->v << " k=" << params->k
             << " lambda=" << params->lambda << '\n';
    }
    const std::string serialized = io::serialize_design(design);
    report["design"] = serialized;
    if (!a.output.empty()) {
        io::write_file(a.output, serialized);
        text << "wrote " << a.output << '\n';
    } else {
        text << serialized;
    }
    outcome.text = text.str();
    return outcome;
}

// --- sdr ---------------------------------------------------------------------

struct SdrArgs {
    std::string family_path;
    std::string design_path;
    bool block_complements = false;
    bool exhaustive = false;
};

Outcome run_sdr(const SdrArgs& a, Common& common) {
    Outcome outcome;
    std::optional<SetFamily> family;
    if (!a.family_path.empty()) {
        family = io::parse_family(io::read_file(a.family_path));
    } else if (!a.design_path.empty() && a.block_complements) {
        family = block_complement_family(load_design(a.design_path, common));
    } else {
        throw CLI::ValidationError("need --family, or --design with --block-complements");
    }

    std::ostringstream text;
    json& report = outcome.report;
    report["command"] = "sdr";
    report["sets"] = family->size();
    report["ground"] = family->ground();

    const SdrOutcome result = sdr(*family);
    if (const auto* reps = std::get_if<std::vector<int>>(&result)) {
        report["verdict"] = "sdr";
        report["representatives"] = *reps;
        text << "verdict: sdr\nrepresentatives: " << join_ints(*reps) << '\n';
    } else {
        const auto& violator = std::get<HallViolator>(result);
        report["verdict"] = "hall_violator";
        report["violator"] = violator.indices;
        text << "verdict: hall violator\nindices: " << join_ints(violator.indices) << '\n';
        outcome.code = kExitFail;
    }

    if (a.exhaustive) {
        const auto oracle = exhaustive_hall_violator(*family);
        const bool agree = oracle.has_value() == (outcome.code == kExitFail);
        report["exhaustive_check"] = agree ? "agrees" : "disagrees";
        text << "exhaustive check: " << (agree ? "agrees" : "disagrees") << '\n';
        if (!agree) throw std::logic_error("matching and exhaustive Hall check disagree");
    }
    outcome.text = text.str();
    return outcome;
}

// --- search ------------------------------------------------------------------

struct SearchArgs {
    SearchSpec spec;
    bool two_way = false;
    std::string output;
};

Outcome run_search(SearchArgs& a, Common&) {
    Outcome outcome;
    a.spec.mode = a.two_way ? SearchMode::TwoWayLiking : SearchMode::Liking;
    const SearchReport result = enumerate_liking(a.spec);

    std::ostringstream text;
    json& report = outcome.report;
    report["command"] = "search";
    report["n"] = a.spec.n;
    report["t"] = a.spec.params.t;
    report["lambda"] = a.spec.params.lambda;
    report["mode"] = a.two_way ? "two-way-liking" : "liking";
    report["dedupe"] = a.spec.dedupe;
    report["found"] = result.found.size();
    report["nodes_explored"] = result.nodes_explored;
    report["budget_exhausted"] = result.budget_exhausted;
    report["limit_reached"] = result.limit_reached;
    report["verdict"] = result.budget_exhausted ? "budget_exhausted" : "complete";

    text << "search: n=" << a.spec.n << " " << (a.two_way ? "two-way " : "") << "("
         << a.spec.params.t << "," << a.spec.params.lambda << ")-liking"
         << (a.spec.dedupe ? ", dedupe" : "") << '\n'
         << "found: " << result.found.size() << '\n'
         << "nodes explored: " << result.nodes_explored << '\n';
    if (result.budget_exhausted) text << "node budget exhausted: results incomplete\n";
    if (result.limit_reached) text << "stopped at result limit\n";

    report["digraphs"] = json::array();
    std::ostringstream serialized;
    for (const auto& d : result.found) {
        const std::string s = io::serialize_digraph(d);
        report["digraphs"].push_back(s);
        serialized << s;
    }
    if (!a.output.empty()) {
        io::write_file(a.output, serialized.str());
        text << "wrote " << a.output << '\n';
    } else {
        text << serialized.str();
    }
    if (result.budget_exhausted) outcome.code = kExitFail;
    outcome.text = text.str();
    return outcome;
}

// --- audit ---------------------------------------------------------------------

struct AuditArgs {
    int n_max = 5;
    std::vector<std::string> params;
    AuditOptions opts;
};

Outcome run_audit(const AuditArgs& a, Common&) {
    Outcome outcome;
    std::vector<LikingParams> params_list;
    for (const auto& text : a.params) {
        const auto [t, rest] = parse_colon_list(text);
        if (rest.size() != 1)
            throw CLI::ValidationError("expected --params t:lambda, got '" + text + "'");
        params_list.push_back(LikingParams{t, rest.front()});
    }
    if (params_list.empty()) throw CLI::ValidationError("need at least one --params t:lambda");

    const auto verdicts = theorem_audit(a.n_max, params_list, a.opts);

    std::ostringstream text;
    json& report = outcome.report;
    report["command"] = "audit";
    report["n_max"] = a.n_max;
    report["verdicts"] = json::array();
    std::size_t failed = 0;
    for (const auto& v : verdicts) {
        report["verdicts"].push_back({{"check", v.check},
                                      {"t", v.params.t},
                                      {"lambda", v.params.lambda},
                                      {"n", v.n},
                                      {"pass", v.pass},
                                      {"detail", v.detail}});
        text << (v.pass ? "PASS" : "FAIL") << ' ' << v.check << " t=" << v.params.t
             << " lambda=" << v.params.lambda;
        if (v.n > 0) text << " n=" << v.n;
        text << " -- " << v.detail << '\n';
        if (!v.pass) ++failed;
    }
    report["failed"] = failed;
    report["verdict"] = failed == 0 ? "ok" : "violation";
    text << "verdicts: " << verdicts.size() - failed << " passed, " << failed << " failed\n";
    if (failed > 0) outcome.code = kExitFail;
    outcome.text = text.str();
    return outcome;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"liking digraph and block design toolkit"};
    app.require_subcommand(1);

    Common common;

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Verify digraph properties");
    check->add_option("--digraph", check_args.digraph_path, "Digraph file")->required();
    check->add_option("--t", check_args.t, "Subset size t");
    check->add_option("--lambda", check_args.lambda, "Required common neighbor count");
    check->add_flag("--two-way", check_args.two_way, "Check in-neighbors as well");
    check->add_flag("--all", check_args.all, "Collect every violation");
    auto* bounds = check->add_flag("--bounds", check_args.bounds, "Check degree bounds");
    auto* eulerian = check->add_flag("--eulerian", check_args.eulerian,
                                     "Check out-degree = in-degree per vertex");
    auto* counting = check->add_flag("--counting-identity", check_args.counting,
                                     "Check the double-counting identity");
    auto* classify =
        check->add_flag("--classify-21", check_args.classify, "Classify a (2,1)-liking digraph");
    bounds->excludes(eulerian)->excludes(counting)->excludes(classify);
    eulerian->excludes(counting)->excludes(classify);
    counting->excludes(classify);
    check->add_option("--workers", check_args.workers, "Verifier worker threads (0 = all)")
        ->envname("LIKING_WORKERS");
    add_format_flag(check, common);

    DesignArgs design_args;
    auto* design = app.add_subcommand("design", "Build or verify block designs");
    auto* design_file = design->add_option("--design", design_args.design_path, "Design file");
    design->add_option("--difference-set", design_args.difference_set,
                       "Cyclic development v:d1,d2,...")
        ->excludes(design_file);
    design->add_flag("--complement", design_args.complement, "Complement every block");
    design->add_flag("--verify", design_args.verify, "Verify the balance conditions");
    design->add_option("-o,--output", design_args.output, "Write the design here");
    add_format_flag(design, common);

    ConstructArgs construct_args;
    auto* construct = app.add_subcommand("construct", "Build a liking digraph from an SBIBD");
    construct->add_option("--design", construct_args.design_path, "Design file")->required();
    construct->add_flag("--all-sdrs", construct_args.all_sdrs,
                        "Emit one digraph per distinct-representative system");
    construct->add_flag("--no-verify", construct_args.no_verify,
                        "Skip post-construction verification");
    construct->add_option("-o,--output", construct_args.output, "Write the digraph(s) here");
    add_format_flag(construct, common);

    ConvertArgs convert_args;
    auto* convert = app.add_subcommand("convert", "Turn a diregular liking digraph into an SBIBD");
    convert->add_option("--digraph", convert_args.digraph_path, "Digraph file")->required();
    convert->add_flag("--no-verify", convert_args.no_verify,
                      "Skip verification of the resulting design");
    convert->add_option("-o,--output", convert_args.output, "Write the design here");
    add_format_flag(convert, common);

    SdrArgs sdr_args;
    auto* sdr_cmd = app.add_subcommand("sdr", "Distinct representatives / Hall check");
    auto* sdr_family = sdr_cmd->add_option("--family", sdr_args.family_path, "Set family file");
    sdr_cmd->add_option("--design", sdr_args.design_path, "Design file")->excludes(sdr_family);
    sdr_cmd->add_flag("--block-complements", sdr_args.block_complements,
                      "Use the design's block complements as the family");
    sdr_cmd->add_flag("--exhaustive-check", sdr_args.exhaustive,
                      "Cross-check against the exhaustive Hall oracle");
    add_format_flag(sdr_cmd, common);

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "Enumerate liking digraphs of a given order");
    search->add_option("--n", search_args.spec.n, "Digraph order")->required();
    search->add_option("--t", search_args.spec.params.t, "Subset size t")->required();
    search->add_option("--lambda", search_args.spec.params.lambda, "Common neighbor count")
        ->required();
    search->add_flag("--two-way", search_args.two_way, "Require the two-way property");
    search->add_flag("--dedupe", search_args.spec.dedupe, "Report canonical forms only");
    search->add_option("--limit", search_args.spec.limit, "Stop after this many results");
    search->add_option("--budget", search_args.spec.node_budget,
                       "Node visit budget (0 = unlimited)")
        ->envname("LIKING_BUDGET");
    search->add_option("--workers", search_args.spec.workers, "Worker threads (0 = all)")
        ->envname("LIKING_WORKERS");
    search->add_option("--checkpoint", search_args.spec.checkpoint_path,
                       "Progress file for resumable runs");
    search->add_flag("--resume", search_args.spec.resume,
                     "Skip prefixes already completed per the checkpoint");
    search->add_option("-o,--output", search_args.output, "Write found digraphs here");
    add_format_flag(search, common);

    AuditArgs audit_args;
    auto* audit = app.add_subcommand("audit", "Audit the characterization results by enumeration");
    audit->add_option("--n-max", audit_args.n_max, "Largest order to enumerate")
        ->capture_default_str();
    audit->add_option("--params", audit_args.params, "Parameter pair t:lambda (repeatable)")
        ->required();
    audit->add_option("--budget", audit_args.opts.node_budget,
                      "Node visit budget per enumeration (0 = unlimited)")
        ->envname("LIKING_BUDGET");
    audit->add_option("--workers", audit_args.opts.workers, "Worker threads (0 = all)")
        ->envname("LIKING_WORKERS");
    add_format_flag(audit, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        Outcome outcome;
        if (*check)
            outcome = run_check(check_args, common);
        else if (*design)
            outcome = run_design(design_args, common);
        else if (*construct)
            outcome = run_construct(construct_args, common);
        else if (*convert)
            outcome = run_convert(convert_args, common);
        else if (*sdr_cmd)
            outcome = run_sdr(sdr_args, common);
        else if (*search)
            outcome = run_search(search_args, common);
        else if (*audit)
            outcome = run_audit(audit_args, common);

        outcome.report["exit_code"] = outcome.code;
        if (!common.warnings.empty()) {
            outcome.report["warnings"] = json::array();
            for (const auto& w : common.warnings) {
                outcome.report["warnings"].push_back(
                    {{"line", w.line}, {"message", w.message}});
                err << "warning: line " << w.line << ": " << w.message << '\n';
            }
        }
        if (common.format == "json")
            out << outcome.report.dump(2) << '\n';
        else
            out << outcome.text;
        return outcome.code;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::logic_error& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace liking::cli
