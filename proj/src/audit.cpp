#include <sstream>
#include <stdexcept>

#include "liking/search.hpp"

namespace liking {

namespace {

std::string describe(const Digraph& d) {
    std::ostringstream out;
    out << "n=" << d.order() << " arcs";
    for (auto [u, v] : d.arcs()) out << ' ' << u << '>' << v;
    return out.str();
}

struct TightnessEvidence {
    bool found = false;
    int n = 0;
    std::string witness;
    std::uint64_t liking_total = 0;
    std::uint64_t not_two_way = 0;
    std::uint64_t not_diregular = 0;
};

}  // namespace

std::vector<AuditVerdict> theorem_audit(int n_max, std::span<const LikingParams> params_list,
                                        const AuditOptions& opts) {
    if (n_max > 8) throw std::invalid_argument("audit guarded to n_max <= 8");
    std::vector<AuditVerdict> verdicts;

    for (const LikingParams p : params_list) {
        if (p.t < 2)
            throw std::invalid_argument("audited results assume t >= 2");
        if (p.lambda < 1) throw std::invalid_argument("lambda must be positive");

        const bool check_complete_only = p.t >= 3;
        const bool check_degree_equation = p.t == 2 && p.lambda >= 2;
        const bool check_friendship = p.t == 2 && p.lambda == 1;
        const bool check_implies_two_way = p.t >= p.lambda + 1;
        const bool check_equal_outdegrees = p.t == p.lambda + 1;
        const bool check_tightness = p.t == 2 && p.lambda == 2;

        TightnessEvidence tightness;

        for (int n = p.t; n <= n_max; ++n) {
            // one liking-mode pass per order; every check reads from it
            std::uint64_t two_way_count = 0;
            bool two_way_only_complete = true;
            std::string fail_complete_only, fail_degree_equation, fail_friendship,
                fail_implies_two_way, fail_equal_outdegrees;

            const auto expected_k = check_degree_equation
                                        ? solve_degree_equation(n, p)
                                        : std::optional<int>{};

            SearchSpec spec;
            spec.n = n;
            spec.params = p;
            spec.mode = SearchMode::Liking;
            spec.node_budget = opts.node_budget;
            spec.workers = opts.workers;

            const SearchReport report = enumerate_liking(spec, [&](const Digraph& d) {
                const bool two_way = !is_two_way_liking(d, p).has_value();
                if (two_way) {
                    ++two_way_count;
                    if (d != complete_digraph(n)) two_way_only_complete = false;
                    if (check_degree_equation && fail_degree_equation.empty()) {
                        const auto k = d.diregular_degree();
                        if (!expected_k)
                            fail_degree_equation =
                                "two-way digraph found but the degree equation has no root: " +
                                describe(d);
                        else if (!k || *k != *expected_k)
                            fail_degree_equation = "not " + std::to_string(*expected_k) +
                                                   "-diregular: " + describe(d);
                    }
                }
                if (check_friendship && fail_friendship.empty()) {
                    try {
                        const auto shape = classify_21(d);
                        if (std::holds_alternative<Violation>(shape))
                            fail_friendship = "classified as non-liking: " + describe(d);
                    } catch (const std::logic_error& e) {
                        fail_friendship = std::string(e.what()) + ": " + describe(d);
                    }
                }
                if (check_implies_two_way && !two_way && fail_implies_two_way.empty())
                    fail_implies_two_way = "liking but not two-way: " + describe(d);
                if (check_equal_outdegrees && fail_equal_outdegrees.empty()) {
                    for (int u = 0; u < n && fail_equal_outdegrees.empty(); ++u)
                        for (int v = u + 1; v < n; ++v) {
                            if (d.has_arc(u, v) && d.has_arc(v, u)) continue;
                            if (d.out_degree(u) != d.out_degree(v)) {
                                fail_equal_outdegrees =
                                    "missing arc between " + std::to_string(u) + " and " +
                                    std::to_string(v) + " with unequal out-degrees: " +
                                    describe(d);
                                break;
                            }
                        }
                }
                if (check_tightness) {
                    ++tightness.liking_total;
                    if (!two_way) ++tightness.not_two_way;
                    if (!d.diregular_degree()) ++tightness.not_diregular;
                    if (!two_way && !tightness.found) {
                        tightness.found = true;
                        tightness.n = n;
                        tightness.witness = describe(d);
                    }
                }
                return true;
            });

            if (report.budget_exhausted) {
                verdicts.push_back({"enumeration", p, n, false,
                                    "node budget exhausted; checks at this order are "
                                    "inconclusive"});
                continue;
            }

            if (check_complete_only) {
                const bool expect_one = n == p.t + p.lambda;
                bool pass;
                std::string detail;
                if (expect_one) {
                    pass = two_way_count == 1 && two_way_only_complete;
                    detail = pass ? "exactly the complete digraph"
                                  : "expected exactly the complete digraph, found " +
                                        std::to_string(two_way_count);
                } else {
                    pass = two_way_count == 0;
                    detail = pass ? "no two-way digraph, as required"
                                  : std::to_string(two_way_count) +
                                        " two-way digraph(s) at an excluded order";
                }
                verdicts.push_back({"only_complete_digraph", p, n, pass, detail});
            }
            if (check_degree_equation)
                verdicts.push_back(
                    {"diregular_degree_equation", p, n, fail_degree_equation.empty(),
                     fail_degree_equation.empty()
                         ? (expected_k ? std::to_string(two_way_count) + " two-way result(s), all " +
                                             std::to_string(*expected_k) + "-diregular"
                                       : "no degree-equation root and no two-way result")
                         : fail_degree_equation});
            if (check_friendship)
                verdicts.push_back({"fancy_wheel_or_diregular", p, n, fail_friendship.empty(),
                                    fail_friendship.empty()
                                        ? "all results fancy wheels or k-diregular of order "
                                          "k^2-k+1"
                                        : fail_friendship});
            if (check_implies_two_way)
                verdicts.push_back({"liking_implies_two_way", p, n,
                                    fail_implies_two_way.empty(),
                                    fail_implies_two_way.empty()
                                        ? "every liking digraph passed the two-way check"
                                        : fail_implies_two_way});
            if (check_equal_outdegrees)
                verdicts.push_back({"missing_arc_equal_outdegrees", p, n,
                                    fail_equal_outdegrees.empty(),
                                    fail_equal_outdegrees.empty()
                                        ? "equal out-degrees across all missing arcs"
                                        : fail_equal_outdegrees});
        }

        if (check_tightness) {
            std::ostringstream detail;
            if (tightness.found)
                detail << "liking-but-not-two-way digraph at n=" << tightness.n << " ("
                       << tightness.not_two_way << " such, " << tightness.not_diregular
                       << " non-diregular, of " << tightness.liking_total
                       << " liking digraphs up to n_max): " << tightness.witness;
            else
                detail << "no liking digraph failing the two-way check up to n_max="
                       << n_max;
            verdicts.push_back(
                {"two_way_gap_witness", p, 0, tightness.found, detail.str()});
        }
    }
    return verdicts;
}

}  // namespace liking
