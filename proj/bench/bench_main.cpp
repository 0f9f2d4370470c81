// Compares the OpenMP kernels against their serial runs and against the
// naive reference implementations on representative workloads.
//
//   ./liking-bench [--heavy] [--workers W]

#include <omp.h>

#include <chrono>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <string>

#include "liking/ref.hpp"
#include "liking/search.hpp"
#include "liking/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn) {
    const auto start = Clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report_row(const std::string& name, double baseline_ms, double parallel_ms) {
    std::cout << std::left << std::setw(44) << name << std::right << std::fixed
              << std::setprecision(2) << std::setw(12) << baseline_ms << std::setw(12)
              << parallel_ms << std::setw(10) << baseline_ms / parallel_ms << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
    bool heavy = false;
    int workers = omp_get_max_threads();
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--heavy") == 0) heavy = true;
        if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc)
            workers = std::stoi(argv[++i]);
    }

    std::cout << "workers: " << workers << "\n\n";
    std::cout << std::left << std::setw(44) << "kernel" << std::right << std::setw(12)
              << "serial ms" << std::setw(12) << "openmp ms" << std::setw(10) << "speedup\n";

    {
        // subset-space verifier on the complete digraph
        const liking::Digraph d = liking::complete_digraph(64);
        const liking::LikingParams p{5, 59};
        double serial = 0, parallel = 0;
        serial = time_ms([&] { (void)liking::is_liking(d, p, {1}); });
        parallel = time_ms([&] { (void)liking::is_liking(d, p, {workers}); });
        report_row("verify K<->64 (5,59) subset scan", serial, parallel);
    }
    {
        // bitset verifier vs the arc-set recount at a size the recount can take
        const liking::Digraph d = liking::complete_digraph(12);
        const liking::LikingParams p{3, 9};
        const double naive = time_ms([&] { (void)liking::ref::is_liking(d, p); });
        const double fast = time_ms([&] { (void)liking::is_liking(d, p, {workers}); });
        report_row("verify K<->12 (3,9) vs naive recount", naive, fast);
    }
    {
        // pruned enumeration vs filtering every digraph at order 4
        const double brute =
            time_ms([&] { (void)liking::ref::enumerate_brute_force(4, {2, 1}, false); });
        liking::SearchSpec spec;
        spec.n = 4;
        spec.params = {2, 1};
        spec.workers = workers;
        const double pruned = time_ms([&] { (void)liking::enumerate_liking(spec); });
        report_row("enumerate (2,1) n=4 vs brute force", brute, pruned);
    }

    auto search_row = [&](int n, int t, int lambda, bool two_way) {
        liking::SearchSpec spec;
        spec.n = n;
        spec.params = {t, lambda};
        spec.mode = two_way ? liking::SearchMode::TwoWayLiking : liking::SearchMode::Liking;
        spec.workers = 1;
        const double serial = time_ms([&] { (void)liking::enumerate_liking(spec); });
        spec.workers = workers;
        const double parallel = time_ms([&] { (void)liking::enumerate_liking(spec); });
        std::string name = "search n=" + std::to_string(n) + " (" + std::to_string(t) + "," +
                           std::to_string(lambda) + ")" + (two_way ? " two-way" : "");
        report_row(name, serial, parallel);
    };
    search_row(6, 2, 1, false);
    search_row(6, 2, 2, false);
    search_row(6, 3, 1, true);
    if (heavy) search_row(7, 2, 2, false);

    return 0;
}
