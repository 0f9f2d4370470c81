#include "liking/search.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "liking/bitops.hpp"

namespace liking {

namespace {

constexpr int kMaxSearchOrder = 8;
constexpr std::uint64_t kNodeFlushBatch = 8192;

bool row_tuple_less(const Digraph& a, const Digraph& b) {
    for (int v = 0; v < a.order(); ++v)
        if (a.out_mask(v) != b.out_mask(v)) return a.out_mask(v) < b.out_mask(v);
    return false;
}

// Precomputed structures shared read-only by all workers.
struct SearchPlan {
    int n = 0, t = 0, lambda = 0;
    bool two_way = false;
    std::vector<std::vector<word>> valid_rows;  // per vertex, ascending masks
    // per row r: the (t-1)-subsets of {0..r-1}; together with r they are the
    // t-subsets whose common out-neighbor count becomes final at row r
    std::vector<std::vector<std::vector<int>>> closing_subsets;
    std::vector<word> column_subsets;  // t-subset masks (two-way mode only)
};

SearchPlan build_plan(const SearchSpec& spec) {
    SearchPlan plan;
    plan.n = spec.n;
    plan.t = spec.params.t;
    plan.lambda = spec.params.lambda;
    plan.two_way = spec.mode == SearchMode::TwoWayLiking;

    const int min_degree = plan.t + plan.lambda - 1;
    plan.valid_rows.resize(static_cast<std::size_t>(plan.n));
    const word full = full_mask(plan.n);
    for (int v = 0; v < plan.n; ++v) {
        const word allowed = full & ~bit(v);
        for (word m = 0; m <= full; ++m) {
            if ((m & ~allowed) != 0) continue;
            if (popcount(m) < min_degree) continue;
            plan.valid_rows[static_cast<std::size_t>(v)].push_back(m);
        }
    }

    plan.closing_subsets.resize(static_cast<std::size_t>(plan.n));
    for (int r = 0; r < plan.n; ++r) {
        if (r < plan.t - 1) continue;  // not enough earlier rows
        auto& combos = plan.closing_subsets[static_cast<std::size_t>(r)];
        if (plan.t == 1) {
            combos.push_back({});
            continue;
        }
        std::vector<int> c(static_cast<std::size_t>(plan.t - 1));
        std::iota(c.begin(), c.end(), 0);
        do {
            combos.push_back(c);
        } while (next_combination(c, r));
    }

    if (plan.two_way) {
        std::vector<int> c(static_cast<std::size_t>(plan.t));
        std::iota(c.begin(), c.end(), 0);
        do {
            plan.column_subsets.push_back(vertices_to_mask(c));
        } while (next_combination(c, plan.n));
    }
    return plan;
}

struct SearchGlobals {
    std::uint64_t budget = 0;
    std::uint64_t limit = 0;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> emitted{0};
    std::atomic<bool> abort{false};
    std::atomic<bool> budget_hit{false};
    std::atomic<bool> stopped_early{false};
    std::mutex sink_mutex;
    const FoundSink* sink = nullptr;
    std::mutex error_mutex;
    std::string error;
};

// Per-task search state: assigned rows plus the per-column-subset counts of
// assigned rows covering them.
struct SearchState {
    std::vector<word> rows;
    std::vector<int> column_count;
};

bool place_row(const SearchPlan& plan, SearchState& state, int r, word m) {
    for (const auto& combo : plan.closing_subsets[static_cast<std::size_t>(r)]) {
        word acc = m;
        for (int idx : combo) acc &= state.rows[static_cast<std::size_t>(idx)];
        if (popcount(acc) != plan.lambda) return false;
    }
    if (plan.two_way) {
        const int remaining = plan.n - 1 - r;
        for (std::size_t si = 0; si < plan.column_subsets.size(); ++si) {
            const bool covered = (plan.column_subsets[si] & ~m) == 0;
            const int c = state.column_count[si] + (covered ? 1 : 0);
            if (c > plan.lambda || c + remaining < plan.lambda) return false;
        }
        for (std::size_t si = 0; si < plan.column_subsets.size(); ++si)
            if ((plan.column_subsets[si] & ~m) == 0) ++state.column_count[si];
    }
    state.rows[static_cast<std::size_t>(r)] = m;
    return true;
}

void unplace_row(const SearchPlan& plan, SearchState& state, int r) {
    const word m = state.rows[static_cast<std::size_t>(r)];
    state.rows[static_cast<std::size_t>(r)] = 0;
    if (plan.two_way)
        for (std::size_t si = 0; si < plan.column_subsets.size(); ++si)
            if ((plan.column_subsets[si] & ~m) == 0) --state.column_count[si];
}

class TaskRunner {
  public:
    TaskRunner(const SearchPlan& plan, SearchGlobals& globals)
        : plan_(plan), globals_(globals) {
        state_.rows.assign(static_cast<std::size_t>(plan.n), 0);
        state_.column_count.assign(plan.column_subsets.size(), 0);
    }

    SearchState& state() { return state_; }

    void dfs(int r) {
        if (r == plan_.n) {
            emit();
            return;
        }
        for (word m : plan_.valid_rows[static_cast<std::size_t>(r)]) {
            if (!tick()) return;
            if (!place_row(plan_, state_, r, m)) continue;
            dfs(r + 1);
            unplace_row(plan_, state_, r);
            if (globals_.abort.load(std::memory_order_relaxed)) return;
        }
    }

    void flush() {
        if (local_nodes_ == 0) return;
        const std::uint64_t seen =
            globals_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed) + local_nodes_;
        local_nodes_ = 0;
        if (globals_.budget != 0 && seen > globals_.budget) {
            globals_.budget_hit.store(true, std::memory_order_relaxed);
            globals_.abort.store(true, std::memory_order_relaxed);
        }
    }

  private:
    bool tick() {
        if (++local_nodes_ >= kNodeFlushBatch) flush();
        return !globals_.abort.load(std::memory_order_relaxed);
    }

    void emit() {
        Digraph d = Digraph::from_out_rows(plan_.n, state_.rows);
        // unconditional soundness re-check against the verifier
        const LikingParams p{plan_.t, plan_.lambda};
        const VerifyOptions serial{1};
        const auto violation =
            plan_.two_way ? is_two_way_liking(d, p, serial) : is_liking(d, p, serial);
        if (violation) {
            std::scoped_lock lock(globals_.error_mutex);
            if (globals_.error.empty())
                globals_.error = "search produced a digraph that fails the verifier";
            globals_.abort.store(true, std::memory_order_relaxed);
            return;
        }
        std::scoped_lock lock(globals_.sink_mutex);
        if (globals_.abort.load(std::memory_order_relaxed)) return;
        bool keep_going = true;
        try {
            keep_going = (*globals_.sink)(d);
        } catch (const std::exception& e) {
            std::scoped_lock err(globals_.error_mutex);
            if (globals_.error.empty()) globals_.error = e.what();
            globals_.abort.store(true, std::memory_order_relaxed);
            return;
        }
        const std::uint64_t count = globals_.emitted.fetch_add(1, std::memory_order_relaxed) + 1;
        if (!keep_going || (globals_.limit != 0 && count >= globals_.limit)) {
            globals_.stopped_early.store(true, std::memory_order_relaxed);
            globals_.abort.store(true, std::memory_order_relaxed);
        }
    }

    const SearchPlan& plan_;
    SearchGlobals& globals_;
    SearchState state_;
    std::uint64_t local_nodes_ = 0;
};

struct PrefixTask {
    std::vector<word> rows;  // min(2, n) leading row masks
};

// Tracks which prefixes finished and persists the last one completed in
// order, so an interrupted run can resume past it.
class CheckpointTracker {
  public:
    CheckpointTracker(std::size_t task_count, std::string path)
        : done_(task_count, false), path_(std::move(path)) {}

    void skip_through(std::size_t idx) {
        for (std::size_t i = 0; i <= idx && i < done_.size(); ++i) done_[i] = true;
        while (frontier_ < done_.size() && done_[frontier_]) ++frontier_;
    }

    void complete(std::size_t idx, const std::vector<PrefixTask>& tasks) {
        std::scoped_lock lock(mutex_);
        done_[idx] = true;
        bool advanced = false;
        while (frontier_ < done_.size() && done_[frontier_]) {
            ++frontier_;
            advanced = true;
        }
        if (advanced && !path_.empty() && frontier_ > 0) {
            std::ofstream out(path_, std::ios::trunc);
            for (word m : tasks[frontier_ - 1].rows) out << m << '\n';
        }
    }

  private:
    std::vector<bool> done_;
    std::size_t frontier_ = 0;
    std::mutex mutex_;
    std::string path_;
};

// Missing file means no prefix ever completed: resume from the start.
std::vector<word> read_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) return {};
    std::vector<word> rows;
    word m = 0;
    while (in >> m) rows.push_back(m);
    if (rows.empty()) throw std::invalid_argument("checkpoint file is empty: " + path);
    return rows;
}

}  // namespace

SearchReport enumerate_liking(const SearchSpec& spec, const FoundSink& sink) {
    if (spec.n < 1) throw std::invalid_argument("order must be positive");
    if (spec.n > kMaxSearchOrder)
        throw std::invalid_argument("search guarded to order <= 8");
    if (spec.params.t < 1 || spec.params.lambda < 1)
        throw std::invalid_argument("t and lambda must be positive");
    if (spec.n < spec.params.t) throw std::invalid_argument("order below t");

    const SearchPlan plan = build_plan(spec);
    SearchGlobals globals;
    globals.budget = spec.node_budget;
    globals.limit = spec.limit;
    globals.sink = &sink;

    SearchReport report;

    // two-row prefixes are the work units
    const int prefix_rows = std::min(2, plan.n);
    std::vector<PrefixTask> tasks;
    {
        TaskRunner scanner(plan, globals);
        auto& state = scanner.state();
        for (word m0 : plan.valid_rows[0]) {
            report.nodes_explored += 1;
            if (!place_row(plan, state, 0, m0)) continue;
            if (prefix_rows == 1) {
                tasks.push_back(PrefixTask{{m0}});
            } else {
                for (word m1 : plan.valid_rows[1]) {
                    report.nodes_explored += 1;
                    if (!place_row(plan, state, 1, m1)) continue;
                    tasks.push_back(PrefixTask{{m0, m1}});
                    unplace_row(plan, state, 1);
                }
            }
            unplace_row(plan, state, 0);
        }
    }
    globals.nodes.store(report.nodes_explored);

    CheckpointTracker tracker(tasks.size(), spec.checkpoint_path);
    std::size_t first_task = 0;
    if (spec.resume && !spec.checkpoint_path.empty()) {
        const std::vector<word> mark = read_checkpoint(spec.checkpoint_path);
        while (!mark.empty() && first_task < tasks.size() &&
               std::lexicographical_compare(mark.begin(), mark.end(),
                                            tasks[first_task].rows.begin(),
                                            tasks[first_task].rows.end()) == false)
            ++first_task;
        if (first_task > 0) tracker.skip_through(first_task - 1);
    }

    const int workers = spec.workers > 0 ? spec.workers : omp_get_max_threads();
    const auto task_count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::int64_t ti = static_cast<std::int64_t>(first_task); ti < task_count; ++ti) {
        if (globals.abort.load(std::memory_order_relaxed)) continue;
        TaskRunner runner(plan, globals);
        const auto& task = tasks[static_cast<std::size_t>(ti)];
        bool ok = true;
        for (int r = 0; r < prefix_rows && ok; ++r)
            ok = place_row(plan, runner.state(), r, task.rows[static_cast<std::size_t>(r)]);
        if (!ok) {
            std::scoped_lock lock(globals.error_mutex);
            globals.error = "prefix replay failed";
            globals.abort.store(true, std::memory_order_relaxed);
            continue;
        }
        runner.dfs(prefix_rows);
        runner.flush();
        if (!globals.abort.load(std::memory_order_relaxed))
            tracker.complete(static_cast<std::size_t>(ti), tasks);
    }

    if (!globals.error.empty()) throw std::logic_error(globals.error);

    report.nodes_explored = globals.nodes.load();
    report.budget_exhausted = globals.budget_hit.load();
    report.limit_reached = globals.stopped_early.load();
    return report;
}

SearchReport enumerate_liking(const SearchSpec& spec) {
    std::vector<Digraph> found;
    SearchReport report = enumerate_liking(spec, [&found](const Digraph& d) {
        found.push_back(d);
        return true;
    });

    if (spec.dedupe) {
        const auto count = static_cast<std::int64_t>(found.size());
        std::vector<std::uint64_t> codes(found.size());
        const int workers = spec.workers > 0 ? spec.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
        for (std::int64_t i = 0; i < count; ++i)
            codes[static_cast<std::size_t>(i)] =
                adjacency_code(canonical_form(found[static_cast<std::size_t>(i)]).digraph);

        std::vector<std::uint64_t> unique_codes = codes;
        std::sort(unique_codes.begin(), unique_codes.end());
        unique_codes.erase(std::unique(unique_codes.begin(), unique_codes.end()),
                           unique_codes.end());

        std::vector<Digraph> classes;
        classes.reserve(unique_codes.size());
        for (std::uint64_t code : unique_codes) {
            // decode the canonical adjacency bits back into a digraph
            std::vector<Arc> arcs;
            for (int i = 0; i < spec.n; ++i)
                for (int j = 0; j < spec.n; ++j)
                    if (i != j && (code >> (spec.n * spec.n - 1 - (i * spec.n + j))) & 1)
                        arcs.emplace_back(i, j);
            classes.emplace_back(spec.n, arcs);
        }
        found = std::move(classes);
    } else {
        std::sort(found.begin(), found.end(), row_tuple_less);
    }
    report.found = std::move(found);
    return report;
}

std::uint64_t adjacency_code(const Digraph& d) {
    const int n = d.order();
    if (n > kMaxSearchOrder)
        throw std::invalid_argument("adjacency code guarded to order <= 8");
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
        for (word m = d.out_mask(i); m != 0; m &= m - 1) {
            const int j = std::countr_zero(m);
            code |= std::uint64_t{1} << (n * n - 1 - (i * n + j));
        }
    return code;
}

CanonicalForm canonical_form(const Digraph& d) {
    const int n = d.order();
    if (n > kMaxSearchOrder)
        throw std::invalid_argument("canonical form guarded to order <= 8");
    const auto arcs = d.arcs();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best_perm = perm;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    do {
        std::uint64_t code = 0;
        for (auto [u, v] : arcs) {
            const int i = perm[static_cast<std::size_t>(u)];
            const int j = perm[static_cast<std::size_t>(v)];
            code |= std::uint64_t{1} << (n * n - 1 - (i * n + j));
        }
        if (code < best) {
            best = code;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Arc> relabeled;
    relabeled.reserve(arcs.size());
    for (auto [u, v] : arcs)
        relabeled.emplace_back(best_perm[static_cast<std::size_t>(u)],
                               best_perm[static_cast<std::size_t>(v)]);
    return CanonicalForm{Digraph(n, relabeled), std::move(best_perm)};
}

}  // namespace liking
