#include "zfgd/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <set>
#include <thread>

#include "zfgd/recognizers.hpp"
#include "zfgd/sequences.hpp"
#include "zfgd/tree_iso.hpp"
#include "zfgd/zero_forcing.hpp"

namespace zfgd {

std::vector<Graph> free_trees(int n) {
    if (n < 1 || n > kMaxFreeTreeN)
        throw LimitError("free_trees: n must be in 1.." +
                         std::to_string(kMaxFreeTreeN));
    std::vector<Graph> census{Graph::from_edges(1, {})};
    for (int size = 2; size <= n; ++size) {
        std::vector<Graph> next;
        std::set<std::string> seen;
        for (const Graph& t : census) {
            std::vector<Edge> edges = t.edges();
            edges.emplace_back(0, size - 1);  // placeholder, patched below
            for (int v = 0; v < t.n; ++v) {
                edges.back() = {v, size - 1};
                Graph bigger = Graph::from_edges(size, edges);
                if (seen.insert(free_code(bigger).code).second)
                    next.push_back(std::move(bigger));
            }
        }
        census = std::move(next);
    }
    return census;
}

std::vector<Graph> forests(int n, int min_component) {
    if (n < 0 || n > kMaxFreeTreeN)
        throw LimitError("forests: n must be in 0.." +
                         std::to_string(kMaxFreeTreeN));
    std::vector<std::vector<Graph>> trees_by_size(n + 1);
    for (int s = std::max(1, min_component); s <= n; ++s)
        trees_by_size[s] = free_trees(s);

    std::vector<Graph> out;
    // parts are chosen with non-increasing (size, tree index) so every
    // multiset of components appears exactly once
    std::vector<std::pair<int, int>> parts;
    auto emit = [&]() {
        Graph forest = Graph::from_edges(0, {});
        for (auto [size, idx] : parts)
            forest = disjoint_union(forest, trees_by_size[size][idx]);
        out.push_back(std::move(forest));
    };
    auto gen = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        int max_size = parts.empty() ? remaining
                                     : std::min(remaining, parts.back().first);
        for (int size = max_size; size >= min_component; --size) {
            const auto& pool = trees_by_size[size];
            int max_idx = (!parts.empty() && parts.back().first == size)
                              ? parts.back().second
                              : static_cast<int>(pool.size()) - 1;
            for (int idx = max_idx; idx >= 0; --idx) {
                parts.emplace_back(size, idx);
                self(self, remaining - size);
                parts.pop_back();
            }
        }
    };
    if (n == 0)
        out.push_back(Graph::from_edges(0, {}));
    else
        gen(gen, n);
    return out;
}

uint64_t labeled_graph_count(int n) {
    if (n < 0 || n > kMaxLabeledN)
        throw LimitError("labeled_graph_count: n must be in 0.." +
                         std::to_string(kMaxLabeledN));
    return uint64_t{1} << (n * (n - 1) / 2);
}

namespace {

Graph graph_from_edge_mask(int n, uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++bit)
            if ((mask >> bit) & 1) edges.emplace_back(row, col);
    return Graph::from_edges(n, edges);
}

}  // namespace

void labeled_graphs(int n, const std::function<void(const Graph&)>& visit) {
    uint64_t total = labeled_graph_count(n);
    for (uint64_t mask = 0; mask < total; ++mask)
        visit(graph_from_edge_mask(n, mask));
}

namespace {

struct VerdictPair {
    std::string fast;
    std::string oracle;
};

std::string yn(bool b) { return b ? "yes" : "no"; }

using Checker = std::function<VerdictPair(const Graph&)>;

VerdictPair run_guarded(const Checker& fast_and_oracle, const Graph& g) {
    try {
        return fast_and_oracle(g);
    } catch (const std::exception& e) {
        return {std::string("error: ") + e.what(), "error"};
    }
}

Checker checker_for(const std::string& property) {
    if (property == "iso-unique-zf-forest")
        return [](const Graph& g) -> VerdictPair {
            return {yn(recognize_iso_unique_zf_forest(g).yes),
                    yn(oracle_iso_unique_zf(g).yes)};
        };
    if (property == "iso-unique-gtd-forest")
        return [](const Graph& g) -> VerdictPair {
            return {yn(recognize_iso_unique_gtd_forest(g).yes),
                    yn(oracle_iso_unique(g, SequenceKind::Open).yes)};
        };
    if (property == "iso-unique-gd")
        return [](const Graph& g) -> VerdictPair {
            return {yn(recognize_iso_unique_grundy_domination(g).yes),
                    yn(oracle_iso_unique(g, SequenceKind::Closed).yes)};
        };
    if (property == "unique-zf")
        return [](const Graph& g) -> VerdictPair {
            auto family = min_zero_forcing(g, g.n, g.n).min_sets;
            return {yn(recognize_unique_zero_forcing(g).yes),
                    yn(family.size() == 1)};
        };
    if (property == "unique-gd")
        return [](const Graph& g) -> VerdictPair {
            auto family = all_max_grundy_sets(g, SequenceKind::Closed, g.n);
            return {yn(recognize_unique_grundy_domination(g).yes),
                    yn(family.size() == 1)};
        };
    if (property == "unique-gtd-forest")
        return [](const Graph& g) -> VerdictPair {
            int isolated = classify_vertices(g).isolated_count;
            int gamma = grundy_number(g, SequenceKind::Open).value;
            return {yn(recognize_unique_gtd(g).yes),
                    yn(gamma == g.n - isolated)};
        };
    if (property == "unique-lgd")
        return [](const Graph& g) -> VerdictPair {
            auto family = all_max_grundy_sets(g, SequenceKind::L, g.n);
            return {yn(recognize_unique_lgd(g).yes), yn(family.size() == 1)};
        };
    throw Error("unknown cross-validation property '" + property + "'");
}

// Permutes forcer priority randomly and closes; the fixpoint must match the
// deterministic closure regardless of order.
VertexSet randomized_closure(const Graph& g, const VertexSet& start,
                             std::mt19937& rng) {
    std::vector<char> active(g.n, 0);
    for (int v : start) active[v] = 1;
    std::vector<int> order(g.n);
    for (int v = 0; v < g.n; ++v) order[v] = v;
    bool changed = true;
    while (changed) {
        changed = false;
        std::shuffle(order.begin(), order.end(), rng);
        for (int v : order) {
            if (!active[v]) continue;
            int candidate = -1, count = 0;
            for (int u : g.adj[v])
                if (!active[u]) {
                    candidate = u;
                    ++count;
                }
            if (count == 1) {
                active[candidate] = 1;
                changed = true;
            }
        }
    }
    VertexSet out;
    for (int v = 0; v < g.n; ++v)
        if (active[v]) out.push_back(v);
    return out;
}

CensusReport closure_invariance_report(int n_max, double budget_seconds,
                                       uint64_t seed) {
    CensusReport report;
    report.property = "closure-invariance";
    report.n_max = n_max;
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(static_cast<uint32_t>(seed));
    const int rounds = 400;
    for (int i = 0; i < rounds; ++i) {
        int n = 1 + static_cast<int>(rng() % static_cast<uint32_t>(n_max));
        double p = (1 + rng() % 9) / 10.0;
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (std::uniform_real_distribution<>(0, 1)(rng) < p)
                    edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        VertexSet start;
        for (int v = 0; v < n; ++v)
            if (rng() % 2) start.push_back(v);
        VertexSet deterministic = close(g, start).final_active;
        VertexSet shuffled = randomized_closure(g, start, rng);
        ++report.instances;
        bool equal = deterministic == shuffled;
        ++report.verdict_counts[equal ? "equal" : "differ"];
        if (!equal)
            report.mismatches.push_back(
                {to_graph6(g), "deterministic-closure", "randomized-closure"});
        auto elapsed = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
        if (budget_seconds > 0 && elapsed > budget_seconds) {
            report.truncated = true;
            break;
        }
    }
    report.seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return report;
}

bool forest_property(const std::string& property) {
    return property == "iso-unique-zf-forest" ||
           property == "iso-unique-gtd-forest" ||
           property == "unique-gtd-forest";
}

}  // namespace

std::vector<std::string> cross_validate_properties() {
    return {"iso-unique-zf-forest", "iso-unique-gtd-forest", "iso-unique-gd",
            "unique-zf",            "unique-gd",             "unique-gtd-forest",
            "unique-lgd",           "closure-invariance"};
}

CensusReport cross_validate(const std::string& property, int n_max,
                            double budget_seconds, int jobs, uint64_t seed) {
    if (property == "closure-invariance")
        return closure_invariance_report(std::max(1, n_max), budget_seconds,
                                         seed);
    Checker check = checker_for(property);
    CensusReport report;
    report.property = property;
    report.n_max = n_max;
    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             t0)
            .count();
    };

    // materialize the instance stream: forests for the forest properties,
    // otherwise all labeled graphs per order (streamed, not materialized)
    if (forest_property(property)) {
        std::vector<Graph> instances;
        int min_component = property == "iso-unique-zf-forest" ? 1 : 2;
        int lo = property == "iso-unique-zf-forest" ? 1 : 2;
        for (int n = lo; n <= n_max; ++n)
            for (Graph& f : forests(n, min_component))
                instances.push_back(std::move(f));
        report.instances = static_cast<long>(instances.size());
        std::vector<VerdictPair> verdicts(instances.size());
        int workers = std::max(1, jobs);
        std::atomic<size_t> cursor{0};
        std::atomic<bool> stop{false};
        auto work = [&] {
            while (!stop.load()) {
                size_t i = cursor.fetch_add(1);
                if (i >= instances.size()) break;
                verdicts[i] = run_guarded(check, instances[i]);
                if (budget_seconds > 0 && elapsed() > budget_seconds)
                    stop.store(true);
            }
        };
        if (workers == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(work);
            for (auto& t : pool) t.join();
        }
        report.truncated = stop.load();
        size_t done = std::min(instances.size(), cursor.load());
        for (size_t i = 0; i < done; ++i) {
            if (verdicts[i].fast.empty()) continue;  // skipped after stop
            ++report.verdict_counts[verdicts[i].oracle];
            if (verdicts[i].fast != verdicts[i].oracle)
                report.mismatches.push_back({to_graph6(instances[i]),
                                             verdicts[i].fast,
                                             verdicts[i].oracle});
        }
    } else {
        int cap = std::min(n_max, kMaxLabeledN);
        for (int n = 1; n <= cap && !report.truncated; ++n) {
            uint64_t total = labeled_graph_count(n);
            for (uint64_t mask = 0; mask < total; ++mask) {
                Graph g = graph_from_edge_mask(n, mask);
                VerdictPair v = run_guarded(check, g);
                ++report.instances;
                ++report.verdict_counts[v.oracle];
                if (v.fast != v.oracle)
                    report.mismatches.push_back(
                        {to_graph6(g), v.fast, v.oracle});
                if (budget_seconds > 0 && (mask & 1023) == 0 &&
                    elapsed() > budget_seconds) {
                    report.truncated = true;
                    break;
                }
            }
        }
    }
    report.seconds = elapsed();
    return report;
}

}  // namespace zfgd
