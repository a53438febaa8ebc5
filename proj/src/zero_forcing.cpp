#include "zfgd/zero_forcing.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "zfgd/path_cover.hpp"

namespace zfgd {

namespace {

uint64_t closure_mask(const Graph& g, uint64_t active) {
    const uint64_t all = (g.n == 64) ? ~uint64_t{0}
                                     : (uint64_t{1} << g.n) - 1;
    bool changed = true;
    while (changed && active != all) {
        changed = false;
        for (int v = 0; v < g.n; ++v) {
            if (!((active >> v) & 1)) continue;
            uint64_t inactive = g.mask[v] & ~active;
            if (inactive && !(inactive & (inactive - 1))) {
                active |= inactive;
                changed = true;
            }
        }
    }
    return active;
}

}  // namespace

ForcingTrace close(const Graph& g, const VertexSet& s) {
    ForcingTrace trace;
    std::vector<char> active(g.n, 0);
    for (int v : s) {
        g.check_vertex(v);
        active[v] = 1;
    }
    for (int v = 0; v < g.n; ++v)
        if (active[v]) trace.initial.push_back(v);

    // inactive-neighbor counts drive eligibility; a set keeps the pending
    // forcers ordered so the lowest index always fires first
    std::vector<int> inactive_count(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        for (int u : g.adj[v]) inactive_count[v] += !active[u];
    std::set<int> eligible;
    for (int v = 0; v < g.n; ++v)
        if (active[v] && inactive_count[v] == 1) eligible.insert(v);

    auto activate = [&](int v) {
        active[v] = 1;
        for (int u : g.adj[v]) {
            --inactive_count[u];
            if (active[u]) {
                if (inactive_count[u] == 1)
                    eligible.insert(u);
                else
                    eligible.erase(u);
            }
        }
        if (inactive_count[v] == 1) eligible.insert(v);
    };

    while (!eligible.empty()) {
        int forcer = *eligible.begin();
        eligible.erase(eligible.begin());
        int forced = -1;
        for (int u : g.adj[forcer])
            if (!active[u]) {
                forced = u;
                break;
            }
        if (forced < 0) continue;  // stale entry
        trace.events.emplace_back(forcer, forced);
        activate(forced);
    }

    for (int v = 0; v < g.n; ++v)
        if (active[v]) trace.final_active.push_back(v);
    trace.complete = static_cast<int>(trace.final_active.size()) == g.n;
    trace.chains = forcing_chains(g, trace);
    return trace;
}

std::vector<std::vector<int>> forcing_chains(const Graph& g,
                                             const ForcingTrace& trace) {
    // every chain starts at an initial vertex; only inactive vertices are
    // ever forced, so the next-links form vertex-disjoint paths
    std::vector<int> next(g.n, -1);
    for (auto [u, v] : trace.events) next[u] = v;
    std::vector<std::vector<int>> chains;
    for (int v : trace.initial) {
        std::vector<int> chain;
        for (int x = v; x != -1; x = next[x]) chain.push_back(x);
        chains.push_back(std::move(chain));
    }
    return chains;
}

bool is_zero_forcing_set(const Graph& g, const VertexSet& s) {
    if (g.has_masks()) {
        uint64_t active = 0;
        for (int v : s) {
            g.check_vertex(v);
            active |= uint64_t{1} << v;
        }
        const uint64_t all =
            (g.n == 64) ? ~uint64_t{0} : (uint64_t{1} << g.n) - 1;
        return closure_mask(g, active) == all;
    }
    return close(g, s).complete;
}

ZeroForcingResult min_zero_forcing(const Graph& g, int limit,
                                   int family_limit) {
    if (g.n > limit)
        throw LimitError("min_zero_forcing: n=" + std::to_string(g.n) +
                         " exceeds search limit " + std::to_string(limit));
    ZeroForcingResult res;
    if (g.n == 0) {
        res.family_computed = true;
        res.min_sets = {{}};
        return res;
    }
    const uint64_t all = (uint64_t{1} << g.n) - 1;
    const bool want_family = g.n <= family_limit;
    int start = 0;
    if (is_forest(g))
        start = static_cast<int>(min_path_cover(g).paths.size());
    for (int k = start; k <= g.n; ++k) {
        bool found = false;
        // Gosper's hack walks the k-subsets in increasing mask order
        uint64_t subset = (k == 0) ? 0 : (uint64_t{1} << k) - 1;
        while (true) {
            if (closure_mask(g, subset) == all) {
                VertexSet set;
                for (int v = 0; v < g.n; ++v)
                    if ((subset >> v) & 1) set.push_back(v);
                if (!found) res.witness = set;
                found = true;
                if (!want_family) break;
                res.min_sets.push_back(std::move(set));
            }
            if (k == 0 || subset >= (all & ~((uint64_t{1} << (g.n - k)) - 1)))
                break;
            uint64_t c = subset & -subset;
            uint64_t r = subset + c;
            subset = (((r ^ subset) >> 2) / c) | r;
            if (subset > all) break;
        }
        if (found) {
            res.z = k;
            res.family_computed = want_family;
            return res;
        }
    }
    throw Error("min_zero_forcing: no zero forcing set found");  // unreachable
}

}  // namespace zfgd
