#pragma once

// Test-only oracles. Everything here is recomputed from the definitions by
// brute force, independently of the library code paths it checks: sequence
// legality is re-derived per prefix, closures rescan from scratch, path
// covers come from edge-subset enumeration, isomorphism from permutation
// search, and the tree census from Prufer decoding.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "zfgd/graph.hpp"
#include "zfgd/sequences.hpp"

namespace oracle {

using zfgd::Edge;
using zfgd::Graph;
using zfgd::SequenceKind;
using zfgd::VertexSet;

// ---- sequences --------------------------------------------------------

inline bool oracle_step_legal(const Graph& g, SequenceKind kind,
                              const std::vector<int>& prefix, int v) {
    std::set<int> covered;
    const bool cover_closed =
        kind == SequenceKind::Closed || kind == SequenceKind::Z;
    for (int u : prefix) {
        if (cover_closed) covered.insert(u);
        for (int w : g.adj[u]) covered.insert(w);
    }
    const bool define_closed =
        kind == SequenceKind::Closed || kind == SequenceKind::L;
    if (define_closed && !covered.count(v)) return true;
    for (int w : g.adj[v])
        if (!covered.count(w)) return true;
    return false;
}

struct SequenceCensus {
    int max_len = 0;
    std::set<VertexSet> max_sets;
    long legal_sequences = 0;
};

inline void oracle_sequences_dfs(const Graph& g, SequenceKind kind,
                                 std::vector<int>& prefix,
                                 std::vector<char>& used,
                                 SequenceCensus& census) {
    int len = static_cast<int>(prefix.size());
    if (len > census.max_len) {
        census.max_len = len;
        census.max_sets.clear();
    }
    if (len == census.max_len) {
        VertexSet set = prefix;
        std::sort(set.begin(), set.end());
        census.max_sets.insert(set);
    }
    for (int v = 0; v < g.n; ++v) {
        if (used[v]) continue;
        if (!oracle_step_legal(g, kind, prefix, v)) continue;
        used[v] = 1;
        prefix.push_back(v);
        ++census.legal_sequences;
        oracle_sequences_dfs(g, kind, prefix, used, census);
        prefix.pop_back();
        used[v] = 0;
    }
}

inline SequenceCensus enumerate_sequences(const Graph& g, SequenceKind kind) {
    SequenceCensus census;
    std::vector<int> prefix;
    std::vector<char> used(g.n, 0);
    oracle_sequences_dfs(g, kind, prefix, used, census);
    return census;
}

// ---- zero forcing ------------------------------------------------------

inline std::set<int> oracle_closure(const Graph& g, const std::set<int>& s) {
    std::set<int> active = s;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : std::vector<int>(active.begin(), active.end())) {
            int inactive_neighbor = -1, count = 0;
            for (int u : g.adj[v])
                if (!active.count(u)) {
                    inactive_neighbor = u;
                    ++count;
                }
            if (count == 1) {
                active.insert(inactive_neighbor);
                changed = true;
            }
        }
    }
    return active;
}

struct ZfCensus {
    int z = 0;
    std::set<VertexSet> min_sets;
};

inline ZfCensus brute_min_zero_forcing(const Graph& g) {
    ZfCensus census;
    for (int k = 0; k <= g.n; ++k) {
        std::vector<int> pick(g.n, 0);
        std::fill(pick.begin(), pick.begin() + k, 1);
        std::sort(pick.begin(), pick.end());
        // iterate all k-subsets via permutations of the indicator
        do {
            std::set<int> s;
            for (int v = 0; v < g.n; ++v)
                if (pick[v]) s.insert(v);
            if (static_cast<int>(oracle_closure(g, s).size()) == g.n) {
                census.min_sets.insert(VertexSet(s.begin(), s.end()));
            }
        } while (std::next_permutation(pick.begin(), pick.end()));
        if (!census.min_sets.empty()) {
            census.z = k;
            return census;
        }
    }
    census.z = g.n;
    return census;
}

// ---- path covers -------------------------------------------------------

struct CoverCensus {
    int p = 0;           // minimum number of paths
    long min_covers = 0; // count of distinct minimum covers
};

// A path cover of a tree is exactly an edge subset with maximum degree 2
// (paths = n - |subset|); subsets are enumerated directly.
inline CoverCensus brute_path_covers(const Graph& t) {
    std::vector<Edge> edges = t.edges();
    int m = static_cast<int>(edges.size());
    CoverCensus census;
    census.p = t.n;
    for (long mask = 0; mask < (1L << m); ++mask) {
        std::vector<int> deg(t.n, 0);
        bool ok = true;
        int chosen = 0;
        for (int e = 0; e < m && ok; ++e) {
            if (!((mask >> e) & 1)) continue;
            ++chosen;
            if (++deg[edges[e].first] > 2 || ++deg[edges[e].second] > 2)
                ok = false;
        }
        if (!ok) continue;
        int paths = t.n - chosen;
        if (paths < census.p) {
            census.p = paths;
            census.min_covers = 1;
        } else if (paths == census.p) {
            ++census.min_covers;
        }
    }
    return census;
}

// ---- isomorphism -------------------------------------------------------

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < a.n && ok; ++u)
            for (int v = u + 1; v < a.n && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// automorphism mapping set x onto set y, by permutation search
inline bool brute_set_automorphism(const Graph& g, const VertexSet& x,
                                   const VertexSet& y) {
    if (x.size() != y.size()) return false;
    std::set<int> sx(x.begin(), x.end()), sy(y.begin(), y.end());
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < g.n && ok; ++u)
            for (int v = u + 1; v < g.n && ok; ++v)
                if (g.has_edge(u, v) != g.has_edge(perm[u], perm[v])) ok = false;
        for (int u = 0; u < g.n && ok; ++u)
            if (sx.count(u) != sy.count(perm[u])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// ---- independent canonical tree form ------------------------------------

// classic 01-encoding AHU, written against parent arrays; the center comes
// from all-pairs BFS eccentricities
inline std::string ahu01(const Graph& g, int root, int block) {
    // block: vertex treated as absent (for two-center splits), -1 for none
    std::vector<std::string> code(g.n);
    std::vector<int> order, parent(g.n, -2);
    order.push_back(root);
    parent[root] = -1;
    for (size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int u : g.adj[v]) {
            if (u == block || parent[u] != -2) continue;
            parent[u] = v;
            order.push_back(u);
        }
    }
    for (size_t i = order.size(); i-- > 0;) {
        int v = order[i];
        std::vector<std::string> children;
        for (int u : g.adj[v])
            if (u != block && parent[u] == v) children.push_back(code[u]);
        std::sort(children.begin(), children.end());
        std::string c = "0";
        for (const auto& ch : children) c += ch;
        c += "1";
        code[v] = c;
    }
    return code[root];
}

inline std::string tree_canon01(const Graph& t) {
    // eccentricities via BFS from every vertex
    std::vector<int> ecc(t.n, 0);
    for (int s = 0; s < t.n; ++s) {
        std::vector<int> dist(t.n, -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (size_t i = 0; i < queue.size(); ++i) {
            int v = queue[i];
            ecc[s] = std::max(ecc[s], dist[v]);
            for (int u : t.adj[v])
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
        }
    }
    int best = *std::min_element(ecc.begin(), ecc.end());
    std::vector<int> centers;
    for (int v = 0; v < t.n; ++v)
        if (ecc[v] == best) centers.push_back(v);
    if (centers.size() == 1) return "c1" + ahu01(t, centers[0], -1);
    std::string a = ahu01(t, centers[0], centers[1]);
    std::string b = ahu01(t, centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    return "c2" + a + b;
}

// ---- Prufer census ------------------------------------------------------

inline Graph prufer_decode(const std::vector<int>& seq, int n) {
    std::vector<int> degree(n, 1);
    for (int v : seq) ++degree[v];
    std::vector<Edge> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    for (int v : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1) leaves.insert(v);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

inline long prufer_tree_census(int n) {
    if (n == 1 || n == 2) return 1;
    std::set<std::string> classes;
    std::vector<int> seq(n - 2, 0);
    while (true) {
        classes.insert(tree_canon01(prufer_decode(seq, n)));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return static_cast<long>(classes.size());
}

// ---- independent graph6 encoder -----------------------------------------

inline std::string graph6_encode(const Graph& g) {
    std::vector<int> bits;
    for (int col = 1; col < g.n; ++col)
        for (int row = 0; row < col; ++row)
            bits.push_back(g.has_edge(row, col) ? 1 : 0);
    while (bits.size() % 6) bits.push_back(0);
    std::string out(1, static_cast<char>(63 + g.n));
    for (size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (int j = 0; j < 6; ++j) value = value * 2 + bits[i + j];
        out.push_back(static_cast<char>(63 + value));
    }
    return out;
}

// ---- misc helpers --------------------------------------------------------

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

inline Graph star_graph(int leaves) {
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, edges);
}

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

// double star S(a,b): centers 0 and 1, a leaves on 0, b leaves on 1
inline Graph double_star(int a, int b) {
    std::vector<Edge> edges{{0, 1}};
    int next = 2;
    for (int i = 0; i < a; ++i) edges.emplace_back(0, next++);
    for (int i = 0; i < b; ++i) edges.emplace_back(1, next++);
    return Graph::from_edges(next, edges);
}

// spider with given leg lengths hanging from center 0
inline Graph spider(const std::vector<int>& legs) {
    std::vector<Edge> edges;
    int next = 1;
    for (int len : legs) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::from_edges(next, edges);
}

// C5 plus an open twin of vertex 0 (the twin is adjacent to 1 and 4)
inline Graph c5_with_open_twin() {
    return Graph::from_edges(
        6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 1}, {5, 4}});
}

// all labeled graphs on n vertices (n small)
inline std::vector<Graph> all_labeled_graphs(int n) {
    std::vector<Graph> out;
    std::vector<Edge> all_edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);
    for (long mask = 0; mask < (1L << all_edges.size()); ++mask) {
        std::vector<Edge> edges;
        for (size_t e = 0; e < all_edges.size(); ++e)
            if ((mask >> e) & 1) edges.push_back(all_edges[e]);
        out.push_back(Graph::from_edges(n, edges));
    }
    return out;
}

}  // namespace oracle
