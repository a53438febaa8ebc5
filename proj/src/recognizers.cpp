#include "zfgd/recognizers.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "zfgd/path_cover.hpp"
#include "zfgd/tree_iso.hpp"
#include "zfgd/zero_forcing.hpp"

namespace zfgd {

namespace {

using nlohmann::json;

Certificate cert(std::string property, bool yes, std::string witness_type,
                 json payload = json::object()) {
    Certificate c;
    c.property = std::move(property);
    c.yes = yes;
    c.witness_type = std::move(witness_type);
    c.witness = std::move(payload);
    return c;
}

json edges_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (auto [u, v] : edges) out.push_back(json::array({u, v}));
    return out;
}

VertexSet complement(const Graph& g, const VertexSet& set) {
    std::vector<char> in(g.n, 0);
    for (int v : set) in[v] = 1;
    VertexSet out;
    for (int v = 0; v < g.n; ++v)
        if (!in[v]) out.push_back(v);
    return out;
}

int first_vertex_outside(const Graph& g, const VertexSet& sorted_set,
                         bool require_non_isolated) {
    for (int v = 0; v < g.n; ++v) {
        if (std::binary_search(sorted_set.begin(), sorted_set.end(), v))
            continue;
        if (require_non_isolated && g.degree(v) == 0) continue;
        return v;
    }
    return -1;
}

// Two distinct maximum sets of the given kind, via the reversal/replacement
// construction applied to a vertex outside the first witness. Requires that
// such a vertex exists.
std::pair<VertexSet, VertexSet> two_max_sets(const Graph& g, SequenceKind kind,
                                             int limit) {
    GrundyResult base = grundy_number(g, kind, limit);
    VertexSet first = base.witness.vertex_set();
    bool non_isolated =
        kind == SequenceKind::Z || kind == SequenceKind::Open;
    int x = first_vertex_outside(g, first, non_isolated);
    if (x < 0) throw Error("no vertex available outside the witness set");
    VertexSet second = sequence_containing(g, kind, x, limit).vertex_set();
    return {first, second};
}

}  // namespace

ForestMatching forest_matching(const Graph& f) {
    if (!is_forest(f)) throw Error("forest_matching: input is not a forest");
    ForestMatching res;
    std::vector<int> deg(f.n);
    std::vector<char> alive(f.n, 1);
    std::set<int> leaves;
    for (int v = 0; v < f.n; ++v) {
        deg[v] = f.degree(v);
        if (deg[v] == 0) {
            res.exposed = v;
            return res;
        }
        if (deg[v] == 1) leaves.insert(v);
    }
    int remaining = f.n;
    auto drop = [&](int v) -> bool {
        alive[v] = 0;
        leaves.erase(v);
        --remaining;
        for (int u : f.adj[v]) {
            if (!alive[u]) continue;
            if (--deg[u] == 1) leaves.insert(u);
            if (deg[u] == 0) {
                leaves.erase(u);
                res.exposed = u;  // isolated and unmatched
                return false;
            }
        }
        return true;
    };
    while (remaining > 0) {
        if (leaves.empty()) {
            // cannot happen in a forest with living edges
            throw Error("forest_matching: no leaf available");
        }
        int leaf = *leaves.begin();
        int mate = -1;
        for (int u : f.adj[leaf])
            if (alive[u]) {
                mate = u;
                break;
            }
        res.matching.emplace_back(std::min(leaf, mate), std::max(leaf, mate));
        // drop the mate first so the leaf itself never looks exposed
        leaves.erase(leaf);
        alive[leaf] = 0;
        --remaining;
        for (int u : f.adj[leaf])
            if (alive[u] && u != mate && --deg[u] == 1) leaves.insert(u);
        if (!drop(mate)) return res;
    }
    res.perfect = true;
    return res;
}

Certificate recognize_unique_zero_forcing(const Graph& g) {
    const char* prop = "unique-zf";
    if (g.edge_count() == 0)
        return cert(prop, true, "empty-graph",
                    {{"minimum_set", json(complement(g, {}))}});
    json payload;
    if (g.n <= kDefaultGrundyLimit) {
        auto [z1, z2] = two_max_sets(g, SequenceKind::Z, kDefaultGrundyLimit);
        payload["sets"] =
            json::array({json(complement(g, z1)), json(complement(g, z2))});
    } else if (is_forest(g)) {
        PathCover cover = min_path_cover(g);
        std::vector<int> fronts, alt;
        int swap_path = -1;
        for (size_t i = 0; i < cover.paths.size(); ++i) {
            fronts.push_back(cover.paths[i].front());
            if (swap_path < 0 && cover.paths[i].size() > 1)
                swap_path = static_cast<int>(i);
        }
        alt = fronts;
        alt[swap_path] = cover.paths[swap_path].back();
        VertexSet s1 = zf_set_from_cover(cover, fronts);
        VertexSet s2 = zf_set_from_cover(cover, alt);
        payload["sets"] = json::array({json(s1), json(s2)});
    } else {
        payload["edge"] = json::array(
            {g.edges().front().first, g.edges().front().second});
    }
    return cert(prop, false, "two-min-zf-sets", payload);
}

Certificate recognize_unique_grundy_domination(const Graph& g) {
    const char* prop = "unique-gd";
    if (g.edge_count() == 0) {
        VertexSet all = complement(g, {});
        return cert(prop, true, "empty-graph", {{"grundy_set", json(all)}});
    }
    json payload;
    if (g.n <= kDefaultGrundyLimit) {
        auto [s1, s2] = two_max_sets(g, SequenceKind::Closed,
                                     kDefaultGrundyLimit);
        payload["sets"] = json::array({json(s1), json(s2)});
    } else {
        payload["edge"] = json::array(
            {g.edges().front().first, g.edges().front().second});
    }
    return cert(prop, false, "two-grundy-sets", payload);
}

Certificate recognize_iso_unique_grundy_domination(const Graph& g) {
    const char* prop = "iso-unique-gd";
    std::vector<VertexSet> comps = components(g);
    const VertexSet* bad = nullptr;
    for (const auto& comp : comps) {
        for (int v : comp)
            if (g.degree(v) != static_cast<int>(comp.size()) - 1) {
                bad = &comp;
                break;
            }
        if (bad) break;
    }
    if (!bad) {
        json sizes = json::array();
        for (const auto& comp : comps) sizes.push_back(comp.size());
        return cert(prop, true, "clique-components",
                    {{"component_sizes", sizes}});
    }
    // witness: the last sequence vertex of the non-clique component can be
    // replaced either by a covered vertex u or by the uncovered neighbor u'
    // it footprints, and the two resulting sets are not automorphic
    json payload;
    payload["component"] = json(*bad);
    int nu = -1, nw = -1;
    for (int v : *bad) {
        for (int w : *bad)
            if (v < w && !g.has_edge(v, w)) {
                nu = v;
                nw = w;
                break;
            }
        if (nu >= 0) break;
    }
    payload["non_edge"] = json::array({nu, nw});
    if (g.n <= kDefaultGrundyLimit) {
        GrundyResult base = grundy_number(g, SequenceKind::Closed);
        const auto& order = base.witness.order;
        std::vector<char> in_comp(g.n, 0);
        for (int v : *bad) in_comp[v] = 1;
        int j = -1;
        for (int i = 0; i < base.witness.length(); ++i)
            if (in_comp[order[i]]) j = i;
        std::vector<char> covered_before(g.n, 0);
        for (int i = 0; i < j; ++i) {
            covered_before[order[i]] = 1;
            for (int u : g.adj[order[i]]) covered_before[u] = 1;
        }
        int u = -1, uprime = -1;
        for (int v : *bad) {
            if (!covered_before[v]) continue;
            for (int w : g.adj[v])
                if (in_comp[w] && !covered_before[w]) {
                    u = v;
                    uprime = w;
                    break;
                }
            if (u >= 0) break;
        }
        if (u >= 0) {
            std::vector<int> order_u = order, order_up = order;
            order_u[j] = u;
            order_up[j] = uprime;
            VertexSet s1 = validate(g, SequenceKind::Closed, order_u).vertex_set();
            VertexSet s2 = validate(g, SequenceKind::Closed, order_up).vertex_set();
            payload["sets"] = json::array({json(s1), json(s2)});
        }
    }
    return cert(prop, false, "non-clique-component", payload);
}

Certificate recognize_unique_gtd(const Graph& g, int limit) {
    const char* prop = "unique-gtd";
    int isolated = classify_vertices(g).isolated_count;
    if (is_forest(g)) {
        VertexSet non_isolated;
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) > 0) non_isolated.push_back(v);
        Subgraph core = induced(g, non_isolated);
        ForestMatching m = forest_matching(core.graph);
        if (m.perfect) {
            std::vector<Edge> mapped;
            for (auto [u, v] : m.matching)
                mapped.emplace_back(core.to_old[u], core.to_old[v]);
            return cert(prop, true, "perfect-matching",
                        {{"matching", edges_json(mapped)}});
        }
        return cert(prop, false, "no-perfect-matching",
                    {{"exposed", core.to_old[m.exposed]}});
    }
    if (g.n > limit)
        throw LimitError("recognize_unique_gtd: n=" + std::to_string(g.n) +
                         " exceeds oracle limit " + std::to_string(limit));
    GrundyResult res = grundy_number(g, SequenceKind::Open, limit);
    if (res.value == g.n - isolated)
        return cert(prop, true, "full-open-grundy",
                    {{"gamma_grt", res.value},
                     {"order", json(res.witness.order)}});
    json payload{{"gamma_grt", res.value}, {"target", g.n - isolated}};
    if (res.value > 0) {
        auto [s1, s2] = two_max_sets(g, SequenceKind::Open, limit);
        payload["sets"] = json::array({json(s1), json(s2)});
    }
    return cert(prop, false, "two-gtd-sets", payload);
}

Certificate bhr_labeling_search(const Graph& g, int limit) {
    const char* prop = "bhr-labeling";
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 0)
            throw Error("bhr_labeling_search: isolated vertex " +
                        std::to_string(v));
    if (g.n > limit)
        throw LimitError("bhr_labeling_search: n=" + std::to_string(g.n) +
                         " exceeds limit " + std::to_string(limit));
    if (g.n % 2 == 1)
        return cert(prop, false, "odd-order", {{"n", g.n}});
    int k = g.n / 2;
    std::vector<int> xs(k, -1), ys(k, -1);
    std::vector<char> used(g.n, 0);
    // place pairs in index order; x_i independent of earlier x's, y_i
    // non-adjacent to earlier x's, x_i ~ y_i
    auto dfs = [&](auto&& self, int i) -> bool {
        if (i == k) return true;
        for (int x = 0; x < g.n; ++x) {
            if (used[x]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (g.has_edge(x, xs[j])) ok = false;
            if (!ok) continue;
            used[x] = 1;
            xs[i] = x;
            for (int y : g.adj[x]) {
                if (used[y]) continue;
                bool fine = true;
                for (int j = 0; j < i && fine; ++j)
                    if (g.has_edge(y, xs[j])) fine = false;
                if (!fine) continue;
                used[y] = 1;
                ys[i] = y;
                if (self(self, i + 1)) return true;
                used[y] = 0;
            }
            used[x] = 0;
            xs[i] = -1;
        }
        return false;
    };
    if (dfs(dfs, 0))
        return cert(prop, true, "bhr-labeling",
                    {{"x", json(xs)}, {"y", json(ys)}});
    return cert(prop, false, "no-labeling", {{"n", g.n}});
}

Certificate perfect_matching_forest(const Graph& f) {
    const char* prop = "perfect-matching-forest";
    ForestMatching m = forest_matching(f);
    if (m.perfect)
        return cert(prop, true, "perfect-matching",
                    {{"matching", edges_json(m.matching)}});
    return cert(prop, false, "no-perfect-matching", {{"exposed", m.exposed}});
}

Certificate recognize_iso_unique_gtd_forest(const Graph& f) {
    const char* prop = "iso-unique-gtd-forest";
    if (!is_forest(f))
        throw Error("recognize_iso_unique_gtd_forest: input is not a forest");
    VertexClassification cls = classify_vertices(f);
    if (cls.isolated_count > 0)
        throw Error("recognize_iso_unique_gtd_forest: isolated vertex present");
    std::vector<char> drop(f.n, 0);
    VertexSet removed;
    for (int v = 0; v < f.n; ++v) {
        if (!cls.strong_support[v]) continue;
        bool kept_one = false;
        for (int u : f.adj[v]) {
            if (!cls.leaf[u]) continue;
            if (!kept_one) {
                kept_one = true;  // keep the smallest-index leaf
            } else {
                drop[u] = 1;
                removed.push_back(u);
            }
        }
    }
    VertexSet kept;
    for (int v = 0; v < f.n; ++v)
        if (!drop[v]) kept.push_back(v);
    Subgraph trimmed = induced(f, kept);
    ForestMatching m = forest_matching(trimmed.graph);
    json payload{{"trimmed_leaves", json(removed)}};
    if (m.perfect) {
        std::vector<Edge> mapped;
        for (auto [u, v] : m.matching)
            mapped.emplace_back(trimmed.to_old[u], trimmed.to_old[v]);
        payload["matching"] = edges_json(mapped);
        return cert(prop, true, "perfect-matching", payload);
    }
    payload["exposed"] = trimmed.to_old[m.exposed];
    return cert(prop, false, "no-perfect-matching", payload);
}

Certificate recognize_unique_lgd(const Graph& g, int limit) {
    const char* prop = "unique-lgd";
    int isolated = classify_vertices(g).isolated_count;
    if (is_forest(g) && isolated == 0)
        return cert(prop, true, "isolate-free-forest", {{"n", g.n}});
    if (g.n > limit)
        throw LimitError("recognize_unique_lgd: n=" + std::to_string(g.n) +
                         " exceeds oracle limit " + std::to_string(limit));
    GrundyResult res = grundy_number(g, SequenceKind::L, limit);
    if (res.value == g.n)
        return cert(prop, true, "full-l-grundy",
                    {{"gamma_grl", res.value},
                     {"order", json(res.witness.order)}});
    auto [s1, s2] = two_max_sets(g, SequenceKind::L, limit);
    return cert(prop, false, "two-lgd-sets",
                {{"gamma_grl", res.value},
                 {"sets", json::array({json(s1), json(s2)})}});
}

Certificate recognize_iso_unique_zf_forest(const Graph& f) {
    const char* prop = "iso-unique-zf-forest";
    if (!is_forest(f))
        throw Error("recognize_iso_unique_zf_forest: input is not a forest");
    VertexClassification cls = classify_vertices(f);

    // step 1: trim strong supports with more than two leaves down to two
    std::vector<char> drop(f.n, 0);
    VertexSet removed;
    for (int v = 0; v < f.n; ++v) {
        if (!cls.strong_support[v]) continue;
        int kept_leaves = 0;
        for (int u : f.adj[v]) {
            if (!cls.leaf[u]) continue;
            if (kept_leaves < 2) {
                ++kept_leaves;
            } else {
                drop[u] = 1;
                removed.push_back(u);
            }
        }
    }
    VertexSet kept;
    for (int v = 0; v < f.n; ++v)
        if (!drop[v]) kept.push_back(v);
    Subgraph trimmed = induced(f, kept);
    PathCover cover = min_path_cover(trimmed.graph);
    for (const auto& c : cover.connectors) {
        if (c.u_class != ConnectorClass::Interior ||
            c.v_class != ConnectorClass::Interior) {
            return cert(prop, false, "non-interior-connector",
                        {{"edge", json::array({trimmed.to_old[c.u],
                                               trimmed.to_old[c.v]})},
                         {"classes",
                          json::array({connector_class_name(c.u_class),
                                       connector_class_name(c.v_class)})}});
        }
    }

    // step 2: interpret the cover in the original forest, trimmed leaves as
    // singleton paths
    std::vector<std::vector<int>> paths;
    for (const auto& path : cover.paths) {
        std::vector<int> mapped;
        mapped.reserve(path.size());
        for (int v : path) mapped.push_back(trimmed.to_old[v]);
        paths.push_back(std::move(mapped));
    }
    for (int v : removed) paths.push_back({v});

    // step 3: midpoint components and end-swap automorphism per path
    for (const auto& path : paths) {
        int len = static_cast<int>(path.size());
        if (len < 2) continue;
        bool odd = len % 2 == 1;
        int p = odd ? (len + 1) / 2 : len / 2;  // 1-based midpoint
        bool midpoint_ok;
        if (odd) {
            Subgraph h = remove(f, {path[p - 1]}, {});
            int a = h.to_new[path[p - 2]];
            int b = h.to_new[path[p]];
            std::vector<VertexSet> comps = components(h.graph);
            const VertexSet *ca = nullptr, *cb = nullptr;
            for (const auto& comp : comps) {
                if (std::binary_search(comp.begin(), comp.end(), a)) ca = &comp;
                if (std::binary_search(comp.begin(), comp.end(), b)) cb = &comp;
            }
            midpoint_ok = components_isomorphic(h.graph, *ca, *cb);
        } else {
            Subgraph h = remove(f, {}, {{path[p - 1], path[p]}});
            int a = h.to_new[path[p - 1]];
            int b = h.to_new[path[p]];
            std::vector<VertexSet> comps = components(h.graph);
            const VertexSet *ca = nullptr, *cb = nullptr;
            for (const auto& comp : comps) {
                if (std::binary_search(comp.begin(), comp.end(), a)) ca = &comp;
                if (std::binary_search(comp.begin(), comp.end(), b)) cb = &comp;
            }
            midpoint_ok = components_isomorphic(h.graph, *ca, *cb);
        }
        if (!midpoint_ok)
            return cert(prop, false, "midpoint-components",
                        {{"path", json(path)}});
        if (!exists_swap_automorphism(f, path.front(), path.back()))
            return cert(prop, false, "no-end-swap-automorphism",
                        {{"path", json(path)}});
    }
    json jpaths = json::array();
    for (const auto& path : paths) jpaths.push_back(json(path));
    return cert(prop, true, "interior-cover",
                {{"paths", jpaths}, {"trimmed_leaves", json(removed)}});
}

namespace {

Certificate oracle_verdict(const Graph& g, const std::string& prop,
                           const std::vector<VertexSet>& family,
                           int general_limit) {
    if (family.size() <= 1) {
        json payload{{"extremal_sets", family.size()}};
        if (!family.empty()) payload["set"] = json(family[0]);
        return cert(prop, true, "single-extremal-set", payload);
    }
    if (is_forest(g)) {
        std::map<std::string, size_t> orbit_of;
        for (size_t i = 0; i < family.size(); ++i) {
            std::string key = subset_orbit_key(g, family[i]);
            auto [it, inserted] = orbit_of.emplace(key, i);
            if (!inserted) continue;
            if (orbit_of.size() > 1) {
                size_t other = orbit_of.begin()->second == i
                                   ? std::next(orbit_of.begin())->second
                                   : orbit_of.begin()->second;
                return cert(prop, false, "orbit-witness",
                            {{"sets", json::array({json(family[other]),
                                                   json(family[i])})},
                             {"extremal_sets", family.size()}});
            }
        }
        return cert(prop, true, "single-orbit",
                    {{"extremal_sets", family.size()}});
    }
    for (size_t i = 1; i < family.size(); ++i) {
        if (!brute_automorphism_orbits(g, family[0], family[i],
                                       general_limit)) {
            return cert(prop, false, "orbit-witness",
                        {{"sets", json::array({json(family[0]),
                                               json(family[i])})},
                         {"extremal_sets", family.size()}});
        }
    }
    return cert(prop, true, "single-orbit",
                {{"extremal_sets", family.size()}});
}

void check_oracle_limit(const Graph& g, int general_limit, int forest_limit,
                        const char* what) {
    int limit = is_forest(g) ? forest_limit : general_limit;
    if (g.n > limit)
        throw LimitError(std::string(what) + ": n=" + std::to_string(g.n) +
                         " exceeds oracle limit " + std::to_string(limit));
}

}  // namespace

Certificate oracle_iso_unique(const Graph& g, SequenceKind kind,
                              int general_limit, int forest_limit) {
    std::string prop = std::string("oracle-iso-unique-") + kind_name(kind);
    check_oracle_limit(g, general_limit, forest_limit, "oracle_iso_unique");
    std::vector<VertexSet> family = all_max_grundy_sets(g, kind, g.n);
    return oracle_verdict(g, prop, family, general_limit);
}

Certificate oracle_iso_unique_zf(const Graph& g, int general_limit,
                                 int forest_limit) {
    check_oracle_limit(g, general_limit, forest_limit, "oracle_iso_unique_zf");
    ZeroForcingResult res = min_zero_forcing(g, g.n, g.n);
    return oracle_verdict(g, "oracle-iso-unique-zf", res.min_sets,
                          general_limit);
}

}  // namespace zfgd
