#include "zfgd/tree_iso.hpp"

#include <algorithm>
#include <map>

namespace zfgd {

namespace {

// AHU code of the subtree at v away from parent, colors folded into each
// vertex token. Iterative post-order; code(v) = "(" color ":" sorted child
// codes ")".
std::string subtree_code(const Graph& g, int root, int parent,
                         const Colors& colors) {
    struct Frame {
        int v, parent;
        size_t next_child = 0;
    };
    std::vector<std::string> result_of(g.n);
    std::vector<Frame> stack;
    stack.push_back({root, parent});
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& nb = g.adj[f.v];
        bool descended = false;
        while (f.next_child < nb.size()) {
            int u = nb[f.next_child++];
            if (u == f.parent) continue;
            stack.push_back({u, f.v});
            descended = true;
            break;
        }
        if (descended) continue;
        std::vector<std::string> child_codes;
        for (int u : nb)
            if (u != f.parent) child_codes.push_back(std::move(result_of[u]));
        std::sort(child_codes.begin(), child_codes.end());
        std::string code = "(";
        code += colors.empty() ? "0" : std::to_string(colors[f.v]);
        code += ":";
        for (const auto& c : child_codes) code += c;
        code += ")";
        result_of[f.v] = std::move(code);
        stack.pop_back();
    }
    return result_of[root];
}

void check_tree_component(const Graph& g, int v) {
    std::vector<char> seen(g.n, 0);
    std::vector<std::pair<int, int>> stack{{v, -1}};
    seen[v] = 1;
    while (!stack.empty()) {
        auto [x, parent] = stack.back();
        stack.pop_back();
        bool skipped_parent = false;
        for (int u : g.adj[x]) {
            if (u == parent && !skipped_parent) {
                skipped_parent = true;
                continue;
            }
            if (seen[u])
                throw Error("component containing vertex " + std::to_string(v) +
                            " contains a cycle");
            seen[u] = 1;
            stack.emplace_back(u, x);
        }
    }
}

CanonicalCode component_free_code(const Graph& g, int rep,
                                  const Colors& colors) {
    check_tree_component(g, rep);
    VertexSet center = tree_center(g, rep);
    CanonicalCode out;
    out.kind = CanonicalCode::Kind::Free;
    out.colored = !colors.empty();
    if (center.size() == 1) {
        out.code = "F1" + subtree_code(g, center[0], -1, colors);
    } else {
        // virtual root subdividing the center edge
        std::string a = subtree_code(g, center[0], center[1], colors);
        std::string b = subtree_code(g, center[1], center[0], colors);
        if (b < a) std::swap(a, b);
        out.code = "F2(V:" + a + b + ")";
    }
    return out;
}

std::vector<std::string> forest_code_multiset(const Graph& f,
                                              const Colors& colors) {
    std::vector<std::string> codes;
    for (const auto& comp : components(f))
        codes.push_back(component_free_code(f, comp[0], colors).code);
    std::sort(codes.begin(), codes.end());
    return codes;
}

Colors membership_colors(const Graph& g, const VertexSet& set) {
    Colors colors(g.n, 0);
    for (int v : set) {
        g.check_vertex(v);
        colors[v] = 1;
    }
    return colors;
}

// ---- joint integer AHU -------------------------------------------------
//
// Canonical ids for colored free-tree components, assigned jointly across
// several (graph, coloring) instances so that ids are comparable within one
// call. Two components receive the same root id iff they are isomorphic as
// colored free trees. Runs in O(N log N); the string codes above stay around
// for per-tree output where a stable external form matters.

struct CanonInstance {
    const Graph* g;
    const Colors* colors;                 // may be null (uncolored)
    const std::vector<VertexSet>* comps;  // components to canonicalize
};

constexpr int kVirtualColor = -1;

std::vector<std::vector<long>> joint_component_ids(
    const std::vector<CanonInstance>& instances) {
    // flattened rooted forest over all instances
    std::vector<int> color;
    std::vector<std::vector<int>> children;
    std::vector<int> height;
    std::vector<std::vector<long>> result(instances.size());
    std::vector<std::pair<size_t, size_t>> roots;  // (instance, node index)

    for (size_t k = 0; k < instances.size(); ++k) {
        const Graph& g = *instances[k].g;
        const Colors* cols = instances[k].colors;
        std::vector<int> node_of(g.n, -1);  // components are vertex-disjoint
        for (const auto& comp : *instances[k].comps) {
            check_tree_component(g, comp[0]);
            VertexSet center = tree_center(g, comp[0]);
            auto add_node = [&](int v) {
                node_of[v] = static_cast<int>(color.size());
                color.push_back(cols ? (*cols)[v] : 0);
                children.emplace_back();
                height.push_back(0);
                return node_of[v];
            };
            int root;
            std::vector<std::pair<int, int>> stack;  // (vertex, parent vertex)
            if (center.size() == 1) {
                root = add_node(center[0]);
                for (int u : g.adj[center[0]]) stack.emplace_back(u, center[0]);
            } else {
                root = static_cast<int>(color.size());
                color.push_back(kVirtualColor);
                children.emplace_back();
                height.push_back(0);
                add_node(center[0]);
                add_node(center[1]);
                children[root] = {node_of[center[0]], node_of[center[1]]};
                for (int u : g.adj[center[0]])
                    if (u != center[1]) stack.emplace_back(u, center[0]);
                for (int u : g.adj[center[1]])
                    if (u != center[0]) stack.emplace_back(u, center[1]);
            }
            while (!stack.empty()) {
                auto [v, parent] = stack.back();
                stack.pop_back();
                int node = add_node(v);
                children[node_of[parent]].push_back(node);
                for (int u : g.adj[v])
                    if (u != parent) stack.emplace_back(u, v);
            }
            roots.emplace_back(k, root);
        }
    }

    // children always carry larger node indices than their parent, so one
    // reverse pass computes heights
    size_t total = color.size();
    for (size_t i = total; i-- > 0;) {
        int h = 0;
        for (int c : children[i]) h = std::max(h, height[c] + 1);
        height[i] = h;
    }

    int max_height = 0;
    for (size_t i = 0; i < total; ++i) max_height = std::max(max_height, height[i]);
    std::vector<std::vector<size_t>> by_height(max_height + 1);
    for (size_t i = 0; i < total; ++i) by_height[height[i]].push_back(i);

    std::vector<long> id(total, -1);
    long next_id = 0;
    for (int h = 0; h <= max_height; ++h) {
        std::vector<std::pair<std::vector<long>, size_t>> sigs;
        sigs.reserve(by_height[h].size());
        for (size_t node : by_height[h]) {
            std::vector<long> sig{color[node]};
            for (int c : children[node]) sig.push_back(id[c]);
            std::sort(sig.begin() + 1, sig.end());
            sigs.emplace_back(std::move(sig), node);
        }
        std::sort(sigs.begin(), sigs.end());
        for (size_t i = 0; i < sigs.size(); ++i) {
            if (i > 0 && sigs[i].first == sigs[i - 1].first)
                id[sigs[i].second] = id[sigs[i - 1].second];
            else
                id[sigs[i].second] = next_id++;
        }
    }

    for (auto [k, root] : roots) result[k].push_back(id[root]);
    for (auto& ids : result) std::sort(ids.begin(), ids.end());
    return result;
}

std::vector<std::vector<long>> joint_forest_ids(
    const Graph& f, const std::vector<Colors>& colorings) {
    std::vector<VertexSet> comps = components(f);
    std::vector<CanonInstance> instances;
    instances.reserve(colorings.size());
    for (const auto& c : colorings) instances.push_back({&f, &c, &comps});
    return joint_component_ids(instances);
}

}  // namespace

CanonicalCode rooted_code(const Graph& g, int root, const Colors& colors) {
    g.check_vertex(root);
    if (!colors.empty() && static_cast<int>(colors.size()) != g.n)
        throw Error("colors must cover every vertex");
    check_tree_component(g, root);
    CanonicalCode out;
    out.kind = CanonicalCode::Kind::Rooted;
    out.colored = !colors.empty();
    out.code = subtree_code(g, root, -1, colors);
    return out;
}

CanonicalCode free_code(const Graph& g, const Colors& colors) {
    if (!is_tree(g)) throw Error("free_code: input is not a tree");
    if (!colors.empty() && static_cast<int>(colors.size()) != g.n)
        throw Error("colors must cover every vertex");
    return component_free_code(g, 0, colors);
}

bool sets_in_same_orbit(const Graph& f, const VertexSet& a,
                        const VertexSet& b) {
    if (!is_forest(f)) throw Error("sets_in_same_orbit: input is not a forest");
    if (a.size() != b.size()) return false;
    auto ids = joint_forest_ids(
        f, {membership_colors(f, a), membership_colors(f, b)});
    return ids[0] == ids[1];
}

bool exists_swap_automorphism(const Graph& f, int x, int y) {
    if (!is_forest(f))
        throw Error("exists_swap_automorphism: input is not a forest");
    f.check_vertex(x);
    f.check_vertex(y);
    if (x == y) return true;
    Colors pins(f.n, 0), swapped(f.n, 0);
    pins[x] = 1;
    pins[y] = 2;
    swapped[x] = 2;
    swapped[y] = 1;
    auto ids = joint_forest_ids(f, {pins, swapped});
    return ids[0] == ids[1];
}

std::string subset_orbit_key(const Graph& f, const VertexSet& set) {
    if (!is_forest(f)) throw Error("subset_orbit_key: input is not a forest");
    std::string key;
    for (const auto& code : forest_code_multiset(f, membership_colors(f, set))) {
        key += code;
        key += '|';
    }
    return key;
}

bool components_isomorphic(const Graph& g, const VertexSet& c1,
                           const VertexSet& c2) {
    if (c1.empty() || c2.empty())
        throw Error("components_isomorphic: empty component");
    if (c1.size() != c2.size()) return false;
    std::vector<VertexSet> comps{c1, c2};
    std::vector<CanonInstance> instance{{&g, nullptr, &comps}};
    auto ids = joint_component_ids(instance);
    return ids[0][0] == ids[0][1];
}

bool brute_automorphism_orbits(const Graph& g, const VertexSet& a,
                               const VertexSet& b, int limit) {
    if (g.n > limit)
        throw LimitError("brute_automorphism_orbits: n=" + std::to_string(g.n) +
                         " exceeds limit " + std::to_string(limit));
    if (a.size() != b.size()) return false;
    Colors source = membership_colors(g, a);
    Colors target = membership_colors(g, b);

    std::vector<int> image(g.n, -1);
    std::vector<char> used(g.n, 0);
    // map vertices in index order; candidates must preserve degree, set
    // membership and adjacency to everything already mapped
    auto dfs = [&](auto&& self, int v) -> bool {
        if (v == g.n) return true;
        for (int w = 0; w < g.n; ++w) {
            if (used[w]) continue;
            if (g.degree(v) != g.degree(w)) continue;
            if (source[v] != target[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.has_edge(u, v) != g.has_edge(image[u], w)) ok = false;
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            if (self(self, v + 1)) return true;
            image[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    return dfs(dfs, 0);
}

}  // namespace zfgd
