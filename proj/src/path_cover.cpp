#include "zfgd/path_cover.hpp"

#include <algorithm>

namespace zfgd {

namespace {

// Walks the pendant chain that starts at `start`, coming from `from`.
std::vector<int> walk_chain(const Graph& g, const std::vector<char>& alive,
                            int start, int from) {
    std::vector<int> leg{start};
    int prev = from, cur = start;
    while (true) {
        int nxt = -1;
        for (int u : g.adj[cur])
            if (alive[u] && u != prev) {
                nxt = u;
                break;
            }
        if (nxt < 0) break;
        leg.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    return leg;
}

void canonical_orientation(std::vector<int>& path) {
    if (!path.empty() && path.back() < path.front())
        std::reverse(path.begin(), path.end());
}

// Picks the indices of the two legs to join through the mid: longest first,
// ties by smallest leaf-end index.
std::pair<int, int> pick_join(const std::vector<std::vector<int>>& legs) {
    std::vector<int> idx(legs.size());
    for (size_t i = 0; i < legs.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (legs[a].size() != legs[b].size())
            return legs[a].size() > legs[b].size();
        return legs[a].back() < legs[b].back();
    });
    return {idx[0], idx[1]};
}

std::vector<int> join_legs(const std::vector<int>& a, int mid,
                           const std::vector<int>& b) {
    std::vector<int> path(a.rbegin(), a.rend());
    path.push_back(mid);
    path.insert(path.end(), b.begin(), b.end());
    return path;
}

struct RootedScan {
    std::vector<int> parent;
    int branch_count = 0;
    int deepest_branch = -1;  // max depth, ties to the smaller vertex id
};

RootedScan scan_component(const Graph& g, const std::vector<char>& alive,
                          int root) {
    RootedScan scan;
    scan.parent.assign(g.n, -2);
    std::vector<std::pair<int, int>> stack{{root, 0}};
    scan.parent[root] = -1;
    int best_depth = -1;
    while (!stack.empty()) {
        auto [v, d] = stack.back();
        stack.pop_back();
        int deg = 0;
        for (int u : g.adj[v]) deg += alive[u];
        if (deg >= 3) {
            ++scan.branch_count;
            if (d > best_depth ||
                (d == best_depth && v < scan.deepest_branch)) {
                best_depth = d;
                scan.deepest_branch = v;
            }
        }
        for (int u : g.adj[v])
            if (alive[u] && scan.parent[u] == -2) {
                scan.parent[u] = v;
                stack.emplace_back(u, d + 1);
            }
    }
    return scan;
}

// Covers a generalized star (or path, or singleton) rooted anywhere in the
// alive part of the component containing `rep`.
void cover_generalized_star(const Graph& g, std::vector<char>& alive, int rep,
                            std::vector<std::vector<int>>& paths) {
    // locate the unique branch vertex, if any
    int center = -1;
    std::vector<int> comp;
    std::vector<int> stack{rep};
    std::vector<char> seen(g.n, 0);
    seen[rep] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        int deg = 0;
        for (int u : g.adj[v]) deg += alive[u];
        if (deg >= 3) center = v;
        for (int u : g.adj[v])
            if (alive[u] && !seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    if (center < 0) {
        // a path: walk from the smallest end
        int start = -1;
        for (int v : comp) {
            int deg = 0;
            for (int u : g.adj[v]) deg += alive[u];
            if (deg <= 1 && (start < 0 || v < start)) start = v;
        }
        std::vector<int> path = walk_chain(g, alive, start, -1);
        canonical_orientation(path);
        paths.push_back(std::move(path));
    } else {
        std::vector<std::vector<int>> legs;
        for (int u : g.adj[center])
            if (alive[u]) legs.push_back(walk_chain(g, alive, u, center));
        auto [i, j] = pick_join(legs);
        std::vector<int> main_path = join_legs(legs[i], center, legs[j]);
        canonical_orientation(main_path);
        paths.push_back(std::move(main_path));
        for (size_t t = 0; t < legs.size(); ++t) {
            if (static_cast<int>(t) == i || static_cast<int>(t) == j) continue;
            std::vector<int> p = legs[t];
            canonical_orientation(p);
            paths.push_back(std::move(p));
        }
    }
    for (int v : comp) alive[v] = 0;
}

std::vector<ConnectorEdge> connectors_for(const Graph& f,
                                          const PathCover& cover) {
    std::vector<int> path_id(f.n, -1);
    std::vector<char> is_end(f.n, 0);
    std::vector<char> singleton(f.n, 0);
    for (size_t p = 0; p < cover.paths.size(); ++p) {
        const auto& path = cover.paths[p];
        for (int v : path) path_id[v] = static_cast<int>(p);
        if (path.size() == 1) {
            singleton[path[0]] = 1;
        } else {
            is_end[path.front()] = 1;
            is_end[path.back()] = 1;
        }
    }
    auto classify = [&](int v) {
        if (singleton[v]) return ConnectorClass::Singleton;
        if (is_end[v]) return ConnectorClass::EndVertex;
        return ConnectorClass::Interior;
    };
    std::vector<ConnectorEdge> out;
    for (auto [u, v] : f.edges()) {
        if (path_id[u] == path_id[v]) continue;
        ConnectorEdge c;
        c.u = u;
        c.v = v;
        c.u_path = path_id[u];
        c.v_path = path_id[v];
        c.u_class = classify(u);
        c.v_class = classify(v);
        out.push_back(c);
    }
    return out;
}

}  // namespace

const char* connector_class_name(ConnectorClass c) {
    switch (c) {
        case ConnectorClass::Interior: return "interior";
        case ConnectorClass::EndVertex: return "end-vertex";
        case ConnectorClass::Singleton: return "singleton";
    }
    return "?";
}

std::optional<PendantStar> find_pendant_star(const Graph& t) {
    if (!is_tree(t)) throw Error("find_pendant_star: input is not a tree");
    std::vector<char> alive(t.n, 1);
    RootedScan scan = scan_component(t, alive, 0);
    if (scan.branch_count <= 1) return std::nullopt;
    PendantStar star;
    star.mid = scan.deepest_branch;
    for (int u : t.adj[star.mid])
        if (u != scan.parent[star.mid])
            star.legs.push_back(walk_chain(t, alive, u, star.mid));
    return star;
}

PathCover min_path_cover(const Graph& f) {
    if (!is_forest(f)) throw Error("min_path_cover: input is not a forest");
    PathCover cover;
    std::vector<char> alive(f.n, 1);
    for (const auto& comp : components(f)) {
        while (true) {
            int rep = -1;
            for (int v : comp)
                if (alive[v]) {
                    rep = v;
                    break;
                }
            if (rep < 0) break;
            RootedScan scan = scan_component(f, alive, rep);
            if (scan.branch_count <= 1) {
                cover_generalized_star(f, alive, rep, cover.paths);
                continue;  // next loop iteration finds nothing alive
            }
            int mid = scan.deepest_branch;
            std::vector<std::vector<int>> legs;
            for (int u : f.adj[mid])
                if (alive[u] && u != scan.parent[mid])
                    legs.push_back(walk_chain(f, alive, u, mid));
            auto [i, j] = pick_join(legs);
            std::vector<int> main_path = join_legs(legs[i], mid, legs[j]);
            canonical_orientation(main_path);
            cover.paths.push_back(std::move(main_path));
            for (size_t t = 0; t < legs.size(); ++t) {
                if (static_cast<int>(t) == i || static_cast<int>(t) == j)
                    continue;
                std::vector<int> p = legs[t];
                canonical_orientation(p);
                cover.paths.push_back(std::move(p));
            }
            alive[mid] = 0;
            for (const auto& leg : legs)
                for (int v : leg) alive[v] = 0;
        }
    }
    cover.connectors = connectors_for(f, cover);
    return cover;
}

PathCover classify_connectors(const Graph& f, const PathCover& cover) {
    std::vector<char> covered(f.n, 0);
    for (const auto& path : cover.paths) {
        if (path.empty()) throw Error("invalid cover: empty path");
        for (size_t i = 0; i < path.size(); ++i) {
            f.check_vertex(path[i]);
            if (covered[path[i]])
                throw Error("invalid cover: vertex " +
                            std::to_string(path[i]) + " covered twice");
            covered[path[i]] = 1;
            if (i > 0 && !f.has_edge(path[i - 1], path[i]))
                throw Error("invalid cover: " + std::to_string(path[i - 1]) +
                            "-" + std::to_string(path[i]) + " is not an edge");
        }
    }
    for (int v = 0; v < f.n; ++v)
        if (!covered[v])
            throw Error("invalid cover: vertex " + std::to_string(v) +
                        " uncovered");
    PathCover out = cover;
    out.connectors = connectors_for(f, out);
    return out;
}

UniqueCoverResult is_unique_min_cover(const Graph& t) {
    if (!is_tree(t)) throw Error("is_unique_min_cover: input is not a tree");
    UniqueCoverResult res;
    res.cover = min_path_cover(t);
    res.unique = true;
    for (const auto& c : res.cover.connectors) {
        if (c.u_class != ConnectorClass::Interior ||
            c.v_class != ConnectorClass::Interior) {
            res.unique = false;
            res.violating = c;
            break;
        }
    }
    return res;
}

VertexSet zf_set_from_cover(const PathCover& cover,
                            const std::vector<int>& end_choice) {
    if (end_choice.size() != cover.paths.size())
        throw Error("end selector must name one vertex per path");
    VertexSet out;
    for (size_t i = 0; i < cover.paths.size(); ++i) {
        const auto& path = cover.paths[i];
        int chosen = end_choice[i];
        if (chosen != path.front() && chosen != path.back())
            throw Error("vertex " + std::to_string(chosen) +
                        " is not an end of path " + std::to_string(i));
        out.push_back(chosen);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace zfgd
