#include "zfgd/graph.hpp"

#include <algorithm>
#include <sstream>

namespace zfgd {

ParseError::ParseError(const std::string& msg, int line_no)
    : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
      line(line_no) {}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw Error("negative vertex count");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error("edge endpoint out of range: " + std::to_string(u) +
                        " " + std::to_string(v));
        if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    if (n <= 64) {
        g.mask.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (int u : g.adj[v]) g.mask[v] |= uint64_t{1} << u;
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (has_masks()) return (mask[u] >> v) & 1;
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

int Graph::edge_count() const {
    size_t deg_sum = 0;
    for (const auto& nb : adj) deg_sum += nb.size();
    return static_cast<int>(deg_sum / 2);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < n; ++v)
        for (int u : adj[v])
            if (v < u) out.emplace_back(v, u);
    return out;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n)
        throw Error("vertex " + std::to_string(v) + " out of range (n=" +
                    std::to_string(n) + ")");
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    long n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        std::istringstream line(raw);
        if (n < 0) {
            std::string tok;
            if (!(line >> tok)) continue;  // blank or comment before count
            try {
                size_t pos = 0;
                n = std::stol(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError("expected vertex count, got '" + tok + "'",
                                 line_no);
            }
            if (n < 0) throw ParseError("negative vertex count", line_no);
            std::string extra;
            if (line >> extra)
                throw ParseError("unexpected token '" + extra + "' after count",
                                 line_no);
            continue;
        }
        std::string a, b, extra;
        if (!(line >> a)) continue;
        if (!(line >> b)) throw ParseError("expected two vertex indices", line_no);
        if (line >> extra)
            throw ParseError("unexpected token '" + extra + "'", line_no);
        long u, v;
        try {
            size_t pa = 0, pb = 0;
            u = std::stol(a, &pa);
            v = std::stol(b, &pb);
            if (pa != a.size() || pb != b.size())
                throw std::invalid_argument(a);
        } catch (const std::exception&) {
            throw ParseError("malformed vertex token", line_no);
        }
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex index out of range", line_no);
        if (u == v) throw ParseError("self-loop", line_no);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("missing vertex count", line_no);
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_graph6(const std::string& word) {
    if (word.empty()) throw ParseError("empty graph6 word");
    int first = static_cast<unsigned char>(word[0]);
    if (first == 126)
        throw ParseError("long-form graph6 not supported (n > 62)");
    if (first < 63 || first > 125)
        throw ParseError("graph6 byte out of range at position 1");
    int n = first - 63;
    size_t bits_needed = static_cast<size_t>(n) * (n - 1) / 2;
    size_t bytes_needed = (bits_needed + 5) / 6;
    if (word.size() != 1 + bytes_needed)
        throw ParseError("graph6 word has wrong length for n=" +
                         std::to_string(n));
    std::vector<Edge> edges;
    size_t bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            int byte = static_cast<unsigned char>(word[1 + bit / 6]);
            if (byte < 63 || byte > 126)
                throw ParseError("graph6 byte out of range at position " +
                                 std::to_string(2 + bit / 6));
            int value = byte - 63;
            if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(row, col);
        }
    }
    // trailing pad bits must be zero
    for (size_t b = bit; b < bytes_needed * 6; ++b) {
        int value = static_cast<unsigned char>(word[1 + b / 6]) - 63;
        if ((value >> (5 - b % 6)) & 1)
            throw ParseError("nonzero padding in graph6 word");
    }
    return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
    if (g.n > 62) throw Error("graph6 short form requires n <= 62");
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    size_t bits = static_cast<size_t>(g.n) * (g.n - 1) / 2;
    std::vector<char> packed((bits + 5) / 6, 0);
    size_t bit = 0;
    for (int col = 1; col < g.n; ++col)
        for (int row = 0; row < col; ++row, ++bit)
            if (g.has_edge(row, col)) packed[bit / 6] |= 1 << (5 - bit % 6);
    for (char v : packed) out.push_back(static_cast<char>(v + 63));
    return out;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.adj[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

VertexClassification classify_vertices(const Graph& g) {
    VertexClassification c;
    c.isolated.assign(g.n, 0);
    c.leaf.assign(g.n, 0);
    c.support.assign(g.n, 0);
    c.strong_support.assign(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) == 0) {
            c.isolated[v] = 1;
            ++c.isolated_count;
        } else if (g.degree(v) == 1) {
            c.leaf[v] = 1;
            ++c.leaf_count;
        }
    }
    for (int v = 0; v < g.n; ++v) {
        int leaf_neighbors = 0;
        for (int u : g.adj[v]) leaf_neighbors += c.leaf[u];
        if (leaf_neighbors >= 1) c.support[v] = 1;
        if (leaf_neighbors >= 2) c.strong_support[v] = 1;
    }
    return c;
}

VertexSet tree_center(const Graph& g, int v) {
    g.check_vertex(v);
    // collect the component
    std::vector<int> comp;
    std::vector<char> in_comp(g.n, 0);
    std::vector<int> stack{v};
    in_comp[v] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        comp.push_back(x);
        for (int u : g.adj[x])
            if (!in_comp[u]) {
                in_comp[u] = 1;
                stack.push_back(u);
            }
    }
    size_t comp_edges = 0;
    for (int x : comp) comp_edges += g.adj[x].size();
    comp_edges /= 2;
    if (comp_edges != comp.size() - 1)
        throw Error("component containing vertex " + std::to_string(v) +
                    " contains a cycle");
    if (comp.size() <= 2) {
        VertexSet center(comp.begin(), comp.end());
        std::sort(center.begin(), center.end());
        return center;
    }
    // peel leaves layer by layer; what survives is the center
    std::vector<int> deg(g.n, 0);
    std::vector<char> alive(g.n, 0);
    for (int x : comp) {
        deg[x] = g.degree(x);
        alive[x] = 1;
    }
    std::vector<int> frontier;
    for (int x : comp)
        if (deg[x] <= 1) frontier.push_back(x);
    size_t remaining = comp.size();
    while (remaining > 2) {
        std::vector<int> next;
        for (int leaf : frontier) {
            alive[leaf] = 0;
            --remaining;
            for (int u : g.adj[leaf])
                if (alive[u] && --deg[u] == 1) next.push_back(u);
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    VertexSet center;
    for (int x : comp)
        if (alive[x]) center.push_back(x);
    std::sort(center.begin(), center.end());
    return center;
}

std::vector<VertexSet> open_twin_classes(const Graph& g) {
    std::vector<int> order(g.n);
    for (int v = 0; v < g.n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.adj[a] < g.adj[b];
    });
    std::vector<VertexSet> classes;
    for (int i = 0; i < g.n;) {
        int j = i;
        while (j < g.n && g.adj[order[j]] == g.adj[order[i]]) ++j;
        VertexSet cls(order.begin() + i, order.begin() + j);
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
        i = j;
    }
    std::sort(classes.begin(), classes.end(),
              [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
    return classes;
}

Subgraph remove(const Graph& g, const VertexSet& vertices,
                const std::vector<Edge>& edges) {
    std::vector<char> drop(g.n, 0);
    for (int v : vertices) {
        g.check_vertex(v);
        drop[v] = 1;
    }
    for (auto [u, v] : edges)
        if (!g.has_edge(u, v))
            throw Error("edge " + std::to_string(u) + "-" + std::to_string(v) +
                        " not in graph");
    Subgraph out;
    out.to_new.assign(g.n, -1);
    for (int v = 0; v < g.n; ++v)
        if (!drop[v]) {
            out.to_new[v] = static_cast<int>(out.to_old.size());
            out.to_old.push_back(v);
        }
    std::vector<Edge> kept;
    for (auto [u, v] : g.edges()) {
        if (drop[u] || drop[v]) continue;
        bool deleted = false;
        for (auto [a, b] : edges)
            if ((a == u && b == v) || (a == v && b == u)) {
                deleted = true;
                break;
            }
        if (!deleted) kept.emplace_back(out.to_new[u], out.to_new[v]);
    }
    out.graph = Graph::from_edges(static_cast<int>(out.to_old.size()), kept);
    return out;
}

Subgraph induced(const Graph& g, const VertexSet& keep) {
    std::vector<char> keep_flag(g.n, 0);
    for (int v : keep) {
        g.check_vertex(v);
        keep_flag[v] = 1;
    }
    VertexSet dropped;
    for (int v = 0; v < g.n; ++v)
        if (!keep_flag[v]) dropped.push_back(v);
    return remove(g, dropped, {});
}

bool is_forest(const Graph& g) {
    return g.edge_count() + static_cast<int>(components(g).size()) == g.n;
}

bool is_tree(const Graph& g) {
    return g.n > 0 && g.edge_count() == g.n - 1 && components(g).size() == 1;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.n, v + a.n);
    return Graph::from_edges(a.n + b.n, edges);
}

}  // namespace zfgd
