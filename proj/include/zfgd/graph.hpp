#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zfgd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input could not be parsed; `line` is 1-based (0 when not line-oriented).
struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_no = 0);
};

// An exact-search routine was asked to run above its configured size limit.
struct LimitError : Error {
    using Error::Error;
};

using Edge = std::pair<int, int>;
using VertexSet = std::vector<int>;  // sorted, duplicate-free

// Simple undirected graph on vertices 0..n-1. Neighbor lists are sorted and
// duplicate-free; `mask` mirrors them as bit sets whenever n <= 64 and is
// empty otherwise. Instances are immutable after construction.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<uint64_t> mask;

    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_masks() const { return !mask.empty(); }
    bool has_edge(int u, int v) const;
    int edge_count() const;
    std::vector<Edge> edges() const;
    void check_vertex(int v) const;
};

struct VertexClassification {
    std::vector<char> isolated;        // degree 0
    std::vector<char> leaf;            // degree 1
    std::vector<char> support;         // adjacent to >= 1 leaf
    std::vector<char> strong_support;  // adjacent to >= 2 leaves
    int isolated_count = 0;
    int leaf_count = 0;
};

// Result of deleting vertices/edges: the surviving graph plus the relabeling
// in both directions (to_new[old] is -1 for deleted vertices).
struct Subgraph {
    Graph graph;
    std::vector<int> to_old;
    std::vector<int> to_new;
};

// Line-oriented edge list: first non-comment line is the vertex count, every
// following line "u v" adds an edge. `#` starts a comment. Duplicate edges
// collapse; bad indices, self-loops and malformed tokens raise ParseError
// with the offending line number.
Graph parse_edge_list(const std::string& text);

// graph6, short form only (n <= 62).
Graph parse_graph6(const std::string& word);
std::string to_graph6(const Graph& g);

std::vector<VertexSet> components(const Graph& g);
VertexClassification classify_vertices(const Graph& g);

// Center of the tree component containing `v` (one vertex, or two adjacent).
// Throws Error if that component contains a cycle.
VertexSet tree_center(const Graph& g, int v);

// Equivalence classes of N(u) = N(v), singletons included, each class sorted,
// classes ordered by smallest member.
std::vector<VertexSet> open_twin_classes(const Graph& g);

Subgraph remove(const Graph& g, const VertexSet& vertices,
                const std::vector<Edge>& edges);
Subgraph induced(const Graph& g, const VertexSet& keep);

bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace zfgd
