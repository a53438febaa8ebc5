#pragma once

#include <optional>

#include "zfgd/graph.hpp"

namespace zfgd {

enum class ConnectorClass { Interior, EndVertex, Singleton };

const char* connector_class_name(ConnectorClass c);

// Edge joining two distinct cover paths, with each end classified by its
// position in its own path.
struct ConnectorEdge {
    int u = -1, v = -1;
    int u_path = -1, v_path = -1;
    ConnectorClass u_class = ConnectorClass::Interior;
    ConnectorClass v_class = ConnectorClass::Interior;
};

// Vertex-disjoint paths covering a forest (within a tree every such path is
// automatically induced). Paths are stored with the lexicographically smaller
// end first.
struct PathCover {
    std::vector<std::vector<int>> paths;
    std::vector<ConnectorEdge> connectors;
};

// A vertex v with deg(v) = k+1 >= 3 whose k pendant-path branches hang off
// it; legs are ordered from the neighbor of mid outward.
struct PendantStar {
    int mid = -1;
    std::vector<std::vector<int>> legs;
};

// Finds a pendant generalized star of the tree, or nullopt when the tree is
// itself a generalized star (at most one vertex of degree more than 2).
std::optional<PendantStar> find_pendant_star(const Graph& t);

// Minimum path cover by repeated pendant-star peeling: the mid is covered by
// joining its two longest legs, remaining legs become their own paths.
// Connector edges come back already classified.
PathCover min_path_cover(const Graph& f);

// Recomputes connector annotations for an externally supplied cover; throws
// if the paths are not a valid cover of f.
PathCover classify_connectors(const Graph& f, const PathCover& cover);

struct UniqueCoverResult {
    bool unique = false;
    PathCover cover;
    std::optional<ConnectorEdge> violating;  // first non-interior connector
};

// A minimum path cover is unique exactly when every connector vertex is
// interior; decided on the cover computed by min_path_cover.
UniqueCoverResult is_unique_min_cover(const Graph& t);

// One chosen end per path; always a zero forcing set of the forest. The
// selector names the chosen end vertex of each path, in path order.
VertexSet zf_set_from_cover(const PathCover& cover,
                            const std::vector<int>& end_choice);

}  // namespace zfgd
