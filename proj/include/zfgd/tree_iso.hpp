#pragma once

#include "zfgd/graph.hpp"

namespace zfgd {

// Canonical code of a (colored) rooted or free tree. Codes are strings over
// '(' ')' plus color tokens; equality of codes is isomorphism of the coded
// trees (color-preserving when colors are given).
struct CanonicalCode {
    enum class Kind { Rooted, Free };
    std::string code;
    Kind kind = Kind::Rooted;
    bool colored = false;

    bool operator==(const CanonicalCode&) const = default;
};

using Colors = std::vector<int>;  // per-vertex labels; empty means uncolored

// Code of the tree component containing `root`, rooted there. Throws if that
// component contains a cycle.
CanonicalCode rooted_code(const Graph& g, int root, const Colors& colors = {});

// Label-invariant code of a tree; two-center trees are rooted at a virtual
// vertex subdividing the center edge. Requires g to be a tree.
CanonicalCode free_code(const Graph& g, const Colors& colors = {});

// True when some automorphism of the forest maps set a onto set b. Decided by
// comparing multisets of per-component free codes colored by membership.
bool sets_in_same_orbit(const Graph& f, const VertexSet& a, const VertexSet& b);

// True when some automorphism of the forest maps x to y AND y to x (the
// two-sided swap), decided by pin-exchange code equality.
bool exists_swap_automorphism(const Graph& f, int x, int y);

// Free-code equality of two tree components (vertex sets of components of a
// forest-like graph).
bool components_isomorphic(const Graph& g, const VertexSet& c1,
                           const VertexSet& c2);

// Canonical orbit key of a vertex subset of a forest: two subsets have equal
// keys iff some automorphism of the forest maps one onto the other.
std::string subset_orbit_key(const Graph& f, const VertexSet& set);

// General-graph fallback: is there an adjacency-preserving bijection of g
// mapping a onto b? Exhaustive with degree/membership pruning; n <= 9.
bool brute_automorphism_orbits(const Graph& g, const VertexSet& a,
                               const VertexSet& b, int limit = 9);

}  // namespace zfgd
