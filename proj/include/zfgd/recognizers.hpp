#pragma once

#include <json.hpp>

#include "zfgd/graph.hpp"
#include "zfgd/sequences.hpp"

namespace zfgd {

// Verdict plus a machine-checkable witness. The payload layout depends on
// witness_type; see the README for the shapes. The CLI fills `graph6` so its
// certificates re-validate without the original input file.
struct Certificate {
    std::string property;
    bool yes = false;
    std::string witness_type;
    nlohmann::json witness;
    std::string graph6;
};

struct ForestMatching {
    bool perfect = false;
    std::vector<Edge> matching;
    int exposed = -1;  // first vertex left unmatchable, when not perfect
};

inline constexpr int kDefaultBhrLimit = 16;
inline constexpr int kDefaultOracleGeneralLimit = 9;
inline constexpr int kDefaultOracleForestLimit = 11;

// Greedy leaf matching; exact on forests.
ForestMatching forest_matching(const Graph& f);

// Unique minimum zero forcing set exists iff the graph has no edges.
Certificate recognize_unique_zero_forcing(const Graph& g);

// Unique Grundy dominating set exists iff the graph has no edges.
Certificate recognize_unique_grundy_domination(const Graph& g);

// All Grundy dominating sets lie in one automorphism orbit iff every
// component is a complete graph.
Certificate recognize_iso_unique_grundy_domination(const Graph& g);

// Unique Grundy total dominating set: gamma_gr^t(G) = n(G) - i(G); decided by
// matching on forests, by exhaustive search otherwise (within `limit`).
Certificate recognize_unique_gtd(const Graph& g,
                                 int limit = kDefaultGrundyLimit);

// Searches for a labeling x_1..x_k, y_1..y_k with x_i ~ y_i, {x_i}
// independent and y_j ~ x_i implying i >= j; such a labeling exists iff
// gamma_gr^t(G) = n(G). Requires no isolated vertices.
Certificate bhr_labeling_search(const Graph& g, int limit = kDefaultBhrLimit);

Certificate perfect_matching_forest(const Graph& f);

// Trim every strong support vertex to one leaf, then test for a perfect
// matching. Rejects forests with isolated vertices.
Certificate recognize_iso_unique_gtd_forest(const Graph& f);

// Unique L-Grundy dominating set: gamma_gr^L(G) = n(G); immediate for
// isolate-free forests, exhaustive otherwise (within `limit`).
Certificate recognize_unique_lgd(const Graph& g,
                                 int limit = kDefaultGrundyLimit);

// The path-cover based recognizer: trim strong supports to two leaves, demand
// an interior minimum path cover, re-insert trimmed leaves as singleton
// paths, then check the midpoint-component and end-swap conditions of every
// path.
Certificate recognize_iso_unique_zf_forest(const Graph& f);

// Exhaustive cross-validation oracle: enumerates all extremal sets and tests
// whether they form a single automorphism orbit.
Certificate oracle_iso_unique(const Graph& g, SequenceKind kind,
                              int general_limit = kDefaultOracleGeneralLimit,
                              int forest_limit = kDefaultOracleForestLimit);
Certificate oracle_iso_unique_zf(const Graph& g,
                                 int general_limit = kDefaultOracleGeneralLimit,
                                 int forest_limit = kDefaultOracleForestLimit);

}  // namespace zfgd
