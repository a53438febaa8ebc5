#pragma once

#include <functional>
#include <map>

#include "zfgd/graph.hpp"

namespace zfgd {

inline constexpr int kMaxFreeTreeN = 12;
inline constexpr int kMaxLabeledN = 7;

// One representative per isomorphism class of trees on n vertices, generated
// by leaf augmentation from the (n-1)-census with canonical-code dedup.
// Deterministic order.
std::vector<Graph> free_trees(int n);

// One representative per isomorphism class of forests on n vertices whose
// components all have at least `min_component` vertices (2 = isolate-free).
std::vector<Graph> forests(int n, int min_component = 1);

// Streams all 2^C(n,2) labeled simple graphs on n vertices.
void labeled_graphs(int n, const std::function<void(const Graph&)>& visit);
uint64_t labeled_graph_count(int n);

struct CensusReport {
    struct Mismatch {
        std::string graph6;
        std::string fast;
        std::string oracle;
    };
    std::string property;
    int n_max = 0;
    long instances = 0;
    std::map<std::string, long> verdict_counts;
    std::vector<Mismatch> mismatches;
    double seconds = 0.0;
    bool truncated = false;  // stopped early on the time budget
};

// Pits a fast recognizer against its exhaustive oracle over generated
// instances. Per-instance failures are recorded as mismatches, never thrown.
// budget_seconds = 0 means unlimited; jobs > 1 shards instances over threads
// with a deterministic merge. The seed feeds the randomized properties.
CensusReport cross_validate(const std::string& property, int n_max,
                            double budget_seconds = 0.0, int jobs = 1,
                            uint64_t seed = 1);

std::vector<std::string> cross_validate_properties();

}  // namespace zfgd
