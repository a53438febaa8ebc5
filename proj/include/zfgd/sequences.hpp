#pragma once

#include "zfgd/graph.hpp"

namespace zfgd {

// The four sequence systems. A sequence (v_1,...,v_k) of distinct vertices is
// legal when every step claims a vertex not yet covered:
//   Closed: N[v_i] minus union of earlier N[v_j]   (Grundy domination)
//   Open:   N(v_i) minus union of earlier N(v_j)   (Grundy total domination)
//   Z:      N(v_i) minus union of earlier N[v_j]   (dual of zero forcing)
//   L:      N[v_i] minus union of earlier N(v_j)
enum class SequenceKind { Closed, Open, Z, L };

const char* kind_name(SequenceKind kind);
SequenceKind kind_from_name(const std::string& name);

struct SequenceError : Error {
    int index;  // 0-based position of the first violation (-1: duplicate)
    SequenceError(const std::string& msg, int idx);
};

struct DominationSequence {
    SequenceKind kind = SequenceKind::Closed;
    std::vector<int> order;
    std::vector<VertexSet> steps;  // steps[i]: vertices footprinted by order[i]
    VertexSet covered;             // union of N[v_j] (Closed/Z) or N(v_j) (Open/L)

    int length() const { return static_cast<int>(order.size()); }
    VertexSet vertex_set() const;
};

struct GrundyResult {
    SequenceKind kind = SequenceKind::Closed;
    int value = 0;
    DominationSequence witness;
};

// Search limits, overridable per call.
inline constexpr int kDefaultGrundyLimit = 18;
inline constexpr int kDefaultFamilyLimit = 14;

// Checks the sequence and computes per-step footprints. Throws SequenceError
// on a duplicate vertex or a step that footprints nothing new.
DominationSequence validate(const Graph& g, SequenceKind kind,
                            const std::vector<int>& order);

// Exact maximum sequence length by memoized subset DFS (legality of extending
// depends only on the set of chosen vertices, so order can be forgotten).
GrundyResult grundy_number(const Graph& g, SequenceKind kind,
                           int limit = kDefaultGrundyLimit);

// All vertex sets realized by maximum-length sequences, deduplicated, sorted.
std::vector<VertexSet> all_max_grundy_sets(const Graph& g, SequenceKind kind,
                                           int limit = kDefaultFamilyLimit);

// A maximum-length sequence whose vertex set contains x, built from one
// maximum sequence by the reversal construction (Closed/Open/Z) or the
// replacement construction (L). For kinds Z and Open, x must not be isolated.
DominationSequence sequence_containing(const Graph& g, SequenceKind kind, int x,
                                       int limit = kDefaultGrundyLimit);

}  // namespace zfgd
