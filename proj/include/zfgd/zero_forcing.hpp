#pragma once

#include "zfgd/graph.hpp"

namespace zfgd {

// One run of the forcing process. Events are chronological (forcer, forced)
// pairs; `complete` records whether the closure reached all of V. Chains
// follow the events: every initial vertex starts one, unforced initial
// vertices that force nothing are singletons. When the closure is complete
// the chains partition V and each induces a path.
struct ForcingTrace {
    VertexSet initial;
    std::vector<std::pair<int, int>> events;
    VertexSet final_active;
    bool complete = false;
    std::vector<std::vector<int>> chains;
};

struct ZeroForcingResult {
    int z = 0;
    VertexSet witness;                  // one minimum zero forcing set
    std::vector<VertexSet> min_sets;    // all of them, when n <= family limit
    bool family_computed = false;
};

inline constexpr int kDefaultZfLimit = 18;
inline constexpr int kDefaultZfFamilyLimit = 14;

// Runs forcing to a fixpoint. The lowest-index eligible forcer fires first,
// so traces are reproducible; the final active set is order-independent.
ForcingTrace close(const Graph& g, const VertexSet& s);

std::vector<std::vector<int>> forcing_chains(const Graph& g,
                                             const ForcingTrace& trace);

bool is_zero_forcing_set(const Graph& g, const VertexSet& s);

// Exact Z(G) by increasing-cardinality subset search; on forests the search
// starts at the path cover number, which is a lower bound that is always met.
ZeroForcingResult min_zero_forcing(const Graph& g, int limit = kDefaultZfLimit,
                                   int family_limit = kDefaultZfFamilyLimit);

}  // namespace zfgd
