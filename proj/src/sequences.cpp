#include "zfgd/sequences.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace zfgd {

namespace {

// definer(v): the set a step claims from; coverer(v): what a chosen vertex
// adds to the covered union.
struct KindMasks {
    std::vector<uint64_t> definer;
    std::vector<uint64_t> coverer;
};

KindMasks kind_masks(const Graph& g, SequenceKind kind) {
    KindMasks km;
    km.definer.resize(g.n);
    km.coverer.resize(g.n);
    for (int v = 0; v < g.n; ++v) {
        uint64_t open = g.mask[v];
        uint64_t closed = open | (uint64_t{1} << v);
        switch (kind) {
            case SequenceKind::Closed:
                km.definer[v] = closed;
                km.coverer[v] = closed;
                break;
            case SequenceKind::Open:
                km.definer[v] = open;
                km.coverer[v] = open;
                break;
            case SequenceKind::Z:
                km.definer[v] = open;
                km.coverer[v] = closed;
                break;
            case SequenceKind::L:
                km.definer[v] = closed;
                km.coverer[v] = open;
                break;
        }
    }
    return km;
}

VertexSet mask_to_set(uint64_t m) {
    VertexSet out;
    while (m) {
        int v = std::countr_zero(m);
        out.push_back(v);
        m &= m - 1;
    }
    return out;
}

void require_masks(const Graph& g, int limit, const char* what) {
    if (g.n > limit)
        throw LimitError(std::string(what) + ": n=" + std::to_string(g.n) +
                         " exceeds search limit " + std::to_string(limit));
}

struct SubsetSearch {
    const KindMasks km;
    int n;
    std::vector<int8_t> best;  // best[mask]: max extra length from chosen set

    SubsetSearch(const Graph& g, SequenceKind kind)
        : km(kind_masks(g, kind)), n(g.n), best(size_t{1} << g.n, -1) {}

    int8_t run(uint64_t chosen, uint64_t covered) {
        int8_t& memo = best[chosen];
        if (memo >= 0) return memo;
        int8_t value = 0;
        for (int v = 0; v < n; ++v) {
            if ((chosen >> v) & 1) continue;
            if (km.definer[v] & ~covered) {
                int8_t sub = run(chosen | (uint64_t{1} << v),
                                 covered | km.coverer[v]);
                value = std::max<int8_t>(value, int8_t(1 + sub));
            }
        }
        memo = value;
        return value;
    }
};

}  // namespace

const char* kind_name(SequenceKind kind) {
    switch (kind) {
        case SequenceKind::Closed: return "closed";
        case SequenceKind::Open: return "open";
        case SequenceKind::Z: return "z";
        case SequenceKind::L: return "l";
    }
    return "?";
}

SequenceKind kind_from_name(const std::string& name) {
    if (name == "closed") return SequenceKind::Closed;
    if (name == "open") return SequenceKind::Open;
    if (name == "z") return SequenceKind::Z;
    if (name == "l") return SequenceKind::L;
    throw Error("unknown sequence kind '" + name + "'");
}

SequenceError::SequenceError(const std::string& msg, int idx)
    : Error(msg), index(idx) {}

VertexSet DominationSequence::vertex_set() const {
    VertexSet s = order;
    std::sort(s.begin(), s.end());
    return s;
}

DominationSequence validate(const Graph& g, SequenceKind kind,
                            const std::vector<int>& order) {
    const bool definer_closed =
        kind == SequenceKind::Closed || kind == SequenceKind::L;
    const bool coverer_closed =
        kind == SequenceKind::Closed || kind == SequenceKind::Z;
    std::vector<char> chosen(g.n, 0);
    std::vector<char> covered(g.n, 0);
    DominationSequence seq;
    seq.kind = kind;
    seq.order = order;
    for (size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        g.check_vertex(v);
        if (chosen[v])
            throw SequenceError("duplicate vertex " + std::to_string(v) +
                                    " at position " + std::to_string(i),
                                static_cast<int>(i));
        chosen[v] = 1;
        VertexSet step;
        if (definer_closed && !covered[v]) step.push_back(v);
        for (int u : g.adj[v])
            if (!covered[u]) step.push_back(u);
        std::sort(step.begin(), step.end());
        if (step.empty())
            throw SequenceError("illegal step at position " + std::to_string(i) +
                                    ": vertex " + std::to_string(v) +
                                    " footprints nothing new",
                                static_cast<int>(i));
        if (coverer_closed) covered[v] = 1;
        for (int u : g.adj[v]) covered[u] = 1;
        seq.steps.push_back(std::move(step));
    }
    for (int v = 0; v < g.n; ++v)
        if (covered[v]) seq.covered.push_back(v);
    return seq;
}

GrundyResult grundy_number(const Graph& g, SequenceKind kind, int limit) {
    require_masks(g, std::min(limit, 25), "grundy_number");
    SubsetSearch search(g, kind);
    int value = search.run(0, 0);
    // reconstruct one witness: repeatedly take the smallest legal vertex that
    // preserves the remaining value
    std::vector<int> order;
    uint64_t chosen = 0, covered = 0;
    for (int remaining = value; remaining > 0; --remaining) {
        for (int v = 0; v < g.n; ++v) {
            if ((chosen >> v) & 1) continue;
            if (!(search.km.definer[v] & ~covered)) continue;
            uint64_t next = chosen | (uint64_t{1} << v);
            if (search.best[next] == remaining - 1) {
                order.push_back(v);
                chosen = next;
                covered |= search.km.coverer[v];
                break;
            }
        }
    }
    assert(static_cast<int>(order.size()) == value);
    GrundyResult res;
    res.kind = kind;
    res.value = value;
    res.witness = validate(g, kind, order);
    return res;
}

std::vector<VertexSet> all_max_grundy_sets(const Graph& g, SequenceKind kind,
                                           int limit) {
    require_masks(g, std::min(limit, 25), "all_max_grundy_sets");
    KindMasks km = kind_masks(g, kind);
    size_t total = size_t{1} << g.n;
    std::vector<char> reachable(total, 0);
    reachable[0] = 1;
    int best = 0;
    for (uint64_t set = 0; set < total; ++set) {
        if (!reachable[set]) continue;
        best = std::max(best, std::popcount(set));
        uint64_t covered = 0;
        for (uint64_t rest = set; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            covered |= km.coverer[v];
        }
        for (int v = 0; v < g.n; ++v) {
            if ((set >> v) & 1) continue;
            if (km.definer[v] & ~covered)
                reachable[set | (uint64_t{1} << v)] = 1;
        }
    }
    std::vector<VertexSet> family;
    for (uint64_t set = 0; set < total; ++set)
        if (reachable[set] && std::popcount(set) == best)
            family.push_back(mask_to_set(set));
    return family;
}

namespace {

// Reversal construction shared by kinds Closed, Open and Z: replace each
// sequence vertex by one vertex it footprints (x at its footprinter's slot)
// and reverse.
DominationSequence reverse_construction(const Graph& g,
                                        const DominationSequence& max_seq,
                                        int x) {
    int k = max_seq.length();
    int footprint_pos = -1;
    for (int i = 0; i < k && footprint_pos < 0; ++i)
        if (std::binary_search(max_seq.steps[i].begin(), max_seq.steps[i].end(),
                               x))
            footprint_pos = i;
    if (footprint_pos < 0)
        throw Error("vertex " + std::to_string(x) +
                    " is not footprinted by the maximum sequence");
    std::vector<int> replaced(k);
    for (int i = 0; i < k; ++i)
        replaced[i] = (i == footprint_pos) ? x : max_seq.steps[i][0];
    std::reverse(replaced.begin(), replaced.end());
    return validate(g, max_seq.kind, replaced);
}

// Replacement construction for kind L: swap x into the slot of the last
// vertex that footprints inside N(x).
DominationSequence l_construction(const Graph& g,
                                  const DominationSequence& max_seq, int x) {
    int k = max_seq.length();
    int last = -1;
    for (int i = 0; i < k; ++i)
        for (int u : g.adj[x])
            if (std::binary_search(max_seq.steps[i].begin(),
                                   max_seq.steps[i].end(), u))
                last = std::max(last, i);
    if (last < 0)
        throw Error("no step footprints a neighbor of " + std::to_string(x));
    std::vector<int> order = max_seq.order;
    order[last] = x;
    return validate(g, SequenceKind::L, order);
}

}  // namespace

DominationSequence sequence_containing(const Graph& g, SequenceKind kind, int x,
                                       int limit) {
    g.check_vertex(x);
    if ((kind == SequenceKind::Z || kind == SequenceKind::Open) &&
        g.degree(x) == 0)
        throw Error("vertex " + std::to_string(x) +
                    " is isolated; no " + kind_name(kind) +
                    "-sequence can contain it");
    GrundyResult base = grundy_number(g, kind, limit);
    const DominationSequence& s = base.witness;
    if (std::find(s.order.begin(), s.order.end(), x) != s.order.end()) return s;
    DominationSequence out = (kind == SequenceKind::L)
                                 ? l_construction(g, s, x)
                                 : reverse_construction(g, s, x);
    assert(out.length() == base.value);
    return out;
}

}  // namespace zfgd
