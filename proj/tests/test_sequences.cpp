#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "zfgd/enumeration.hpp"
#include "zfgd/sequences.hpp"
#include "zfgd/zero_forcing.hpp"

using namespace zfgd;

namespace {
const SequenceKind kAllKinds[] = {SequenceKind::Closed, SequenceKind::Open,
                                  SequenceKind::Z, SequenceKind::L};
}

TEST_CASE("validate computes footprints") {
    Graph p4 = oracle::path_graph(4);
    DominationSequence s = validate(p4, SequenceKind::Closed, {0, 3});
    CHECK(s.steps[0] == VertexSet{0, 1});
    CHECK(s.steps[1] == VertexSet{2, 3});
    CHECK(s.covered == VertexSet{0, 1, 2, 3});

    SUBCASE("containment makes the second step illegal") {
        try {
            validate(p4, SequenceKind::Closed, {1, 0});
            FAIL("expected SequenceError");
        } catch (const SequenceError& e) {
            CHECK(e.index == 1);
        }
    }
    SUBCASE("open twins cannot follow each other in an open sequence") {
        try {
            validate(oracle::path_graph(3), SequenceKind::Open, {0, 2});
            FAIL("expected SequenceError");
        } catch (const SequenceError& e) {
            CHECK(e.index == 1);
        }
    }
    SUBCASE("duplicates rejected") {
        CHECK_THROWS_AS(validate(p4, SequenceKind::Closed, {0, 0}),
                        SequenceError);
    }
}

TEST_CASE("grundy numbers match the brute-force oracle on all graphs n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : oracle::all_labeled_graphs(n)) {
            for (SequenceKind kind : kAllKinds) {
                auto census = oracle::enumerate_sequences(g, kind);
                GrundyResult res = grundy_number(g, kind);
                CHECK(res.value == census.max_len);
                CHECK(res.witness.length() == res.value);
                // the witness itself re-validates (validate ran inside), and
                // its set must be one of the oracle's maximum sets
                if (res.value > 0)
                    CHECK(census.max_sets.count(res.witness.vertex_set()) == 1);
            }
        }
    }
}

TEST_CASE("grundy numbers on named instances") {
    CHECK(grundy_number(parse_edge_list("3\n"), SequenceKind::Z).value == 0);
    CHECK(grundy_number(oracle::cycle_graph(5), SequenceKind::Open).value == 4);
    // oracle values frozen from the exhaustive sequence enumeration
    Graph p4 = oracle::path_graph(4);
    CHECK(grundy_number(p4, SequenceKind::Closed).value == 3);
    CHECK(grundy_number(p4, SequenceKind::Open).value == 4);
    CHECK(grundy_number(p4, SequenceKind::Z).value == 3);
    CHECK(grundy_number(p4, SequenceKind::L).value == 4);
    Graph s22 = oracle::double_star(2, 2);
    CHECK(grundy_number(s22, SequenceKind::Closed).value == 5);
    CHECK(grundy_number(s22, SequenceKind::Open).value == 4);
    CHECK(grundy_number(s22, SequenceKind::Z).value == 4);
    CHECK(grundy_number(s22, SequenceKind::L).value == 6);
    CHECK_THROWS_AS(grundy_number(p4, SequenceKind::Closed, 3), LimitError);
}

TEST_CASE("all_max_grundy_sets matches the oracle on all graphs n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        for (const Graph& g : oracle::all_labeled_graphs(n)) {
            for (SequenceKind kind : kAllKinds) {
                auto census = oracle::enumerate_sequences(g, kind);
                auto family = all_max_grundy_sets(g, kind);
                std::set<VertexSet> got(family.begin(), family.end());
                CHECK(got.size() == family.size());
                CHECK(got == census.max_sets);
            }
        }
    }
}

TEST_CASE("all_max_grundy_sets on named instances") {
    auto p3_open = all_max_grundy_sets(oracle::path_graph(3), SequenceKind::Open);
    CHECK(p3_open == std::vector<VertexSet>{{0, 1}, {1, 2}});

    // S(2,2): 0,1 centers; 2,3 leaves on 0; 4,5 leaves on 1. The vertices of
    // any P4 through both centers form a maximum Z-set.
    auto s22_z = all_max_grundy_sets(oracle::double_star(2, 2), SequenceKind::Z);
    std::set<VertexSet> z_sets(s22_z.begin(), s22_z.end());
    CHECK(z_sets.count({0, 1, 2, 4}) == 1);
    CHECK(z_sets ==
          std::set<VertexSet>{{0, 1, 2, 4}, {0, 1, 2, 5}, {0, 1, 3, 4},
                              {0, 1, 3, 5}});

    auto empty_closed =
        all_max_grundy_sets(parse_edge_list("3\n"), SequenceKind::Closed);
    CHECK(empty_closed == std::vector<VertexSet>{{0, 1, 2}});
}

TEST_CASE("sequence_containing") {
    Graph p4 = oracle::path_graph(4);
    SUBCASE("member of the first witness returned unchanged") {
        GrundyResult base = grundy_number(p4, SequenceKind::Closed);
        int x = base.witness.order[0];
        DominationSequence s = sequence_containing(p4, SequenceKind::Closed, x);
        CHECK(s.order == base.witness.order);
    }
    SUBCASE("Z-sequence through a chosen vertex") {
        for (int x = 0; x < 4; ++x) {
            DominationSequence s = sequence_containing(p4, SequenceKind::Z, x);
            CHECK(s.length() == 3);  // gamma_gr^Z(P4) = n - Z = 3
            VertexSet set = s.vertex_set();
            CHECK(std::binary_search(set.begin(), set.end(), x));
        }
    }
    SUBCASE("C5 open: one maximum sequence per vertex, union covers V") {
        Graph c5 = oracle::cycle_graph(5);
        VertexSet seen;
        for (int x = 0; x < 5; ++x) {
            DominationSequence s = sequence_containing(c5, SequenceKind::Open, x);
            CHECK(s.length() == 4);
            VertexSet set = s.vertex_set();
            CHECK(std::binary_search(set.begin(), set.end(), x));
            for (int v : set) seen.push_back(v);
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        CHECK(seen == VertexSet{0, 1, 2, 3, 4});
    }
    SUBCASE("isolated vertices rejected for kinds Z and Open") {
        Graph g = parse_edge_list("3\n0 1");
        CHECK_THROWS_AS(sequence_containing(g, SequenceKind::Z, 2), Error);
        CHECK_THROWS_AS(sequence_containing(g, SequenceKind::Open, 2), Error);
        // but fine for Closed and L
        CHECK(sequence_containing(g, SequenceKind::Closed, 2).length() ==
              grundy_number(g, SequenceKind::Closed).value);
        CHECK(sequence_containing(g, SequenceKind::L, 2).length() ==
              grundy_number(g, SequenceKind::L).value);
    }
    SUBCASE("every vertex of every small graph, all kinds") {
        for (int n = 1; n <= 5; ++n) {
            for (const Graph& g : oracle::all_labeled_graphs(n)) {
                for (SequenceKind kind : kAllKinds) {
                    int gamma = grundy_number(g, kind).value;
                    for (int x = 0; x < g.n; ++x) {
                        bool needs_neighbor = kind == SequenceKind::Z ||
                                              kind == SequenceKind::Open;
                        if (needs_neighbor && g.degree(x) == 0) continue;
                        DominationSequence s = sequence_containing(g, kind, x);
                        CHECK(s.length() == gamma);
                        VertexSet set = s.vertex_set();
                        CHECK(std::binary_search(set.begin(), set.end(), x));
                    }
                }
            }
        }
    }
}

TEST_CASE("union of all maximum sets (n <= 5)") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : oracle::all_labeled_graphs(n)) {
            VertexSet non_isolated, all;
            for (int v = 0; v < n; ++v) {
                all.push_back(v);
                if (g.degree(v) > 0) non_isolated.push_back(v);
            }
            for (SequenceKind kind : kAllKinds) {
                VertexSet covered;
                for (const auto& set : all_max_grundy_sets(g, kind))
                    for (int v : set) covered.push_back(v);
                std::sort(covered.begin(), covered.end());
                covered.erase(std::unique(covered.begin(), covered.end()),
                              covered.end());
                bool closed_kind = kind == SequenceKind::Closed ||
                                   kind == SequenceKind::L;
                CHECK(covered == (closed_kind ? all : non_isolated));
            }
        }
    }
}

TEST_CASE("zero forcing duality on all graphs n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : oracle::all_labeled_graphs(n))
            CHECK(grundy_number(g, SequenceKind::Z).value ==
                  g.n - min_zero_forcing(g).z);
}

TEST_CASE("prefixes of legal sequences stay legal") {
    std::mt19937 rng(23);
    for (int round = 0; round < 60; ++round) {
        int n = 2 + rng() % 6;
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        SequenceKind kind = kAllKinds[rng() % 4];
        auto order = grundy_number(g, kind).witness.order;
        for (size_t len = 0; len <= order.size(); ++len) {
            std::vector<int> prefix(order.begin(), order.begin() + len);
            CHECK_NOTHROW(validate(g, kind, prefix));
        }
    }
}

TEST_CASE("L-footprints: at most twice, first by itself") {
    std::mt19937 rng(29);
    for (int round = 0; round < 80; ++round) {
        int n = 2 + rng() % 6;
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        DominationSequence s = grundy_number(g, SequenceKind::L).witness;
        std::map<int, std::vector<int>> footprinted_at;
        for (int i = 0; i < s.length(); ++i)
            for (int v : s.steps[i]) footprinted_at[v].push_back(i);
        for (const auto& [v, positions] : footprinted_at) {
            CHECK(positions.size() <= 2);
            if (positions.size() == 2) CHECK(s.order[positions[0]] == v);
        }
    }
}

TEST_CASE("union of all maximum sets, sampled n = 7") {
    std::mt19937 rng(31);
    for (int round = 0; round < 400; ++round) {
        int n = 7;
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        VertexSet non_isolated, all;
        for (int v = 0; v < n; ++v) {
            all.push_back(v);
            if (g.degree(v) > 0) non_isolated.push_back(v);
        }
        for (SequenceKind kind : kAllKinds) {
            VertexSet covered;
            for (const auto& set : all_max_grundy_sets(g, kind, n))
                for (int v : set) covered.push_back(v);
            std::sort(covered.begin(), covered.end());
            covered.erase(std::unique(covered.begin(), covered.end()),
                          covered.end());
            bool closed_kind =
                kind == SequenceKind::Closed || kind == SequenceKind::L;
            CHECK(covered == (closed_kind ? all : non_isolated));
        }
    }
}

TEST_CASE("forests without isolated vertices have full L-grundy number") {
    for (int n = 2; n <= 12; ++n)
        for (const Graph& f : forests(n, 2))
            CHECK(grundy_number(f, SequenceKind::L).value == f.n);
}

TEST_CASE("removing an open twin preserves the open grundy number") {
    for (int n = 2; n <= 10; ++n) {
        for (const Graph& f : forests(n, 1)) {
            for (const auto& cls : open_twin_classes(f)) {
                if (cls.size() < 2) continue;
                Subgraph reduced = remove(f, {cls[0]}, {});
                CHECK(grundy_number(f, SequenceKind::Open).value ==
                      grundy_number(reduced.graph, SequenceKind::Open).value);
            }
        }
    }
}
