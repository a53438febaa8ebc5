#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zfgd/graph.hpp"

using namespace zfgd;

TEST_CASE("edge list parsing") {
    Graph p2 = parse_edge_list("2\n0 1");
    CHECK(p2.n == 2);
    CHECK(p2.edge_count() == 1);
    CHECK(p2.has_edge(0, 1));

    Graph empty3 = parse_edge_list("3\n");
    CHECK(empty3.n == 3);
    CHECK(empty3.edge_count() == 0);

    Graph p4 = parse_edge_list("4\n0 1\n1 2\n2 3");
    CHECK(p4.edge_count() == 3);
    CHECK(p4.degree(0) == 1);
    CHECK(p4.degree(1) == 2);

    SUBCASE("comments, blanks and duplicates") {
        Graph g = parse_edge_list("# header\n\n3\n0 1 # edge\n0 1\n1 2\n");
        CHECK(g.edge_count() == 2);
    }
}

TEST_CASE("edge list errors carry line numbers") {
    CHECK_THROWS_AS(parse_edge_list("2\n0 5"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2\n1 1"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2\n0 x"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("#only comments"), ParseError);
    try {
        parse_edge_list("# c\n3\n0 1\n0 3\n");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }
    try {
        parse_edge_list("3\n2 2\n");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("graph6 decoding matches the independent encoder") {
    Graph a = parse_graph6("A_");
    CHECK(a.n == 2);
    CHECK(a.has_edge(0, 1));  // P2

    Graph e5 = parse_graph6("D??");
    CHECK(e5.n == 5);
    CHECK(e5.edge_count() == 0);

    SUBCASE("exhaustive round-trip on all 4-vertex graphs") {
        for (const Graph& g : oracle::all_labeled_graphs(4)) {
            std::string word = oracle::graph6_encode(g);
            Graph back = parse_graph6(word);
            CHECK(back.n == g.n);
            CHECK(back.edges() == g.edges());
            CHECK(to_graph6(back) == word);
        }
    }
    SUBCASE("round-trip identity on all graphs with n <= 5") {
        for (int n = 0; n <= 5; ++n)
            for (const Graph& g : oracle::all_labeled_graphs(n)) {
                CHECK(parse_graph6(to_graph6(g)).edges() == g.edges());
            }
    }
    SUBCASE("bad words rejected") {
        CHECK_THROWS_AS(parse_graph6(""), ParseError);
        CHECK_THROWS_AS(parse_graph6("A"), ParseError);    // missing bits
        CHECK_THROWS_AS(parse_graph6("A_~"), ParseError);  // too long
        CHECK_THROWS_AS(parse_graph6("~??"), ParseError);  // long form
        CHECK_THROWS_AS(parse_graph6(std::string("A") + char(20)), ParseError);
    }
}

TEST_CASE("components") {
    CHECK(components(parse_edge_list("3\n")).size() == 3);
    CHECK(components(oracle::path_graph(4)).size() == 1);
    Graph k3k1 = parse_edge_list("4\n0 1\n1 2\n0 2");
    auto comps = components(k3k1);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0, 1, 2});
    CHECK(comps[1] == VertexSet{3});
}

TEST_CASE("vertex classification") {
    Graph k13 = oracle::star_graph(3);
    auto c = classify_vertices(k13);
    CHECK(c.strong_support[0]);
    CHECK(c.leaf_count == 3);
    CHECK(c.isolated_count == 0);

    auto p3 = classify_vertices(oracle::path_graph(3));
    CHECK(p3.strong_support[1]);

    auto p4 = classify_vertices(oracle::path_graph(4));
    CHECK(p4.support[1]);
    CHECK(p4.support[2]);
    CHECK_FALSE(p4.strong_support[1]);
    CHECK_FALSE(p4.strong_support[2]);
}

TEST_CASE("tree center") {
    CHECK(tree_center(oracle::path_graph(5), 0) == VertexSet{2});
    CHECK(tree_center(oracle::path_graph(4), 3) == VertexSet{1, 2});
    CHECK(tree_center(oracle::star_graph(4), 2) == VertexSet{0});
    CHECK_THROWS_AS(tree_center(oracle::cycle_graph(4), 0), Error);

    SUBCASE("center of P_n has size 2 - (n mod 2)") {
        for (int n = 2; n <= 9; ++n) {
            auto c = tree_center(oracle::path_graph(n), 0);
            CHECK(static_cast<int>(c.size()) == 2 - (n % 2));
            if (c.size() == 2)
                CHECK(oracle::path_graph(n).has_edge(c[0], c[1]));
        }
    }
}

TEST_CASE("open twin classes") {
    auto k13 = open_twin_classes(oracle::star_graph(3));
    REQUIRE(k13.size() == 2);
    CHECK(k13[0] == VertexSet{0});
    CHECK(k13[1] == VertexSet{1, 2, 3});

    auto h = open_twin_classes(oracle::c5_with_open_twin());
    bool found_twin_pair = false;
    for (const auto& cls : h)
        if (cls == VertexSet{0, 5}) found_twin_pair = true;
    CHECK(found_twin_pair);

    CHECK(open_twin_classes(oracle::path_graph(4)).size() == 4);

    SUBCASE("partition and non-adjacency on random graphs") {
        std::mt19937 rng(7);
        for (int round = 0; round < 50; ++round) {
            int n = 2 + rng() % 8;
            std::vector<Edge> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() % 3 == 0) edges.emplace_back(u, v);
            Graph g = Graph::from_edges(n, edges);
            auto classes = open_twin_classes(g);
            int total = 0;
            for (const auto& cls : classes) {
                total += static_cast<int>(cls.size());
                for (size_t i = 0; i < cls.size(); ++i)
                    for (size_t j = i + 1; j < cls.size(); ++j) {
                        CHECK(g.adj[cls[i]] == g.adj[cls[j]]);
                        CHECK_FALSE(g.has_edge(cls[i], cls[j]));
                    }
            }
            CHECK(total == n);
        }
    }
}

TEST_CASE("remove vertices and edges") {
    Graph p5 = oracle::path_graph(5);
    Subgraph r = remove(p5, {2}, {});
    CHECK(r.graph.n == 4);
    CHECK(r.graph.edge_count() == 2);  // P2 + P2
    CHECK(components(r.graph).size() == 2);
    CHECK(r.to_old[r.to_new[4]] == 4);
    CHECK(r.to_new[2] == -1);

    Subgraph s = remove(oracle::path_graph(4), {}, {{1, 2}});
    CHECK(s.graph.edge_count() == 2);
    CHECK(components(s.graph).size() == 2);

    Graph k3 = oracle::complete_graph(3);
    Subgraph t = remove(k3, {}, {{0, 1}});
    CHECK(t.graph.edge_count() == 2);  // P3
    CHECK(is_tree(t.graph));

    CHECK_THROWS_AS(remove(p5, {9}, {}), Error);
    CHECK_THROWS_AS(remove(p5, {}, {{0, 4}}), Error);
}

TEST_CASE("degree sum equals twice the edge count") {
    std::mt19937 rng(11);
    for (int round = 0; round < 40; ++round) {
        int n = 1 + rng() % 10;
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        int deg_sum = 0;
        for (int v = 0; v < n; ++v) deg_sum += g.degree(v);
        CHECK(deg_sum == 2 * g.edge_count());
        if (g.has_masks())
            for (int v = 0; v < n; ++v)
                CHECK(std::popcount(g.mask[v]) == g.degree(v));
    }
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), Error);
}
