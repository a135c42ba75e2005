#include <doctest.h>

#include <algorithm>

#include "ccfc/gadgets.hpp"
#include "ccfc/graph.hpp"
#include "ccfc/oracles.hpp"

using namespace ccfc;

namespace {

Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    return Graph::build(n, edges);
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::build(n, edges);
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("build validates and stores") {
    Graph tri = Graph::build(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(tri.vertex_count() == 3);
    CHECK(tri.edge_count() == 3);
    CHECK(girth(tri) == 3);

    Graph single = Graph::build(1, {});
    CHECK(girth(single) == kInfinity);

    Graph c5 = Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, {{"x", 0}});
    CHECK(c5.landmark("x") == 0);
    CHECK(girth(c5) == 5);

    CHECK_THROWS_AS(Graph::build(2, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph::build(2, {{0, 3}}), Error);
    CHECK_THROWS_AS(Graph::build(2, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph::build(2, {{0, 1}}, {{"x", 5}}), Error);
    CHECK_THROWS_AS(c5.landmark("nope"), Error);
}

TEST_CASE("distance") {
    Graph c7 = cycle_graph(7);
    CHECK(distance(c7, 0, 3) == 3);
    CHECK(distance(c7, 0, 4) == 3);
    CHECK(distance(c7, 2, 2) == 0);
    Graph two = Graph::build(4, {{0, 1}, {2, 3}});
    CHECK(distance(two, 0, 3) == kInfinity);
    CHECK_THROWS_AS(distance(two, 0, 9), Error);
}

TEST_CASE("distance is a metric per component") {
    std::uint64_t state = 17;
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = oracle::random_graph(state, 9, 14);
        int n = g.vertex_count();
        std::vector<std::vector<int>> dist;
        for (int v = 0; v < n; ++v) dist.push_back(bfs_distances(g, v));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                CHECK(dist[a][b] == dist[b][a]);
                for (int c = 0; c < n; ++c) {
                    if (dist[a][b] == kInfinity || dist[b][c] == kInfinity) continue;
                    CHECK(dist[a][c] <= dist[a][b] + dist[b][c]);
                }
            }
    }
}

TEST_CASE("girth on trees and gadget pins") {
    Graph tree = path_graph(6);
    CHECK(girth(tree) == kInfinity);
    CHECK(girth(build_devos_wheel(5)) == 7);
    CHECK(girth(build_hp(5)) == 5);
}

TEST_CASE("cycle spectrum basics") {
    CHECK(cycle_spectrum(cycle_graph(9), 20).present_lengths == std::set<int>{9});
    CHECK(cycle_spectrum(path_graph(5), 10).present_lengths.empty());
    CHECK_THROWS_AS(cycle_spectrum(cycle_graph(5), 2), Error);
    Graph k5 = Graph::build(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                                {2, 3}, {2, 4}, {3, 4}});
    CHECK_THROWS_AS(cycle_spectrum(k5, 5, 3), Error);  // budget runs out
}

TEST_CASE("cycle spectrum matches edge-subset enumeration") {
    std::uint64_t state = 99;
    int compared = 0;
    while (compared < 30) {
        Graph g = oracle::random_graph(state, 10, 15);
        ++compared;
        auto expected = oracle::cycle_lengths_by_edge_subsets(g);
        auto got = cycle_spectrum(g, std::max(3, g.vertex_count())).present_lengths;
        CHECK(got == expected);
        if (!expected.empty()) CHECK(girth(g) == *expected.begin());
        else CHECK(girth(g) == kInfinity);
    }
}

TEST_CASE("two-connectivity") {
    CHECK(is_two_connected(cycle_graph(5)));
    CHECK_FALSE(is_two_connected(path_graph(3)));
    CHECK_FALSE(is_two_connected(Graph::build(4, {{0, 1}, {2, 3}})));
    CHECK_FALSE(is_two_connected(Graph::build(2, {{0, 1}})));
    CHECK(is_two_connected(build_devos_wheel(5)));
    // two triangles sharing a vertex
    Graph bowtie = Graph::build(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    CHECK_FALSE(is_two_connected(bowtie));
}

TEST_CASE("induced subgraph and vertex removal") {
    Graph c5 = cycle_graph(5);
    Graph sub = induced_subgraph(c5, {0, 1, 2});
    CHECK(sub.vertex_count() == 3);
    CHECK(sub.edge_count() == 2);
    Graph removed = remove_vertex(c5, 4);
    CHECK(removed.vertex_count() == 4);
    CHECK(removed.edge_count() == 3);
    CHECK(distance(removed, 0, 3) == 3);
}

TEST_SUITE_END();
