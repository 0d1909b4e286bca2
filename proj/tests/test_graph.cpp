#include "tdc/edgelist.hpp"
#include "tdc/families.hpp"
#include "tdc/graph.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace tdc;

TEST_CASE("builder constructs a simple graph") {
    GraphBuilder b(4);
    b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 3);
    Graph g = b.build();

    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("builder rejects bad edges") {
    GraphBuilder b(3);
    CHECK_THROWS(b.add_edge(0, 0));
    CHECK_THROWS(b.add_edge(0, 3));
    CHECK_THROWS(b.add_edge(-1, 1));
}

TEST_CASE("duplicate edges are idempotent") {
    GraphBuilder b(3);
    b.add_edge(0, 1).add_edge(1, 0).add_edge(0, 1);
    CHECK(b.build().size() == 1);
}

TEST_CASE("induced subgraph keeps the requested vertices") {
    Graph c5 = generate({Family::Cycle, 5});
    auto sub = induced_subgraph(c5, {0, 1, 2, 4});
    CHECK(sub.graph.order() == 4);
    CHECK(sub.graph.size() == 3); // 0-1, 1-2, 4-0
    CHECK(sub.to_parent == std::vector<int>{0, 1, 2, 4});
}

TEST_CASE("connected components are ordered by smallest member") {
    GraphBuilder b(6);
    b.add_edge(4, 5).add_edge(0, 2);
    Graph g = b.build();
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == std::vector<int>{0, 2});
    CHECK(comps[1] == std::vector<int>{1});
    CHECK(comps[2] == std::vector<int>{3});
    CHECK(comps[3] == std::vector<int>{4, 5});
}

TEST_CASE("diameter matches a BFS oracle") {
    CHECK(diameter(generate({Family::Path, 4})) == 3);
    CHECK(diameter(generate({Family::Cycle, 6})) == 3);
    CHECK(diameter(generate({Family::Complete, 5})) == 1);

    GraphBuilder b(4);
    b.add_edge(0, 1).add_edge(2, 3);
    CHECK_FALSE(diameter(b.build()).has_value());

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = oracle::random_connected_graph(7, seed);
        CHECK(diameter(g) == oracle::bfs_diameter(g));
    }
}

TEST_CASE("double star with two inner spokes has diameter four") {
    // leaf - spoke - center - spoke - leaf is a shortest path of length 4
    Graph ds = generate({Family::DoubleStar, 2});
    CHECK(ds.order() == 5);
    CHECK(diameter(ds) == 4);
    CHECK(oracle::bfs_diameter(ds) == 4);
}

TEST_CASE("classification predicates") {
    CHECK(is_complete(generate({Family::Complete, 4})));
    CHECK_FALSE(is_complete(generate({Family::Cycle, 4})));

    CHECK(is_complete_bipartite(generate({Family::Star, 5})));
    CHECK(is_complete_bipartite(generate({Family::Cycle, 4}))); // K_{2,2}
    CHECK_FALSE(is_complete_bipartite(generate({Family::Cycle, 6})));
    CHECK_FALSE(is_complete_bipartite(generate({Family::Complete, 3})));

    CHECK(is_tree(generate({Family::Path, 6})));
    CHECK(is_tree(generate({Family::Star, 4})));
    CHECK_FALSE(is_tree(generate({Family::Cycle, 5})));
}

TEST_CASE("disjoint union shifts the second operand") {
    Graph u = disjoint_union(generate({Family::Path, 3}), generate({Family::Cycle, 3}));
    CHECK(u.order() == 6);
    CHECK(u.size() == 5);
    CHECK(u.adjacent(3, 4));
    CHECK_FALSE(u.adjacent(2, 3));
    CHECK(connected_components(u).size() == 2);
}

TEST_CASE("degree extremes") {
    Graph star = generate({Family::Star, 5});
    auto [lo, hi] = degree_extremes(star);
    CHECK(lo == 1);
    CHECK(hi == 5);
    CHECK_THROWS(degree_extremes(Graph{}));
}

TEST_CASE("edge list round trip") {
    Graph g = generate({Family::Wheel, 5});
    std::stringstream buf;
    write_edge_list(buf, g);
    Graph back = parse_edge_list(buf);
    CHECK(back.order() == g.order());
    CHECK(back.edges() == g.edges());
}

TEST_CASE("edge list parsing details") {
    std::istringstream in("# comment\norder 4\n0 1\n\n2 3\n");
    Graph g = parse_edge_list(in);
    CHECK(g.order() == 4);
    CHECK(g.size() == 2);

    std::istringstream one("order 3\n1 2\n2 3\n");
    Graph g1 = parse_edge_list(one, /*one_indexed=*/true);
    CHECK(g1.order() == 3);
    CHECK(g1.adjacent(0, 1));
    CHECK(g1.adjacent(1, 2));

    // without a header the order grows to fit the endpoints
    std::istringstream open("0 5\n");
    CHECK(parse_edge_list(open).order() == 6);

    std::istringstream bad("order 4\n0 5\n");
    CHECK_THROWS(parse_edge_list(bad));
}
