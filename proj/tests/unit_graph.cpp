#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "prodcolor/graph.hpp"
#include "prodcolor/product.hpp"

using namespace prodcolor;

TEST_CASE("constructor validates and normalizes") {
    Graph g(3, {{1, 0}, {0, 1}, {2, 1}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);  // duplicates collapse, orientation normalized
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
}

TEST_CASE("basic families") {
    CHECK(path(1).edge_count() == 0);
    CHECK(path(5).edge_count() == 4);
    CHECK(cycle(3).edge_count() == 3);
    CHECK(cycle(6).edge_count() == 6);
    CHECK(complete(4).edge_count() == 6);
    CHECK(complete(1).edge_count() == 0);
    CHECK(hypercube(0).vertex_count() == 1);
    CHECK(hypercube(3).vertex_count() == 8);
    CHECK(hypercube(3).edge_count() == 12);
    CHECK(hypercube(3).max_degree() == 3);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(path(0), std::invalid_argument);
}

TEST_CASE("graph power") {
    Graph c6_sq = power(cycle(6), 2);
    CHECK(c6_sq.vertex_count() == 6);
    for (int v = 0; v < 6; ++v) CHECK(c6_sq.degree(v) == 4);

    Graph p5_sq = power(path(5), 2);
    CHECK(p5_sq.edge_count() == 4 + 3);  // distance-1 plus distance-2 pairs
    CHECK(p5_sq.has_edge(0, 2));
    CHECK_FALSE(p5_sq.has_edge(0, 3));

    CHECK(power(path(4), 1).edge_count() == 3);
    CHECK(power(path(4), 7).edge_count() == 6);  // saturates at the complete graph
    CHECK_THROWS_AS(power(path(3), 0), std::invalid_argument);
}

TEST_CASE("cartesian product structure") {
    ProductGraph pg = cartesian_product({path(3), path(4)});
    CHECK(pg.graph.vertex_count() == 12);
    // |E(GxH)| = |V(G)||E(H)| + |E(G)||V(H)|
    CHECK(pg.graph.edge_count() == 3 * 3 + 2 * 4);
    CHECK(pg.dimension() == 2);

    // coordinates round-trip through vertex ids
    for (int v = 0; v < 12; ++v) CHECK(pg.vertex_at(pg.coords[v]) == v);

    // every edge changes exactly one coordinate, along a factor edge
    for (auto [u, v] : pg.graph.edges()) {
        int dim = pg.edge_dimension(u, v);
        const auto& cu = pg.coords[u];
        const auto& cv = pg.coords[v];
        for (int i = 0; i < 2; ++i) {
            if (i == dim)
                CHECK(pg.factors[i].has_edge(cu[i], cv[i]));
            else
                CHECK(cu[i] == cv[i]);
        }
    }
}

TEST_CASE("triple product edge count") {
    ProductGraph pg = cartesian_product({path(3), path(3), path(3)});
    CHECK(pg.graph.vertex_count() == 27);
    CHECK(pg.graph.edge_count() == 54);
    for (int v = 0; v < 27; ++v) CHECK(pg.graph.degree(v) <= 6);
}

TEST_CASE("product of single factor is the factor") {
    ProductGraph pg = cartesian_product({cycle(5)});
    CHECK(pg.graph.vertex_count() == 5);
    CHECK(pg.graph.edge_count() == 5);
}

TEST_CASE("bfs distances and connectivity") {
    Graph p5 = path(5);
    auto dist = bfs_distances(p5, 0);
    CHECK(dist == std::vector<int>{0, 1, 2, 3, 4});

    Graph two(5, {{0, 1}, {2, 3}, {3, 4}});
    auto comps = connected_components(two);
    CHECK(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2, 3, 4});
    CHECK_FALSE(is_connected(two));
    CHECK(is_connected(p5));
}

TEST_CASE("bipartite and tree recognition") {
    CHECK(is_bipartite(cycle(6)));
    CHECK_FALSE(is_bipartite(cycle(5)));
    CHECK(is_bipartite(path(7)));
    CHECK(is_bipartite(hypercube(3)));
    CHECK_FALSE(is_bipartite(complete(3)));

    CHECK(is_tree(path(4)));
    CHECK(is_tree(tree_from_edges(4, {{0, 1}, {0, 2}, {0, 3}})));
    CHECK_FALSE(is_tree(cycle(4)));
    CHECK_FALSE(is_tree(Graph(3, {{0, 1}})));  // disconnected
    CHECK_THROWS_AS(tree_from_edges(4, {{0, 1}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(tree_from_edges(3, {{0, 1}, {1, 2}, {2, 0}}), std::invalid_argument);
}

TEST_CASE("half average degree") {
    CHECK(half_average_degree(cycle(4)) == Rational(1));
    CHECK(half_average_degree(complete(4)) == Rational(3, 2));
    ProductGraph grid = cartesian_product({path(3), path(3)});
    CHECK(half_average_degree(grid.graph) == Rational(4, 3));
}

TEST_CASE("cycle embeds in the square of a path") {
    // alternating low/high order keeps cycle neighbours within distance two
    CHECK(cycle_in_path_square_order(5) == std::vector<int>{0, 4, 1, 3, 2});
    CHECK(cycle_in_path_square_order(6) == std::vector<int>{0, 5, 1, 4, 2, 3});

    for (int n = 3; n <= 12; ++n) {
        auto order = cycle_in_path_square_order(n);
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n; ++i) CHECK(sorted[i] == i);
        // consecutive cycle vertices sit within distance two on the path
        std::vector<int> pos(n);
        for (int p = 0; p < n; ++p) pos[order[p]] = p;
        for (int v = 0; v < n; ++v)
            CHECK(std::abs(pos[v] - pos[(v + 1) % n]) <= 2);
    }
}
