#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "prodcolor/coloring.hpp"
#include "prodcolor/graph.hpp"
#include "prodcolor/product.hpp"

using namespace prodcolor;

namespace {

Coloring col(std::vector<long long> v) { return Coloring{std::move(v)}; }

}  // namespace

TEST_CASE("properness, span and colour count") {
    Graph p4 = path(4);
    CHECK(is_proper(p4, col({0, 1, 0, 1})));
    CHECK_FALSE(is_proper(p4, col({0, 0, 1, 0})));
    CHECK(span(p4, col({0, 3, 1, 2})) == 3);
    CHECK(span(Graph(3, {}), col({5, 5, 5})) == 0);
    CHECK(color_count(col({4, 2, 4, 9})) == 3);
    CHECK_THROWS_AS(span(p4, col({0, 0, 1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(is_proper(p4, col({0, 1})), std::invalid_argument);
}

TEST_CASE("distance-two freeness") {
    Graph p3 = path(3);
    CHECK_FALSE(is_f_free(p3, col({0, 1, 0}), ForbiddenFamily::p3()));
    CHECK(is_f_free(p3, col({0, 1, 2}), ForbiddenFamily::p3()));

    // proper grid 2-colouring repeats colours at distance two
    ProductGraph grid = cartesian_product({path(3), path(3)});
    Coloring checkerboard;
    for (const auto& xy : grid.coords)
        checkerboard.colors.push_back((xy[0] + xy[1]) % 2);
    CHECK(is_proper(grid.graph, checkerboard));
    CHECK_FALSE(is_f_free(grid.graph, checkerboard, ForbiddenFamily::p3()));
}

TEST_CASE("star freeness") {
    Graph p4 = path(4);
    // the path itself 2-coloured is a bichromatic path on four vertices
    CHECK_FALSE(is_f_free(p4, col({0, 1, 0, 1}), ForbiddenFamily::p4()));
    CHECK(is_f_free(p4, col({0, 1, 2, 1}), ForbiddenFamily::p4()));
    CHECK(is_f_free(p4, col({0, 1, 2, 0}), ForbiddenFamily::p4()));

    // two stars sharing a colour pair are fine; a middle edge is not
    Graph h(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    CHECK_FALSE(is_f_free(h, col({0, 1, 0, 1, 0, 1}), ForbiddenFamily::p4()));
    CHECK(is_f_free(h, col({0, 1, 2, 0, 1, 2}), ForbiddenFamily::p4()));
}

TEST_CASE("even-cycle freeness") {
    Graph c4 = cycle(4);
    CHECK_FALSE(is_f_free(c4, col({0, 1, 0, 1}), ForbiddenFamily::even_cycles()));
    CHECK(is_f_free(c4, col({0, 1, 0, 2}), ForbiddenFamily::even_cycles()));

    Graph c5 = cycle(5);
    // odd cycles cannot be bichromatic, so any proper colouring passes
    CHECK(is_f_free(c5, col({0, 1, 0, 1, 2}), ForbiddenFamily::even_cycles()));

    Graph c6 = cycle(6);
    CHECK_FALSE(is_f_free(c6, col({0, 1, 0, 1, 0, 1}), ForbiddenFamily::even_cycles()));
    CHECK(is_f_free(c6, col({0, 1, 0, 2, 0, 1}), ForbiddenFamily::even_cycles()));
}

TEST_CASE("empty family means plain proper colouring") {
    Graph c4 = cycle(4);
    CHECK(is_f_free(c4, col({0, 1, 0, 1}), ForbiddenFamily::none()));
    CHECK_THROWS_AS(is_f_free(c4, col({0, 0, 1, 1}), ForbiddenFamily::none()),
                    std::invalid_argument);
}

TEST_CASE("explicit members are validated") {
    CHECK_THROWS_AS(ForbiddenFamily::explicit_list({cycle(3)}), std::invalid_argument);
    CHECK_THROWS_AS(ForbiddenFamily::explicit_list({Graph(2, {{0, 1}})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ForbiddenFamily::explicit_list({Graph(4, {{0, 1}, {2, 3}})}),
                    std::invalid_argument);
    CHECK(ForbiddenFamily::explicit_list({cycle(4), path(3)}).members().size() == 2);
}

TEST_CASE("fast paths agree with explicit subgraph search") {
    ForbiddenFamily expl_p3 = ForbiddenFamily::explicit_list({path(3)});
    ForbiddenFamily expl_p4 = ForbiddenFamily::explicit_list({path(4)});
    ForbiddenFamily expl_cycles =
        ForbiddenFamily::explicit_list({cycle(4), cycle(6), cycle(8), cycle(10)});

    std::mt19937 rng(77007);
    int proper_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 3 + (int)(rng() % 8);  // up to 10 vertices
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 10 < 4) edges.push_back({u, v});
        Graph g(n, edges);
        Coloring c;
        for (int v = 0; v < n; ++v) c.colors.push_back(rng() % 4);
        if (!is_proper(g, c)) continue;
        ++proper_seen;
        CHECK(is_f_free(g, c, ForbiddenFamily::p3()) == is_f_free(g, c, expl_p3));
        CHECK(is_f_free(g, c, ForbiddenFamily::p4()) == is_f_free(g, c, expl_p4));
        CHECK(is_f_free(g, c, ForbiddenFamily::even_cycles()) ==
              is_f_free(g, c, expl_cycles));
    }
    CHECK(proper_seen > 30);  // the comparison actually exercised cases
}

TEST_CASE("subgraph containment") {
    CHECK(contains_subgraph(cycle(3), path(3)));
    CHECK(contains_subgraph(complete(4), cycle(4)));
    CHECK(contains_subgraph(path(4), path(4)));
    CHECK_FALSE(contains_subgraph(path(3), path(4)));
    // a star has no path on four vertices
    Graph star = tree_from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_FALSE(contains_subgraph(star, path(4)));
    CHECK(contains_subgraph(star, path(3)));

    CHECK(contains_subgraph_through(path(4), path(3), 0));
    CHECK(contains_subgraph_through(path(4), path(4), 2));
    Graph disc(5, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(contains_subgraph_through(disc, path(3), 1));
    CHECK_FALSE(contains_subgraph_through(disc, path(3), 3));
}

TEST_CASE("labelling checks with separation") {
    Graph p3 = path(3);
    CHECK(is_lp1_labelling(p3, col({0, 2, 4}), 2));
    CHECK_FALSE(is_lp1_labelling(p3, col({0, 2, 0}), 2));  // equal at distance two
    CHECK_FALSE(is_lp1_labelling(p3, col({0, 1, 3}), 2));  // edge too close
    CHECK(is_lp1_labelling(p3, col({2, 0, 3}), 2));
    CHECK(lp1_span(p3, col({2, 0, 3})) == 3);
    CHECK(lp1_range(p3, col({2, 0, 3})) == 3);
    CHECK(lp1_span(p3, col({0, 2, 4})) == 2);
    CHECK(lp1_range(p3, col({0, 2, 4})) == 4);

    // p = 1 is exactly distance-two colouring
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + (int)(rng() % 6);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 10 < 4) edges.push_back({u, v});
        Graph g(n, edges);
        Coloring c;
        for (int v = 0; v < n; ++v) c.colors.push_back(rng() % 5);
        bool lp = is_lp1_labelling(g, c, 1);
        bool ff = is_proper(g, c) && is_f_free(g, c, ForbiddenFamily::p3());
        CHECK(lp == ff);
    }
}
