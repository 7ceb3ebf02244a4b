#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "prodcolor/construct.hpp"
#include "prodcolor/solver.hpp"

using namespace prodcolor;

namespace {

Coloring identity_coloring(int n) {
    Coloring c;
    c.colors.resize(n);
    for (int i = 0; i < n; ++i) c.colors[i] = i;
    return c;
}

void check_edge_identity(const ProductGraph& pg, const ProductColoringPlan& plan,
                         const Coloring& combined) {
    for (auto [u, v] : pg.graph.edges()) {
        int dim = pg.edge_dimension(u, v);
        long long factor_diff = std::abs(plan.factor_colorings[dim].colors[pg.coords[u][dim]] -
                                         plan.factor_colorings[dim].colors[pg.coords[v][dim]]);
        long long got = std::abs(combined.colors[u] - combined.colors[v]);
        CHECK(got == plan.multipliers.elements[dim] * factor_diff);
    }
}

}  // namespace

TEST_CASE("weighted sum: per-edge differences factor exactly") {
    ProductGraph pg = cartesian_product({path(3), path(4), path(2)});
    ProductColoringPlan plan;
    plan.factor_colorings = {identity_coloring(3), identity_coloring(4),
                             identity_coloring(2)};
    plan.span_bound = 1;
    plan.multipliers = generate_R(1, 3);  // {1, 2, 3}
    plan.family = ForbiddenFamily::p3();
    Coloring c = weighted_sum_coloring(plan, pg);
    check_edge_identity(pg, plan, c);
    CHECK(is_proper(pg.graph, c));
    CHECK(is_f_free(pg.graph, c, ForbiddenFamily::p3()));
    CHECK(span(pg.graph, c) <= 1 * 3);
    CHECK(*std::min_element(c.colors.begin(), c.colors.end()) == 0);
}

TEST_CASE("plan validation rejects bad inputs") {
    ProductGraph pg = cartesian_product({path(3), path(3)});
    ProductColoringPlan plan;
    plan.factor_colorings = {identity_coloring(3), identity_coloring(3)};
    plan.span_bound = 1;
    plan.multipliers = generate_R(1, 2);
    plan.family = ForbiddenFamily::p3();
    CHECK_NOTHROW(weighted_sum_coloring(plan, pg));

    ProductColoringPlan wrong_count = plan;
    wrong_count.factor_colorings.pop_back();
    CHECK_THROWS_AS(weighted_sum_coloring(wrong_count, pg), std::invalid_argument);

    ProductColoringPlan weak_multipliers = plan;
    weak_multipliers.span_bound = 3;  // multipliers only 1-multiplicative
    CHECK_THROWS_AS(weighted_sum_coloring(weak_multipliers, pg), std::invalid_argument);

    ProductColoringPlan not_sidon = plan;
    not_sidon.span_bound = 3;
    not_sidon.multipliers = SidonSet{3, {2, 3}};  // 3*2 == 2*3
    CHECK_THROWS_AS(weighted_sum_coloring(not_sidon, pg), std::invalid_argument);

    ProductColoringPlan improper = plan;
    improper.factor_colorings[0] = Coloring{{0, 0, 1}};
    CHECK_THROWS_AS(weighted_sum_coloring(improper, pg), std::invalid_argument);

    ProductColoringPlan span_exceeded = plan;
    span_exceeded.factor_colorings[1] = Coloring{{0, 2, 4}};
    CHECK_THROWS_AS(weighted_sum_coloring(span_exceeded, pg), std::invalid_argument);

    // factor colouring must avoid the family too
    ProductGraph cg = cartesian_product({cycle(4), path(2)});
    ProductColoringPlan cyc;
    cyc.factor_colorings = {Coloring{{0, 1, 0, 1}}, identity_coloring(2)};
    cyc.span_bound = 1;
    cyc.multipliers = generate_R(1, 2);
    cyc.family = ForbiddenFamily::even_cycles();
    CHECK_THROWS_AS(weighted_sum_coloring(cyc, cg), std::invalid_argument);
}

TEST_CASE("folding keeps properness and freeness") {
    Graph p7 = path(7);
    Coloring c{{0, 2, 4, 6, 8, 10, 12}};
    Coloring folded = fold_span_to_colors(p7, c, ForbiddenFamily::p3(), 2);
    CHECK(is_proper(p7, folded));
    CHECK(is_f_free(p7, folded, ForbiddenFamily::p3()));
    CHECK(color_count(folded) <= 5);
    for (long long x : folded.colors) CHECK((x >= 0 && x < 5));

    // default bound is the actual span
    Coloring folded2 = fold_span_to_colors(p7, c, ForbiddenFamily::p3());
    CHECK(color_count(folded2) <= 5);

    CHECK_THROWS_AS(fold_span_to_colors(p7, c, ForbiddenFamily::p3(), 1),
                    std::invalid_argument);
    Coloring repeat{{0, 1, 0, 1, 0, 1, 0}};
    CHECK_THROWS_AS(fold_span_to_colors(p7, repeat, ForbiddenFamily::p3(), 1),
                    std::invalid_argument);
}

TEST_CASE("pipeline on a two-dimensional grid of squared paths") {
    ProductGraph pg = cartesian_product({power(path(5), 2), power(path(5), 2)});
    PipelineResult r = sidon_product_coloring(pg, ForbiddenFamily::p3(), 2,
                                              SidonStrategy::ExponentMultiples);
    CHECK(r.multipliers.elements == std::vector<long long>{1, 3});
    CHECK(r.span_bound == 6);
    CHECK(r.closed_form_bound == 13);
    CHECK(r.color_count <= 13);
    CHECK(is_proper(pg.graph, r.folded));
    CHECK(is_f_free(pg.graph, r.folded, ForbiddenFamily::p3()));
    CHECK(span(pg.graph, r.combined) <= r.span_bound);
}

TEST_CASE("pipeline closed forms per strategy") {
    ProductGraph pg = cartesian_product(
        {power(path(4), 2), power(path(4), 2), power(path(4), 2)});

    PipelineResult t = sidon_product_coloring(pg, ForbiddenFamily::p3(), 2,
                                              SidonStrategy::ExponentMultiples);
    CHECK(t.multipliers.elements == std::vector<long long>{1, 3, 4});
    CHECK(t.closed_form_bound == 17);  // 4t+1 at t = 4
    CHECK(is_f_free(pg.graph, t.folded, ForbiddenFamily::p3()));

    PipelineResult rr = sidon_product_coloring(pg, ForbiddenFamily::p3(), 2,
                                               SidonStrategy::Residue);
    CHECK(rr.multipliers.elements == std::vector<long long>{1, 3, 5});
    // 2k(kd-k+1)+1 at k = 2, d = 3
    CHECK(rr.closed_form_bound == 21);
    CHECK(is_f_free(pg.graph, rr.folded, ForbiddenFamily::p3()));

    CHECK(t.color_count <= rr.closed_form_bound);
}

TEST_CASE("pipeline rejects factors that cannot meet the span bound") {
    ProductGraph pg = cartesian_product({cycle(5), path(3)});
    // distance-two colourings of C5 need span 2, so k = 1 is impossible
    CHECK_THROWS_AS(
        sidon_product_coloring(pg, ForbiddenFamily::p3(), 1, SidonStrategy::Residue),
        std::invalid_argument);
}

TEST_CASE("depth colouring") {
    Graph star = tree_from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    Coloring d = bfs_depth_coloring(star);
    CHECK(d.colors == std::vector<long long>{0, 1, 1, 1, 2});
    CHECK(is_proper(star, d));
    CHECK(span(star, d) == 1);
    CHECK(is_f_free(star, d, ForbiddenFamily::p4()));
    CHECK(is_f_free(star, d, ForbiddenFamily::even_cycles()));

    Graph forest(5, {{0, 1}, {3, 4}});
    Coloring f = bfs_depth_coloring(forest);
    CHECK(f.colors == std::vector<long long>{0, 1, 0, 0, 1});
}

TEST_CASE("tree products get acyclic colourings with d+1 colours") {
    std::vector<std::vector<Graph>> cases = {
        {path(3), path(3)},
        {path(4), path(3)},
        {path(3), path(3), path(3)},
        {tree_from_edges(4, {{0, 1}, {0, 2}, {0, 3}}), path(4)},
    };
    for (const auto& trees : cases) {
        TreeProductColoring tp = acyclic_tree_product_coloring(trees);
        long long d = (long long)trees.size();
        CHECK(color_count(tp.coloring) <= d + 1);
        CHECK(is_proper(tp.product.graph, tp.coloring));
        CHECK(is_f_free(tp.product.graph, tp.coloring, ForbiddenFamily::even_cycles()));
    }
    CHECK_THROWS_AS(acyclic_tree_product_coloring({cycle(4)}), std::invalid_argument);
    CHECK_THROWS_AS(acyclic_tree_product_coloring({}), std::invalid_argument);
}

TEST_CASE("tree products get star-free colourings with 2d+1 colours") {
    Graph star = tree_from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    std::vector<std::vector<Graph>> cases = {
        {path(5), path(5), path(5)},
        {star, star},
        {star, path(4), tree_from_edges(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}})},
    };
    for (const auto& trees : cases) {
        BuiltProductColoring b = star_tree_product_coloring(trees);
        long long d = (long long)trees.size();
        CHECK(b.result.closed_form_bound == 2 * d + 1);
        CHECK(b.result.color_count <= 2 * d + 1);
        CHECK(is_proper(b.product.graph, b.result.folded));
        CHECK(is_f_free(b.product.graph, b.result.folded, ForbiddenFamily::p4()));
    }
}

TEST_CASE("cycle position colouring") {
    for (int n : {3, 4, 5, 6, 7, 10}) {
        Coloring c = cycle_position_coloring(n);
        Graph cyc = cycle(n);
        CHECK(color_count(c) == n);  // all distinct
        CHECK(span(cyc, c) <= 2);
        CHECK(is_f_free(cyc, c, ForbiddenFamily::p3()));
    }
    // on the square of a cycle the position colouring has span at most four
    Graph c8_sq = power(cycle(8), 2);
    Coloring c = cycle_position_coloring(8);
    CHECK(span(c8_sq, c) <= 4);
}

TEST_CASE("toroidal grids") {
    BuiltProductColoring b = toroidal_grid_coloring({4, 4}, 1);
    CHECK(b.result.color_count <= 13);
    CHECK(is_proper(b.product.graph, b.result.folded));
    CHECK(is_f_free(b.product.graph, b.result.folded, ForbiddenFamily::p3()));

    BuiltProductColoring b3 = toroidal_grid_coloring({3, 3, 3}, 1);
    CHECK(b3.result.color_count <= 17);
    CHECK(is_f_free(b3.product.graph, b3.result.folded, ForbiddenFamily::p3()));

    BuiltProductColoring single = toroidal_grid_coloring({5}, 1);
    CHECK(single.result.color_count <= 5);
    CHECK(is_f_free(single.product.graph, single.result.folded, ForbiddenFamily::p3()));
    CHECK(chromatic_number(single.product.graph, ForbiddenFamily::p3()).value == 5);

    // squared-cycle factors
    BuiltProductColoring sq = toroidal_grid_coloring({7, 7}, 2);
    CHECK(is_proper(sq.product.graph, sq.result.folded));
    CHECK(is_f_free(sq.product.graph, sq.result.folded, ForbiddenFamily::p3()));

    CHECK_THROWS_AS(toroidal_grid_coloring({}, 1), std::invalid_argument);
    CHECK_THROWS_AS(toroidal_grid_coloring({4}, 0), std::invalid_argument);
}

TEST_CASE("labelling construction for products") {
    ProductGraph pg = cartesian_product({path(3), path(3)});
    ProductColoringPlan plan;
    plan.factor_colorings = {Coloring{{0, 2, 4}}, Coloring{{0, 2, 4}}};
    plan.span_bound = 2;
    plan.multipliers = first_n_S(2, 2);  // {1, 3}
    Lp1ProductResult r = lp1_weighted_labelling(plan, pg, 2);
    CHECK(r.span_bound == 6);
    CHECK(is_lp1_labelling(pg.graph, r.combined, 2));
    CHECK(is_lp1_labelling(pg.graph, r.folded, 2));
    CHECK(lp1_span(pg.graph, r.combined) <= 6);
    CHECK(lp1_range(pg.graph, r.folded) <= 12);

    // separation-1 labelling plans agree with the colouring pipeline
    ProductColoringPlan one = plan;
    one.factor_colorings = {Coloring{{0, 1, 2}}, Coloring{{0, 1, 2}}};
    one.span_bound = 1;
    one.multipliers = generate_R(1, 2);
    Lp1ProductResult r1 = lp1_weighted_labelling(one, pg, 1);
    CHECK(is_proper(pg.graph, r1.folded));
    CHECK(is_f_free(pg.graph, r1.folded, ForbiddenFamily::p3()));

    // invalid factor labelling: separation too small
    ProductColoringPlan bad = plan;
    bad.factor_colorings = {Coloring{{0, 1, 2}}, Coloring{{0, 2, 4}}};
    CHECK_THROWS_AS(lp1_weighted_labelling(bad, pg, 2), std::invalid_argument);
}

TEST_CASE("exponent-multiple bounds never exceed residue bounds at small scale") {
    for (int k = 1; k <= 3; ++k)
        for (int d = 1; d <= 6; ++d) {
            long long t_max = first_n_T(k, d).elements.back();
            long long r_max = generate_R(k, d).elements.back();
            CHECK(t_max <= r_max);
        }
}

TEST_CASE("randomized pipelines validate end to end") {
    std::mt19937 rng(424242);
    std::vector<Graph> pool = {path(2), path(3), path(4), path(5),
                               path(6), cycle(4), cycle(6), complete(3)};
    std::vector<ForbiddenFamily> fams = {ForbiddenFamily::p3(), ForbiddenFamily::p4(),
                                         ForbiddenFamily::even_cycles()};
    std::vector<SidonStrategy> strategies = {SidonStrategy::Residue,
                                             SidonStrategy::Coprime,
                                             SidonStrategy::ExponentMultiples};
    for (int trial = 0; trial < 60; ++trial) {
        int d = 1 + (int)(rng() % 3);
        std::vector<Graph> factors;
        for (int i = 0; i < d; ++i) factors.push_back(pool[rng() % pool.size()]);
        ProductGraph pg = cartesian_product(factors);
        const ForbiddenFamily& fam = fams[rng() % fams.size()];
        SidonStrategy strat = strategies[rng() % strategies.size()];
        PipelineResult r = sidon_product_coloring(pg, fam, 2, strat);
        CHECK(is_proper(pg.graph, r.folded));
        CHECK(is_f_free(pg.graph, r.folded, fam));
        CHECK(span(pg.graph, r.combined) <= r.span_bound);
        CHECK(r.color_count <= r.closed_form_bound);
        // the exact optimum can never beat a valid construction
        if (pg.graph.vertex_count() <= 30) {
            SolveResult exact = chromatic_number(pg.graph, fam);
            if (exact.optimal) CHECK(exact.value <= r.color_count);
        }
    }
}
