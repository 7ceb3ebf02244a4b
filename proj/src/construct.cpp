#include "prodcolor/construct.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "prodcolor/solver.hpp"

namespace prodcolor {

namespace {

void validate_plan(const ProductColoringPlan& plan, const ProductGraph& product) {
    std::size_t d = product.factors.size();
    if (plan.factor_colorings.size() != d)
        throw std::invalid_argument("plan: one colouring per factor required");
    if (plan.multipliers.elements.size() != d)
        throw std::invalid_argument("plan: one multiplier per factor required");
    if (plan.span_bound < 1)
        throw std::invalid_argument("plan: span bound must be at least 1");
    if (plan.multipliers.k < plan.span_bound)
        throw std::invalid_argument(
            "plan: multiplier set must be k-multiplicative for k >= span bound");
    if (!is_k_multiplicative(plan.multipliers.elements, plan.multipliers.k))
        throw std::invalid_argument("plan: multipliers are not k-multiplicative");
    for (std::size_t i = 0; i < d; ++i) {
        const Graph& f = product.factors[i];
        const Coloring& c = plan.factor_colorings[i];
        if (!is_proper(f, c))
            throw std::invalid_argument("plan: factor colouring " + std::to_string(i) +
                                        " is not proper");
        if (span(f, c) > plan.span_bound)
            throw std::invalid_argument("plan: factor colouring " + std::to_string(i) +
                                        " exceeds the span bound");
        if (!is_f_free(f, c, plan.family))
            throw std::invalid_argument("plan: factor colouring " + std::to_string(i) +
                                        " is not family-free");
    }
}

void shift_min_to_zero(Coloring& c) {
    if (c.colors.empty()) return;
    long long mn = *std::min_element(c.colors.begin(), c.colors.end());
    for (auto& x : c.colors) x -= mn;
}

SidonSet multiplier_prefix(SidonStrategy strategy, int k, int d) {
    switch (strategy) {
        case SidonStrategy::Residue:
            return generate_R(k, d);
        case SidonStrategy::Coprime:
            return first_n_S(k, d);
        case SidonStrategy::ExponentMultiples:
            return first_n_T(k, d);
    }
    throw std::invalid_argument("unknown multiplier strategy");
}

}  // namespace

Coloring weighted_sum_coloring(const ProductColoringPlan& plan,
                               const ProductGraph& product) {
    validate_plan(plan, product);
    int n = product.graph.vertex_count();
    Coloring out;
    out.colors.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        long long sum = 0;
        for (std::size_t i = 0; i < product.factors.size(); ++i)
            sum += plan.multipliers.elements[i] *
                   plan.factor_colorings[i].colors[product.coords[v][i]];
        out.colors[v] = sum;
    }
    shift_min_to_zero(out);
    return out;
}

Coloring fold_span_to_colors(const Graph& g, const Coloring& c,
                             const ForbiddenFamily& f, long long span_bound) {
    if (!is_f_free(g, c, f))
        throw std::invalid_argument("fold_span_to_colors: colouring is not family-free");
    long long actual = span(g, c);
    long long s = span_bound < 0 ? actual : span_bound;
    if (s < actual)
        throw std::invalid_argument("fold_span_to_colors: declared span bound too small");
    long long m = 2 * s + 1;
    Coloring out;
    out.colors.reserve(c.colors.size());
    for (long long x : c.colors) out.colors.push_back(((x % m) + m) % m);
    return out;
}

Coloring bfs_depth_coloring(const Graph& g) {
    Coloring c;
    c.colors.assign(g.vertex_count(), 0);
    for (const auto& comp : connected_components(g)) {
        auto dist = bfs_distances(g, comp[0]);
        for (int v : comp) c.colors[v] = dist[v];
    }
    return c;
}

PipelineResult sidon_product_coloring(const ProductGraph& product,
                                      const ForbiddenFamily& family, int k,
                                      SidonStrategy strategy,
                                      const std::vector<Coloring>* factor_colorings,
                                      SearchBudget* budget) {
    if (k < 1) throw std::invalid_argument("sidon_product_coloring: need k >= 1");
    int d = product.dimension();

    ProductColoringPlan plan;
    plan.span_bound = k;
    plan.family = family;
    plan.multipliers = multiplier_prefix(strategy, k, d);

    if (factor_colorings) {
        plan.factor_colorings = *factor_colorings;
    } else {
        for (const Graph& f : product.factors) {
            // Depth colouring first: span 1 and family-free on many shapes.
            Coloring depth = bfs_depth_coloring(f);
            if (is_proper(f, depth) && is_f_free(f, depth, family) &&
                span(f, depth) <= k) {
                plan.factor_colorings.push_back(std::move(depth));
                continue;
            }
            SolveResult sr = chromatic_span(f, family, budget);
            if (!sr.optimal || sr.value > k)
                throw std::invalid_argument(
                    "sidon_product_coloring: no family-free factor colouring "
                    "within the span bound");
            plan.factor_colorings.push_back(std::move(sr.witness));
        }
    }

    PipelineResult res;
    res.multipliers = plan.multipliers;
    res.combined = weighted_sum_coloring(plan, product);
    long long max_mult = plan.multipliers.elements.empty()
                             ? 1
                             : plan.multipliers.elements.back();
    res.span_bound = (long long)k * max_mult;
    res.closed_form_bound = 2 * res.span_bound + 1;
    res.folded = fold_span_to_colors(product.graph, res.combined, family, res.span_bound);
    res.color_count = color_count(res.folded);
    return res;
}

TreeProductColoring acyclic_tree_product_coloring(const std::vector<Graph>& trees) {
    if (trees.empty())
        throw std::invalid_argument("acyclic_tree_product_coloring: need a factor");
    for (const auto& t : trees)
        if (!is_tree(t))
            throw std::invalid_argument("acyclic_tree_product_coloring: factor is not a tree");

    TreeProductColoring out;
    out.product = cartesian_product(trees);
    int d = (int)trees.size();
    long long m = d + 1;
    // sum (i+1) * depth_i mod (d+1): along a dimension-i edge the value moves
    // by +-(i+1) mod d+1, never 0, and any bichromatic cycle would need to
    // balance moves of two distinct step sizes, which the modulus forbids.
    out.coloring.colors.assign(out.product.graph.vertex_count(), 0);
    std::vector<Coloring> depths;
    depths.reserve(trees.size());
    for (const auto& t : trees) depths.push_back(bfs_depth_coloring(t));
    for (int v = 0; v < out.product.graph.vertex_count(); ++v) {
        long long sum = 0;
        for (int i = 0; i < d; ++i)
            sum += (long long)(i + 1) * depths[i].colors[out.product.coords[v][i]];
        out.coloring.colors[v] = ((sum % m) + m) % m;
    }
    return out;
}

BuiltProductColoring star_tree_product_coloring(const std::vector<Graph>& trees) {
    if (trees.empty())
        throw std::invalid_argument("star_tree_product_coloring: need a factor");
    for (const auto& t : trees)
        if (!is_tree(t))
            throw std::invalid_argument("star_tree_product_coloring: factor is not a tree");

    BuiltProductColoring out;
    out.product = cartesian_product(trees);
    // Depth colourings of trees have span 1 and no bichromatic 4-vertex
    // path (any such path would have to zig-zag between two depths, which a
    // tree cannot close). k = 1 and multipliers 1..d give span <= d.
    std::vector<Coloring> depths;
    depths.reserve(trees.size());
    for (const auto& t : trees) depths.push_back(bfs_depth_coloring(t));
    out.result = sidon_product_coloring(out.product, ForbiddenFamily::p4(), 1,
                                        SidonStrategy::Residue, &depths);
    return out;
}

Coloring cycle_position_coloring(int n) {
    auto order = cycle_in_path_square_order(n);
    Coloring c;
    c.colors.assign(n, 0);
    for (int pos = 0; pos < n; ++pos) c.colors[order[pos]] = pos;
    return c;
}

BuiltProductColoring toroidal_grid_coloring(const std::vector<int>& cycle_lengths, int k) {
    if (cycle_lengths.empty())
        throw std::invalid_argument("toroidal_grid_coloring: need a cycle length");
    if (k < 1) throw std::invalid_argument("toroidal_grid_coloring: need k >= 1");

    std::vector<Graph> factors;
    std::vector<Coloring> colorings;
    for (int n : cycle_lengths) {
        if (n < 3)
            throw std::invalid_argument("toroidal_grid_coloring: cycle length below 3");
        factors.push_back(power(cycle(n), k));
        // Embedding position: all colours distinct, so any family is avoided,
        // and k cycle steps move the position by at most 2k.
        colorings.push_back(cycle_position_coloring(n));
    }

    BuiltProductColoring out;
    out.product = cartesian_product(factors);
    out.result = sidon_product_coloring(out.product, ForbiddenFamily::p3(), 2 * k,
                                        SidonStrategy::ExponentMultiples, &colorings);
    return out;
}

Lp1ProductResult lp1_weighted_labelling(const ProductColoringPlan& plan,
                                        const ProductGraph& product, int p) {
    if (p < 1) throw std::invalid_argument("lp1_weighted_labelling: need p >= 1");
    std::size_t d = product.factors.size();
    if (plan.factor_colorings.size() != d)
        throw std::invalid_argument("lp1 plan: one labelling per factor required");
    if (plan.multipliers.elements.size() != d)
        throw std::invalid_argument("lp1 plan: one multiplier per factor required");
    if (plan.multipliers.k < plan.span_bound)
        throw std::invalid_argument(
            "lp1 plan: multiplier set must be k-multiplicative for k >= span bound");
    if (!is_k_multiplicative(plan.multipliers.elements, plan.multipliers.k))
        throw std::invalid_argument("lp1 plan: multipliers are not k-multiplicative");
    for (std::size_t i = 0; i < d; ++i) {
        const Graph& f = product.factors[i];
        const Coloring& c = plan.factor_colorings[i];
        if (!is_lp1_labelling(f, c, p))
            throw std::invalid_argument("lp1 plan: factor labelling " +
                                        std::to_string(i) + " is not valid");
        if (lp1_span(f, c) > plan.span_bound)
            throw std::invalid_argument("lp1 plan: factor labelling " +
                                        std::to_string(i) + " exceeds the span bound");
    }

    Lp1ProductResult out;
    int n = product.graph.vertex_count();
    out.combined.colors.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        long long sum = 0;
        for (std::size_t i = 0; i < d; ++i)
            sum += plan.multipliers.elements[i] *
                   plan.factor_colorings[i].colors[product.coords[v][i]];
        out.combined.colors[v] = sum;
    }
    shift_min_to_zero(out.combined);
    long long max_mult =
        plan.multipliers.elements.empty() ? 1 : plan.multipliers.elements.back();
    out.span_bound = (long long)plan.span_bound * max_mult;

    // Folding mod 2*bound+1 keeps distance-one separation: an edge difference
    // delta with p <= |delta| <= bound maps to a residue whose distance from
    // 0 is still at least min(|delta|, 2*bound+1-|delta|) >= p.
    long long m = 2 * out.span_bound + 1;
    out.folded.colors.reserve(n);
    for (long long x : out.combined.colors)
        out.folded.colors.push_back(((x % m) + m) % m);
    return out;
}

}  // namespace prodcolor
