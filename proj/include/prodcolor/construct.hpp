#pragma once

#include <vector>

#include "prodcolor/budget.hpp"
#include "prodcolor/coloring.hpp"
#include "prodcolor/product.hpp"
#include "prodcolor/sidon.hpp"

namespace prodcolor {

// Which k-multiplicative set supplies the per-dimension multipliers.
enum class SidonStrategy {
    Residue,            // 1 mod k arithmetic progression
    Coprime,            // integers coprime to all primes <= k
    ExponentMultiples,  // small-prime exponents divisible by floor(log_p k)+1
};

// Everything needed to colour a product from coloured factors: one colouring
// per factor, all with span <= span_bound and family-free, plus a
// span_bound-multiplicative multiplier set with one element per factor.
struct ProductColoringPlan {
    std::vector<Coloring> factor_colorings;
    int span_bound = 1;
    SidonSet multipliers;
    ForbiddenFamily family = ForbiddenFamily::none();
};

// c(v) = sum_i multipliers[i] * factor_color_i(v_i), shifted so the minimum
// is 0. Along any product edge the colour difference is multipliers[i] times
// the factor colour difference in the edge's dimension, which keeps the
// result family-free with span <= span_bound * max(multipliers).
// Throws if the plan does not validate.
Coloring weighted_sum_coloring(const ProductColoringPlan& plan,
                               const ProductGraph& product);

// Reduce colours mod (2*span_bound + 1). Distinct colours at most that far
// apart stay distinct mod the window, so properness and family-freeness
// survive. span_bound defaults to the actual span of c; passing a larger
// bound is allowed and folds into a wider window.
Coloring fold_span_to_colors(const Graph& g, const Coloring& c,
                             const ForbiddenFamily& f, long long span_bound = -1);

struct PipelineResult {
    Coloring combined;            // weighted sum before folding, min 0
    Coloring folded;              // combined mod (2*span_bound+1)
    long long color_count = 0;    // distinct colours in folded
    long long span_bound = 0;     // span_bound_per_factor * max multiplier
    long long closed_form_bound = 0;  // 2*span_bound + 1
    SidonSet multipliers;
};

// End-to-end: find family-free span <= k colourings of the factors (callers
// may supply their own), take the first d elements of the chosen multiplier
// set, combine, fold. Factor colourings are searched as BFS depths first and
// through the exact span solver if depths do not work.
PipelineResult sidon_product_coloring(const ProductGraph& product,
                                      const ForbiddenFamily& family, int k,
                                      SidonStrategy strategy,
                                      const std::vector<Coloring>* factor_colorings = nullptr,
                                      SearchBudget* budget = nullptr);

// Depth of each vertex from the smallest-id vertex of its component.
Coloring bfs_depth_coloring(const Graph& g);

// Product of d trees coloured with sum_i (i+1) * depth_i mod (d+1): an
// acyclic (even-cycle-free) colouring with d+1 colours.
struct TreeProductColoring {
    ProductGraph product;
    Coloring coloring;
};
TreeProductColoring acyclic_tree_product_coloring(const std::vector<Graph>& trees);

struct BuiltProductColoring {
    ProductGraph product;
    PipelineResult result;
};

// Product of d trees, star-forest-free with at most 2d+1 colours: depth
// colourings have span 1 and avoid bichromatic 4-vertex paths on trees.
BuiltProductColoring star_tree_product_coloring(const std::vector<Graph>& trees);

// Position of each vertex of cycle(n) in cycle_in_path_square_order(n);
// all distinct, and cycle neighbours are at most two positions apart.
Coloring cycle_position_coloring(int n);

// P3-free colouring of a product of k-th powers of cycles. Each factor is
// coloured by embedding position (span <= 2k), multipliers come from the
// exponent-multiple set at parameter 2k.
BuiltProductColoring toroidal_grid_coloring(const std::vector<int>& cycle_lengths, int k);

// L(p,1) version of the weighted sum: factor labellings must be valid
// L(p,1) labellings with edge span <= plan.span_bound; the combined and
// folded labellings are then valid L(p,1) labellings of the product.
struct Lp1ProductResult {
    Coloring combined;
    Coloring folded;
    long long span_bound = 0;  // edge-span bound of combined
};
Lp1ProductResult lp1_weighted_labelling(const ProductColoringPlan& plan,
                                        const ProductGraph& product, int p);

}  // namespace prodcolor
