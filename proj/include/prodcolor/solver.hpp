#pragma once

#include "prodcolor/budget.hpp"
#include "prodcolor/coloring.hpp"
#include "prodcolor/graph.hpp"

namespace prodcolor {

// Exact exhaustive solvers. All of them are deterministic: vertex orders,
// colour orders and tie-breaks are fixed, so repeated runs yield the same
// witness. `optimal = false` means the node budget ran out; `value` is then
// the best upper bound found and `witness` attains it.
struct SolveResult {
    long long value = 0;
    Coloring witness;
    bool optimal = true;
};

// Minimum number of colours in a family-free colouring.
SolveResult chromatic_number(const Graph& g, const ForbiddenFamily& f,
                             SearchBudget* budget = nullptr);

// Minimum span (max colour difference over edges) of a family-free
// colouring. Witness colours are normalized to minimum 0 per component.
SolveResult chromatic_span(const Graph& g, const ForbiddenFamily& f,
                           SearchBudget* budget = nullptr);

// floor(|E|/|V| + 1) + 1: every colouring with fewer colours has some
// bichromatic subgraph with as many edges as vertices, hence a cycle.
// Requires at least one edge.
long long acyclic_lower_bound(const Graph& g);

// L(p,1) optima: minimum edge span and minimum label range over labellings
// with separation p across edges and distinctness at distance two.
SolveResult min_lp1_span(const Graph& g, int p, SearchBudget* budget = nullptr);
SolveResult min_lp1_range(const Graph& g, int p, SearchBudget* budget = nullptr);

}  // namespace prodcolor
