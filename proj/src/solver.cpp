#include "prodcolor/solver.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace prodcolor {

namespace {

// Static branching order: descending degree, ties by smaller id.
std::vector<int> degree_order(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    return order;
}

// Connected order for windowed (span) searches: component roots are chosen
// by descending degree, every later vertex already has an ordered neighbour,
// again preferring high degree. Guarantees each non-root vertex has an
// anchor when its turn comes.
std::vector<int> connected_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> placed(n, 0);
    std::vector<int> frontier_deg(n, 0);  // ordered neighbours seen so far
    for (;;) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v] || frontier_deg[v] == 0) continue;
            if (best < 0 || g.degree(v) > g.degree(best) ||
                (g.degree(v) == g.degree(best) && v < best))
                best = v;
        }
        if (best < 0) {  // start a new component
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                if (best < 0 || g.degree(v) > g.degree(best) ||
                    (g.degree(v) == g.degree(best) && v < best))
                    best = v;
            }
        }
        if (best < 0) break;
        placed[best] = 1;
        order.push_back(best);
        for (int w : g.neighbors(best))
            if (!placed[w]) ++frontier_deg[w];
    }
    return order;
}

// Incremental family check: is giving colour `col` to v compatible with the
// currently assigned part of the colouring (which is proper and family-free
// by induction)? Any fresh forbidden structure must involve v, and since
// forbidden subgraphs are connected, only colour pairs {col, b} with b on an
// assigned neighbour of v can be affected.
struct FamilyContext {
    const Graph& g;
    ForbiddenFamily family;
    Graph square;  // P3 only: conflict graph at distance <= 2

    FamilyContext(const Graph& g_, const ForbiddenFamily& f_) : g(g_), family(f_) {
        if (family.kind() == ForbiddenFamily::Kind::P3) square = power(g, 2);
    }

    bool proper_at(int v, long long col, const std::vector<long long>& colors,
                   const std::vector<char>& assigned) const {
        for (int w : g.neighbors(v))
            if (assigned[w] && colors[w] == col) return false;
        return true;
    }

    bool placement_ok(int v, long long col, const std::vector<long long>& colors,
                      const std::vector<char>& assigned) const {
        switch (family.kind()) {
            case ForbiddenFamily::Kind::P3:
                for (int w : square.neighbors(v))
                    if (assigned[w] && colors[w] == col) return false;
                return true;
            case ForbiddenFamily::Kind::P4:
                return proper_at(v, col, colors, assigned) &&
                       p4_ok(v, col, colors, assigned);
            case ForbiddenFamily::Kind::EvenCycles:
                return proper_at(v, col, colors, assigned) &&
                       forest_ok(v, col, colors, assigned);
            case ForbiddenFamily::Kind::Explicit:
                return proper_at(v, col, colors, assigned) &&
                       (family.members().empty() ||
                        explicit_ok(v, col, colors, assigned));
        }
        return false;
    }

private:
    std::vector<long long> neighbor_colors(int v, const std::vector<long long>& colors,
                                           const std::vector<char>& assigned) const {
        std::vector<long long> out;
        for (int w : g.neighbors(v))
            if (assigned[w]) out.push_back(colors[w]);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    bool p4_ok(int v, long long col, const std::vector<long long>& colors,
               const std::vector<char>& assigned) const {
        auto color_of = [&](int w) { return w == v ? col : colors[w]; };
        auto live = [&](int w) { return w == v || assigned[w]; };
        for (long long b : neighbor_colors(v, colors, assigned)) {
            // degree of each vertex inside the {col,b} bichromatic subgraph
            std::vector<int> deg(g.vertex_count(), 0);
            std::vector<std::pair<int, int>> picked;
            for (auto [x, y] : g.edges()) {
                if (!live(x) || !live(y)) continue;
                long long cx = color_of(x), cy = color_of(y);
                if (cx == cy) continue;
                if ((cx == col || cx == b) && (cy == col || cy == b)) {
                    ++deg[x];
                    ++deg[y];
                    picked.push_back({x, y});
                }
            }
            for (auto [x, y] : picked)
                if (deg[x] >= 2 && deg[y] >= 2) return false;
        }
        return true;
    }

    bool forest_ok(int v, long long col, const std::vector<long long>& colors,
                   const std::vector<char>& assigned) const {
        auto color_of = [&](int w) { return w == v ? col : colors[w]; };
        auto live = [&](int w) { return w == v || assigned[w]; };
        for (long long b : neighbor_colors(v, colors, assigned)) {
            std::vector<int> parent(g.vertex_count());
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            for (auto [x, y] : g.edges()) {
                if (!live(x) || !live(y)) continue;
                long long cx = color_of(x), cy = color_of(y);
                if (cx == cy) continue;
                if ((cx == col || cx == b) && (cy == col || cy == b)) {
                    int rx = find(x), ry = find(y);
                    if (rx == ry) return false;
                    parent[rx] = ry;
                }
            }
        }
        return true;
    }

    bool explicit_ok(int v, long long col, const std::vector<long long>& colors,
                     const std::vector<char>& assigned) const {
        auto color_of = [&](int w) { return w == v ? col : colors[w]; };
        auto live = [&](int w) { return w == v || assigned[w]; };
        for (long long b : neighbor_colors(v, colors, assigned)) {
            std::vector<int> to_host(g.vertex_count(), -1);
            std::vector<int> verts;
            for (int w = 0; w < g.vertex_count(); ++w)
                if (live(w) && (color_of(w) == col || color_of(w) == b)) {
                    to_host[w] = (int)verts.size();
                    verts.push_back(w);
                }
            std::vector<std::pair<int, int>> edges;
            for (auto [x, y] : g.edges())
                if (to_host[x] >= 0 && to_host[y] >= 0 && color_of(x) != color_of(y))
                    edges.push_back({to_host[x], to_host[y]});
            Graph host((int)verts.size(), std::move(edges));
            for (const auto& m : family.members())
                if (contains_subgraph_through(host, m, to_host[v])) return false;
        }
        return true;
    }
};

// Sequential colouring with the smallest feasible colour. Always succeeds
// for the built-in kinds (a brand-new colour is always feasible there); may
// fail for explicit star-like patterns, in which case the caller falls back
// to all-distinct colours, which are family-free for every family.
std::optional<Coloring> greedy_coloring(const Graph& g, const FamilyContext& ctx,
                                        const std::vector<int>& order) {
    std::vector<long long> colors(g.vertex_count(), 0);
    std::vector<char> assigned(g.vertex_count(), 0);
    for (int v : order) {
        bool done = false;
        for (long long col = 0; col < g.vertex_count(); ++col)
            if (ctx.placement_ok(v, col, colors, assigned)) {
                colors[v] = col;
                assigned[v] = 1;
                done = true;
                break;
            }
        if (!done) return std::nullopt;
    }
    return Coloring{std::move(colors)};
}

Coloring all_distinct_coloring(const Graph& g) {
    Coloring c;
    c.colors.resize(g.vertex_count());
    std::iota(c.colors.begin(), c.colors.end(), 0);
    return c;
}

// Grows a clique from every start vertex, always adding the candidate with
// the most neighbours among the remaining candidates. Any clique forces that
// many colours, for every family, since F-free colourings are proper.
long long greedy_clique_size(const Graph& g) {
    long long best = g.vertex_count() > 0 ? 1 : 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> cand(g.neighbors(v).begin(), g.neighbors(v).end());
        long long size = 1;
        while (!cand.empty()) {
            int pick = -1, pick_deg = -1;
            for (int u : cand) {
                int deg = 0;
                for (int w : cand) deg += g.has_edge(u, w) ? 1 : 0;
                if (deg > pick_deg) {
                    pick_deg = deg;
                    pick = u;
                }
            }
            ++size;
            std::vector<int> next;
            for (int w : cand)
                if (w != pick && g.has_edge(pick, w)) next.push_back(w);
            cand = std::move(next);
        }
        best = std::max(best, size);
    }
    return best;
}

long long chromatic_lb(const Graph& g, const ForbiddenFamily& f) {
    if (g.vertex_count() == 0) return 0;
    if (g.edge_count() == 0) return 1;
    long long lb = greedy_clique_size(g);
    switch (f.kind()) {
        case ForbiddenFamily::Kind::P3:
            return std::max(lb, (long long)g.max_degree() + 1);
        case ForbiddenFamily::Kind::P4:
        case ForbiddenFamily::Kind::EvenCycles:
            return std::max(lb, std::max<long long>(2, acyclic_lower_bound(g)));
        case ForbiddenFamily::Kind::Explicit:
            return std::max<long long>(lb, 2);
    }
    return 2;
}

struct ChromaticSearch {
    const Graph& g;
    const FamilyContext& ctx;
    const std::vector<int>& order;
    long long q;
    SearchBudget& budget;
    std::vector<long long> colors;
    std::vector<char> assigned;
    bool out_of_budget = false;

    ChromaticSearch(const Graph& g_, const FamilyContext& ctx_,
                    const std::vector<int>& order_, long long q_, SearchBudget& b)
        : g(g_), ctx(ctx_), order(order_), q(q_), budget(b),
          colors(g_.vertex_count(), 0), assigned(g_.vertex_count(), 0) {}

    bool run() { return place(0, -1); }

    // Colour classes are interchangeable, so a vertex never needs a colour
    // more than one above the largest used so far.
    bool place(std::size_t depth, long long max_used) {
        if (depth == order.size()) return true;
        int v = order[depth];
        long long top = std::min(q - 1, max_used + 1);
        for (long long col = 0; col <= top; ++col) {
            if (!budget.spend()) {
                out_of_budget = true;
                return false;
            }
            if (!ctx.placement_ok(v, col, colors, assigned)) continue;
            colors[v] = col;
            assigned[v] = 1;
            if (place(depth + 1, std::max(max_used, col))) return true;
            assigned[v] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }
};

struct SpanSearch {
    const Graph& g;
    const FamilyContext& ctx;
    const std::vector<int>& order;
    long long s;
    SearchBudget& budget;
    std::vector<long long> colors;
    std::vector<char> assigned;
    bool out_of_budget = false;

    SpanSearch(const Graph& g_, const FamilyContext& ctx_,
               const std::vector<int>& order_, long long s_, SearchBudget& b)
        : g(g_), ctx(ctx_), order(order_), s(s_), budget(b),
          colors(g_.vertex_count(), 0), assigned(g_.vertex_count(), 0) {}

    bool run() { return place(0); }

    bool place(std::size_t depth) {
        if (depth == order.size()) return true;
        int v = order[depth];
        // Intersect the windows of the already-coloured neighbours. Roots
        // (no coloured neighbour) take colour 0: every component can be
        // shifted independently without disturbing family-freeness, because
        // forbidden subgraphs are connected.
        long long lo = 0, hi = 0;
        bool anchored = false;
        for (int w : g.neighbors(v)) {
            if (!assigned[w]) continue;
            long long wlo = colors[w] - s, whi = colors[w] + s;
            if (!anchored) {
                lo = wlo;
                hi = whi;
                anchored = true;
            } else {
                lo = std::max(lo, wlo);
                hi = std::min(hi, whi);
            }
        }
        if (!anchored) { lo = 0; hi = 0; }
        for (long long col = lo; col <= hi; ++col) {
            if (!budget.spend()) {
                out_of_budget = true;
                return false;
            }
            if (!ctx.placement_ok(v, col, colors, assigned)) continue;
            colors[v] = col;
            assigned[v] = 1;
            if (place(depth + 1)) return true;
            assigned[v] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }
};

void normalize_per_component(const Graph& g, Coloring& c) {
    for (const auto& comp : connected_components(g)) {
        long long mn = c.colors[comp[0]];
        for (int v : comp) mn = std::min(mn, c.colors[v]);
        for (int v : comp) c.colors[v] -= mn;
    }
}

}  // namespace

long long acyclic_lower_bound(const Graph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("acyclic_lower_bound: graph has no edges");
    // In a colouring with at most floor(|E|/|V| + 1) colours some bichromatic
    // subgraph averages degree >= 2 and therefore carries a cycle.
    return (half_average_degree(g) + Rational(1)).floor() + 1;
}

SolveResult chromatic_number(const Graph& g, const ForbiddenFamily& f,
                             SearchBudget* budget) {
    SearchBudget local(kDefaultColorBudget);
    SearchBudget& b = budget ? *budget : local;

    if (g.vertex_count() == 0) return {0, Coloring{}, true};

    FamilyContext ctx(g, f);
    // For distance-two colouring the conflict structure lives on the square,
    // so branch in square-degree order there.
    auto order = degree_order(
        f.kind() == ForbiddenFamily::Kind::P3 ? ctx.square : g);
    Coloring ub_col = greedy_coloring(g, ctx, order).value_or(all_distinct_coloring(g));
    long long ub = color_count(ub_col);
    long long lb = chromatic_lb(g, f);

    for (long long q = lb; q < ub; ++q) {
        ChromaticSearch search(g, ctx, order, q, b);
        if (search.run())
            return {q, Coloring{std::move(search.colors)}, true};
        if (search.out_of_budget) return {ub, std::move(ub_col), false};
    }
    return {ub, std::move(ub_col), true};
}

SolveResult chromatic_span(const Graph& g, const ForbiddenFamily& f,
                           SearchBudget* budget) {
    SearchBudget local(kDefaultColorBudget);
    SearchBudget& b = budget ? *budget : local;

    if (g.vertex_count() == 0) return {0, Coloring{}, true};
    if (g.edge_count() == 0)
        return {0, Coloring{std::vector<long long>(g.vertex_count(), 0)}, true};

    FamilyContext ctx(g, f);
    auto order = connected_order(g);
    Coloring fallback =
        greedy_coloring(g, ctx, degree_order(g)).value_or(all_distinct_coloring(g));
    normalize_per_component(g, fallback);
    long long fallback_span = span(g, fallback);

    // span >= ceil((chi - 1) / 2) since folding a span-s colouring needs at
    // most 2s+1 colours.
    long long lb = std::max<long long>(1, chromatic_lb(g, f) / 2);

    for (long long s = lb; s < fallback_span; ++s) {
        SpanSearch search(g, ctx, order, s, b);
        if (search.run()) {
            Coloring w{std::move(search.colors)};
            normalize_per_component(g, w);
            return {s, std::move(w), true};
        }
        if (search.out_of_budget) return {fallback_span, std::move(fallback), false};
    }
    return {fallback_span, std::move(fallback), true};
}

namespace {

// L(p,1) searches share the structure of the family searches but carry both
// the separation constraint at distance one and distinctness at distance two.
struct Lp1Context {
    const Graph& g;
    Graph square;
    int p;

    Lp1Context(const Graph& g_, int p_) : g(g_), square(power(g_, 2)), p(p_) {}

    bool placement_ok(int v, long long col, const std::vector<long long>& colors,
                      const std::vector<char>& assigned) const {
        for (int w : g.neighbors(v))
            if (assigned[w] && std::llabs(colors[w] - col) < p) return false;
        for (int w : square.neighbors(v))
            if (assigned[w] && colors[w] == col) return false;
        return true;
    }
};

struct Lp1SpanSearch {
    const Graph& g;
    const Lp1Context& ctx;
    const std::vector<int>& order;
    long long s;
    SearchBudget& budget;
    std::vector<long long> colors;
    std::vector<char> assigned;
    bool out_of_budget = false;

    Lp1SpanSearch(const Graph& g_, const Lp1Context& ctx_,
                  const std::vector<int>& order_, long long s_, SearchBudget& b)
        : g(g_), ctx(ctx_), order(order_), s(s_), budget(b),
          colors(g_.vertex_count(), 0), assigned(g_.vertex_count(), 0) {}

    bool place(std::size_t depth) {
        if (depth == order.size()) return true;
        int v = order[depth];
        long long lo = 0, hi = 0;
        bool anchored = false;
        for (int w : g.neighbors(v)) {
            if (!assigned[w]) continue;
            if (!anchored) {
                lo = colors[w] - s;
                hi = colors[w] + s;
                anchored = true;
            } else {
                lo = std::max(lo, colors[w] - s);
                hi = std::min(hi, colors[w] + s);
            }
        }
        if (!anchored) { lo = 0; hi = 0; }
        for (long long col = lo; col <= hi; ++col) {
            if (!budget.spend()) {
                out_of_budget = true;
                return false;
            }
            if (!ctx.placement_ok(v, col, colors, assigned)) continue;
            colors[v] = col;
            assigned[v] = 1;
            if (place(depth + 1)) return true;
            assigned[v] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }
};

struct Lp1RangeSearch {
    const Graph& g;
    const Lp1Context& ctx;
    const std::vector<int>& order;
    long long r;
    SearchBudget& budget;
    std::vector<long long> colors;
    std::vector<char> assigned;
    bool out_of_budget = false;

    Lp1RangeSearch(const Graph& g_, const Lp1Context& ctx_,
                   const std::vector<int>& order_, long long r_, SearchBudget& b)
        : g(g_), ctx(ctx_), order(order_), r(r_), budget(b),
          colors(g_.vertex_count(), 0), assigned(g_.vertex_count(), 0) {}

    bool place(std::size_t depth) {
        if (depth == order.size()) return true;
        int v = order[depth];
        for (long long col = 0; col <= r; ++col) {
            if (!budget.spend()) {
                out_of_budget = true;
                return false;
            }
            if (!ctx.placement_ok(v, col, colors, assigned)) continue;
            colors[v] = col;
            assigned[v] = 1;
            if (place(depth + 1)) return true;
            assigned[v] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }
};

// p times a greedy distance-two colouring: separation >= p on edges,
// distinct at distance two. Always a valid L(p,1) labelling.
Coloring scaled_greedy_lp1(const Graph& g, int p) {
    FamilyContext ctx(g, ForbiddenFamily::p3());
    Coloring c = greedy_coloring(g, ctx, degree_order(g)).value();
    for (auto& x : c.colors) x *= p;
    return c;
}

}  // namespace

SolveResult min_lp1_span(const Graph& g, int p, SearchBudget* budget) {
    if (p < 1) throw std::invalid_argument("min_lp1_span: need p >= 1");
    SearchBudget local(kDefaultColorBudget);
    SearchBudget& b = budget ? *budget : local;

    if (g.vertex_count() == 0) return {0, Coloring{}, true};
    if (g.edge_count() == 0)
        return {0, Coloring{std::vector<long long>(g.vertex_count(), 0)}, true};

    Lp1Context ctx(g, p);
    auto order = connected_order(g);
    Coloring fallback = scaled_greedy_lp1(g, p);
    normalize_per_component(g, fallback);
    long long fallback_span = lp1_span(g, fallback);

    // Every L(p,1) labelling is a distance-two colouring, so the edge span
    // is at least ceil((max_degree+1-1)/2); and at least p outright.
    long long lb = std::max<long long>(p, (g.max_degree() + 1) / 2);

    for (long long s = lb; s < fallback_span; ++s) {
        Lp1SpanSearch search(g, ctx, order, s, b);
        if (search.place(0)) {
            Coloring w{std::move(search.colors)};
            normalize_per_component(g, w);
            return {s, std::move(w), true};
        }
        if (search.out_of_budget) return {fallback_span, std::move(fallback), false};
    }
    return {fallback_span, std::move(fallback), true};
}

SolveResult min_lp1_range(const Graph& g, int p, SearchBudget* budget) {
    if (p < 1) throw std::invalid_argument("min_lp1_range: need p >= 1");
    SearchBudget local(kDefaultColorBudget);
    SearchBudget& b = budget ? *budget : local;

    if (g.vertex_count() == 0) return {0, Coloring{}, true};
    if (g.edge_count() == 0)
        return {0, Coloring{std::vector<long long>(g.vertex_count(), 0)}, true};

    Lp1Context ctx(g, p);
    auto order = degree_order(g);
    Coloring fallback = scaled_greedy_lp1(g, p);
    long long mn = *std::min_element(fallback.colors.begin(), fallback.colors.end());
    for (auto& x : fallback.colors) x -= mn;
    long long fallback_range = lp1_range(g, fallback);

    // range >= max_degree: distance-two distinctness forces a vertex and its
    // neighbours onto max_degree+1 different labels; and >= p outright.
    long long lb = std::max<long long>(p, g.max_degree());

    for (long long r = lb; r < fallback_range; ++r) {
        Lp1RangeSearch search(g, ctx, order, r, b);
        if (search.place(0)) {
            Coloring w{std::move(search.colors)};
            long long wm = *std::min_element(w.colors.begin(), w.colors.end());
            for (auto& x : w.colors) x -= wm;
            return {r, std::move(w), true};
        }
        if (search.out_of_budget) return {fallback_range, std::move(fallback), false};
    }
    return {fallback_range, std::move(fallback), true};
}

}  // namespace prodcolor
