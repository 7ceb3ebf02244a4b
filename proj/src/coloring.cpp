#include "prodcolor/coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace prodcolor {

ForbiddenFamily ForbiddenFamily::p3() { return ForbiddenFamily(Kind::P3, {}); }
ForbiddenFamily ForbiddenFamily::p4() { return ForbiddenFamily(Kind::P4, {}); }
ForbiddenFamily ForbiddenFamily::even_cycles() {
    return ForbiddenFamily(Kind::EvenCycles, {});
}

ForbiddenFamily ForbiddenFamily::explicit_list(std::vector<Graph> members) {
    for (const auto& m : members) {
        if (m.vertex_count() < 3)
            throw std::invalid_argument("forbidden subgraphs need at least 3 vertices");
        if (!is_connected(m))
            throw std::invalid_argument("forbidden subgraphs must be connected");
        if (!is_bipartite(m))
            throw std::invalid_argument("forbidden subgraphs must be bipartite");
    }
    return ForbiddenFamily(Kind::Explicit, std::move(members));
}

ForbiddenFamily ForbiddenFamily::none() { return explicit_list({}); }

namespace {

void check_total(const Graph& g, const Coloring& c) {
    if ((int)c.colors.size() != g.vertex_count())
        throw std::invalid_argument("coloring does not cover the vertex set");
}

void check_proper(const Graph& g, const Coloring& c) {
    if (!is_proper(g, c)) throw std::invalid_argument("coloring is not proper");
}

}  // namespace

bool is_proper(const Graph& g, const Coloring& c) {
    check_total(g, c);
    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v]) return false;
    return true;
}

long long span(const Graph& g, const Coloring& c) {
    check_proper(g, c);
    long long s = 0;
    for (auto [u, v] : g.edges())
        s = std::max(s, std::llabs(c.colors[u] - c.colors[v]));
    return s;
}

long long color_count(const Coloring& c) {
    std::set<long long> seen(c.colors.begin(), c.colors.end());
    return (long long)seen.size();
}

namespace {

bool p3_free(const Graph& g, const Coloring& c) {
    // A bichromatic 3-vertex path is a vertex with two equal-coloured
    // neighbours, i.e. colours must be distinct up to distance two.
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<long long> around;
        around.reserve(g.neighbors(v).size());
        for (int w : g.neighbors(v)) around.push_back(c.colors[w]);
        std::sort(around.begin(), around.end());
        if (std::adjacent_find(around.begin(), around.end()) != around.end())
            return false;
    }
    return true;
}

bool p4_free(const Graph& g, const Coloring& c) {
    // A bichromatic 4-vertex path exists iff some edge has both endpoints of
    // degree >= 2 inside its own bichromatic subgraph, i.e. both endpoints
    // see the opposite colour at least twice.
    std::vector<std::unordered_map<long long, int>> seen(g.vertex_count());
    for (auto [u, v] : g.edges()) {
        ++seen[u][c.colors[v]];
        ++seen[v][c.colors[u]];
    }
    for (auto [u, v] : g.edges()) {
        if (seen[u].at(c.colors[v]) >= 2 && seen[v].at(c.colors[u]) >= 2)
            return false;
    }
    return true;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(int a, int b) {  // false when a and b were already joined
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

bool even_cycle_free(const Graph& g, const Coloring& c) {
    // Bichromatic subgraphs are bipartite, so any cycle in one is even;
    // forbidding even cycles = every bichromatic subgraph is a forest.
    std::map<std::pair<long long, long long>, std::vector<std::pair<int, int>>> pairs;
    for (auto [u, v] : g.edges()) {
        long long a = c.colors[u], b = c.colors[v];
        pairs[{std::min(a, b), std::max(a, b)}].push_back({u, v});
    }
    for (const auto& [key, edges] : pairs) {
        Dsu dsu(g.vertex_count());
        for (auto [u, v] : edges)
            if (!dsu.unite(u, v)) return false;
    }
    return true;
}

// Host graph induced by two colour classes.
Graph bichromatic_subgraph(const Graph& g, const Coloring& c, long long a, long long b,
                           std::vector<int>& to_host) {
    to_host.assign(g.vertex_count(), -1);
    std::vector<int> verts;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.colors[v] == a || c.colors[v] == b) {
            to_host[v] = (int)verts.size();
            verts.push_back(v);
        }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (to_host[u] >= 0 && to_host[v] >= 0 && c.colors[u] != c.colors[v])
            edges.push_back({to_host[u], to_host[v]});
    return Graph((int)verts.size(), std::move(edges));
}

// Backtracking subgraph embedding. Pattern vertices are matched in a
// connected order so every new vertex has an already-matched neighbour.
struct Embedder {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> order;        // connected order of pattern vertices
    std::vector<int> anchor_of;    // matched pattern neighbour earlier in order
    std::vector<int> image;        // pattern vertex -> host vertex or -1
    std::vector<char> used;

    Embedder(const Graph& h, const Graph& p, int root) : host(h), pattern(p) {
        order.reserve(p.vertex_count());
        anchor_of.assign(p.vertex_count(), -1);
        std::vector<char> seen(p.vertex_count(), 0);
        order.push_back(root);
        seen[root] = 1;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int w : p.neighbors(order[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    anchor_of[w] = order[i];
                    order.push_back(w);
                }
        image.assign(p.vertex_count(), -1);
        used.assign(h.vertex_count(), 0);
    }

    bool feasible(int pv, int hv) const {
        if (used[hv]) return false;
        if (host.degree(hv) < pattern.degree(pv)) return false;
        for (int pw : pattern.neighbors(pv))
            if (image[pw] >= 0 && !host.has_edge(hv, image[pw])) return false;
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        int pv = order[depth];
        if (anchor_of[pv] < 0) {
            for (int hv = 0; hv < host.vertex_count(); ++hv)
                if (try_at(pv, hv, depth)) return true;
        } else {
            for (int hv : host.neighbors(image[anchor_of[pv]]))
                if (try_at(pv, hv, depth)) return true;
        }
        return false;
    }

    bool try_at(int pv, int hv, std::size_t depth) {
        if (!feasible(pv, hv)) return false;
        image[pv] = hv;
        used[hv] = 1;
        if (extend(depth + 1)) return true;
        image[pv] = -1;
        used[hv] = 0;
        return false;
    }
};

}  // namespace

bool contains_subgraph(const Graph& host, const Graph& pattern) {
    if (pattern.vertex_count() == 0)
        throw std::invalid_argument("contains_subgraph: empty pattern");
    if (!is_connected(pattern))
        throw std::invalid_argument("contains_subgraph: pattern must be connected");
    if (pattern.vertex_count() > host.vertex_count()) return false;
    Embedder e(host, pattern, 0);
    return e.extend(0);
}

bool contains_subgraph_through(const Graph& host, const Graph& pattern, int anchor) {
    if (pattern.vertex_count() == 0)
        throw std::invalid_argument("contains_subgraph_through: empty pattern");
    if (!is_connected(pattern))
        throw std::invalid_argument("contains_subgraph_through: pattern must be connected");
    if (anchor < 0 || anchor >= host.vertex_count())
        throw std::invalid_argument("contains_subgraph_through: anchor out of range");
    if (pattern.vertex_count() > host.vertex_count()) return false;
    // Any embedding that covers `anchor` maps some pattern vertex onto it.
    for (int root = 0; root < pattern.vertex_count(); ++root) {
        Embedder e(host, pattern, root);
        if (e.try_at(root, anchor, 0)) return true;
    }
    return false;
}

bool is_f_free(const Graph& g, const Coloring& c, const ForbiddenFamily& f) {
    check_proper(g, c);
    switch (f.kind()) {
        case ForbiddenFamily::Kind::P3:
            return p3_free(g, c);
        case ForbiddenFamily::Kind::P4:
            return p4_free(g, c);
        case ForbiddenFamily::Kind::EvenCycles:
            return even_cycle_free(g, c);
        case ForbiddenFamily::Kind::Explicit:
            break;
    }
    if (f.members().empty()) return true;
    std::set<std::pair<long long, long long>> pairs;
    for (auto [u, v] : g.edges()) {
        long long a = c.colors[u], b = c.colors[v];
        pairs.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<int> to_host;
    for (auto [a, b] : pairs) {
        Graph sub = bichromatic_subgraph(g, c, a, b, to_host);
        for (const auto& m : f.members())
            if (contains_subgraph(sub, m)) return false;
    }
    return true;
}

bool is_lp1_labelling(const Graph& g, const Coloring& c, int p) {
    if (p < 1) throw std::invalid_argument("is_lp1_labelling: need p >= 1");
    check_total(g, c);
    for (auto [u, v] : g.edges())
        if (std::llabs(c.colors[u] - c.colors[v]) < p) return false;
    return p3_free(g, c);
}

long long lp1_span(const Graph& g, const Coloring& c) {
    check_total(g, c);
    long long s = 0;
    for (auto [u, v] : g.edges())
        s = std::max(s, std::llabs(c.colors[u] - c.colors[v]));
    return s;
}

long long lp1_range(const Graph& g, const Coloring& c) {
    check_total(g, c);
    if (c.colors.empty()) return 0;
    auto [mn, mx] = std::minmax_element(c.colors.begin(), c.colors.end());
    return *mx - *mn;
}

}  // namespace prodcolor
