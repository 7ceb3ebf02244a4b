#include "prodcolor/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace prodcolor {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
    : n_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), target);
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, std::move(e));
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    e.push_back({0, n - 1});
    return Graph(n, std::move(e));
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph(n, std::move(e));
}

Graph tree_from_edges(int n, const std::vector<std::pair<int, int>>& edge_list) {
    Graph g(n, edge_list);
    if (!is_tree(g)) throw std::invalid_argument("tree_from_edges: edge list is not a tree");
    return g;
}

Graph power(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("power: need k >= 1");
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> e;
    for (int s = 0; s < n; ++s) {
        auto dist = bfs_distances(g, s);
        for (int v = s + 1; v < n; ++v)
            if (dist[v] >= 1 && dist[v] <= k) e.push_back({s, v});
    }
    return Graph(n, std::move(e));
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    if (src < 0 || src >= g.vertex_count())
        throw std::invalid_argument("bfs_distances: source out of range");
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return connected_components(g).size() == 1;
}

bool is_bipartite(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (side[w] < 0) {
                    side[w] = side[v] ^ 1;
                    q.push(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 &&
           g.edge_count() == (std::size_t)(g.vertex_count() - 1) && is_connected(g);
}

Rational half_average_degree(const Graph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("half_average_degree: empty graph");
    return Rational((long long)g.edge_count(), g.vertex_count());
}

std::vector<int> cycle_in_path_square_order(int n) {
    if (n < 3) throw std::invalid_argument("cycle_in_path_square_order: need n >= 3");
    std::vector<int> order;
    order.reserve(n);
    int lo = 0, hi = n - 1;
    // 0, n-1, 1, n-2, ...: positions of cycle neighbours differ by at most 2.
    while ((int)order.size() < n) {
        order.push_back(lo++);
        if ((int)order.size() < n) order.push_back(hi--);
    }
    return order;
}

}  // namespace prodcolor
