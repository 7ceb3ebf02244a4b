#pragma once

#include <utility>
#include <vector>

#include "prodcolor/rational.hpp"

namespace prodcolor {

// Finite simple undirected graph on vertices 0..n-1. Edges are stored
// normalized (u < v, lexicographically sorted) and adjacency lists sorted,
// so all iteration orders are deterministic.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return (int)adj_[v].size(); }
    int max_degree() const;
    bool has_edge(int u, int v) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

Graph path(int n);      // n >= 1 vertices, edges i..i+1
Graph cycle(int n);     // n >= 3
Graph complete(int n);  // n >= 1
Graph hypercube(int d); // d >= 0, built as a product of d copies of complete(2)

// Tree on n vertices given as an explicit edge list; rejects inputs that are
// not trees (wrong edge count, disconnected, or cyclic).
Graph tree_from_edges(int n, const std::vector<std::pair<int, int>>& edge_list);

// k-th power: same vertices, edge uv iff 1 <= dist(u,v) <= k in g.
Graph power(const Graph& g, int k);

// BFS distances from src; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_tree(const Graph& g);

// |E| / |V| as an exact rational (graph must have at least one vertex).
Rational half_average_degree(const Graph& g);

// Vertex order of C_n that embeds the cycle into the square of a path:
// alternately take the smallest and largest unused cycle vertex, so cycle
// neighbours end up at most two positions apart. Returns order[pos] = vertex.
std::vector<int> cycle_in_path_square_order(int n);

}  // namespace prodcolor
