#pragma once

#include <vector>

#include "prodcolor/graph.hpp"

namespace prodcolor {

// Cartesian product of graphs, keeping the factor structure around so that
// callers can map between product vertices and coordinate tuples and can ask
// which dimension a product edge lives in.
//
// Vertex numbering is row-major with factor 0 varying slowest:
//   index = ((c0 * n1 + c1) * n2 + c2) * ...
struct ProductGraph {
    std::vector<Graph> factors;
    Graph graph;
    std::vector<std::vector<int>> coords;  // coords[v][i] = i-th coordinate of v

    int dimension() const { return (int)factors.size(); }
    int vertex_at(const std::vector<int>& coord) const;

    // Index of the unique coordinate in which the endpoints of an edge differ;
    // throws if uv is not an edge of the product.
    int edge_dimension(int u, int v) const;
};

// factors must be nonempty and every factor must have at least one vertex.
ProductGraph cartesian_product(const std::vector<Graph>& factors);

}  // namespace prodcolor
