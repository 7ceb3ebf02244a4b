#include "prodcolor/product.hpp"

#include <stdexcept>

namespace prodcolor {

int ProductGraph::vertex_at(const std::vector<int>& coord) const {
    if (coord.size() != factors.size())
        throw std::invalid_argument("vertex_at: wrong coordinate count");
    long long idx = 0;
    for (std::size_t i = 0; i < coord.size(); ++i) {
        int n = factors[i].vertex_count();
        if (coord[i] < 0 || coord[i] >= n)
            throw std::invalid_argument("vertex_at: coordinate out of range");
        idx = idx * n + coord[i];
    }
    return (int)idx;
}

int ProductGraph::edge_dimension(int u, int v) const {
    if (!graph.has_edge(u, v))
        throw std::invalid_argument("edge_dimension: not an edge of the product");
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (coords[u][i] != coords[v][i]) return (int)i;
    throw std::logic_error("edge_dimension: endpoints share all coordinates");
}

Graph hypercube(int d) {
    if (d < 0) throw std::invalid_argument("hypercube: need d >= 0");
    if (d == 0) return Graph(1, {});
    std::vector<Graph> f((std::size_t)d, complete(2));
    return cartesian_product(f).graph;
}

ProductGraph cartesian_product(const std::vector<Graph>& factors) {
    if (factors.empty())
        throw std::invalid_argument("cartesian_product: need at least one factor");
    long long total = 1;
    for (const auto& f : factors) {
        if (f.vertex_count() == 0)
            throw std::invalid_argument("cartesian_product: factor with no vertices");
        total *= f.vertex_count();
        if (total > 50'000'000)
            throw std::invalid_argument("cartesian_product: product too large");
    }

    int d = (int)factors.size();
    int n = (int)total;
    std::vector<std::vector<int>> coords(n, std::vector<int>(d));
    for (int v = 0; v < n; ++v) {
        int rem = v;
        for (int i = d - 1; i >= 0; --i) {
            int ni = factors[i].vertex_count();
            coords[v][i] = rem % ni;
            rem /= ni;
        }
    }

    // stride[i] = index step when coordinate i changes by one
    std::vector<long long> stride(d, 1);
    for (int i = d - 2; i >= 0; --i)
        stride[i] = stride[i + 1] * factors[i + 1].vertex_count();

    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i)
            for (int w : factors[i].neighbors(coords[v][i]))
                if (w > coords[v][i])
                    edges.push_back({v, (int)(v + (long long)(w - coords[v][i]) * stride[i])});

    ProductGraph p;
    p.factors = factors;
    p.graph = Graph(n, std::move(edges));
    p.coords = std::move(coords);
    return p;
}

}  // namespace prodcolor
