#pragma once

#include <string>
#include <vector>

#include "prodcolor/coloring.hpp"
#include "prodcolor/product.hpp"

namespace prodcolor {

// One factor of a graph expression. shape is one of
//   'P' path, 'C' cycle, 'K' complete, 'Q' hypercube, 'F' graph from file.
struct FactorSpec {
    char shape = 'P';
    int size = 1;           // n for P/C/K, dimension for Q; unused for files
    int exponent = 1;       // graph power, applied before the product
    std::string file;       // 'F' only
};

// A parsed graph expression such as "P5", "C7^2" or "P3xP3xC5".
// Powers bind before products. A bare JSON filename loads one graph from
// {"n": int, "edges": [[u,v], ...]}.
struct ParsedGraph {
    std::vector<FactorSpec> factors;
    ProductGraph product;        // always set; single factors become 1-factor products
    std::string canonical;       // normalized spelling of the expression
};

ParsedGraph parse_graph_spec(const std::string& spec);

Graph graph_from_json_text(const std::string& text);
std::string graph_to_json_text(const Graph& g);

// {"colors": [c0, c1, ...]}
Coloring coloring_from_json_text(const std::string& text);
std::string coloring_to_json_text(const Coloring& c);

}  // namespace prodcolor
