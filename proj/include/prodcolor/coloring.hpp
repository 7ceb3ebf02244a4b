#pragma once

#include <vector>

#include "prodcolor/graph.hpp"

namespace prodcolor {

// Total assignment of integer colours to the vertices of some graph;
// colors[v] is the colour of vertex v.
struct Coloring {
    std::vector<long long> colors;
};

// A family of forbidden bichromatic subgraphs. A proper colouring is
// "family-free" when no two colour classes together induce a subgraph
// containing a member of the family.
//
// The built-in kinds have dedicated fast checks:
//   P3         three-vertex path: no vertex may see the same colour twice,
//              i.e. colours must differ up to distance two
//   P4         four-vertex path: every bichromatic subgraph is a star forest
//   EvenCycles all even cycles: every bichromatic subgraph is a forest
// Explicit carries the member list; members must be connected, bipartite and
// have at least three vertices. An empty list forbids nothing, which makes
// the checks plain proper colouring.
class ForbiddenFamily {
public:
    enum class Kind { P3, P4, EvenCycles, Explicit };

    static ForbiddenFamily p3();
    static ForbiddenFamily p4();
    static ForbiddenFamily even_cycles();
    static ForbiddenFamily explicit_list(std::vector<Graph> members);
    static ForbiddenFamily none();  // Explicit with empty list

    Kind kind() const { return kind_; }
    const std::vector<Graph>& members() const { return members_; }

private:
    ForbiddenFamily(Kind k, std::vector<Graph> m) : kind_(k), members_(std::move(m)) {}
    Kind kind_;
    std::vector<Graph> members_;
};

bool is_proper(const Graph& g, const Coloring& c);

// Max |c(u) - c(v)| over edges; requires a proper colouring, 0 when there
// are no edges.
long long span(const Graph& g, const Coloring& c);

long long color_count(const Coloring& c);

// Does the proper colouring avoid every member of the family in every
// bichromatic subgraph? Throws if c is not proper on g.
bool is_f_free(const Graph& g, const Coloring& c, const ForbiddenFamily& f);

// Subgraph containment (not induced): is there an injective map of pattern
// into host preserving edges? Pattern must be connected and nonempty.
bool contains_subgraph(const Graph& host, const Graph& pattern);
// Same, but the image must include the host vertex `anchor`.
bool contains_subgraph_through(const Graph& host, const Graph& pattern, int anchor);

// Vertex labellings with separation p at distance one plus distinctness at
// distance two. For p = 1 this is exactly a P3-free colouring.
bool is_lp1_labelling(const Graph& g, const Coloring& c, int p);
long long lp1_span(const Graph& g, const Coloring& c);   // max difference over edges
long long lp1_range(const Graph& g, const Coloring& c);  // max label - min label

}  // namespace prodcolor
