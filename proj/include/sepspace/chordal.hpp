#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sepspace/graph.hpp"
#include "sepspace/meter.hpp"

namespace sepspace {

/// Directed graph whose underlying undirected graph is chordal; validated on
/// construction via maximum cardinality search plus a zero-fill check.
struct ChordalInstance {
    DirectedGraph g;
    WeightFn w;
    std::vector<Vertex> peo; // perfect elimination ordering found by MCS

    static ChordalInstance validate(DirectedGraph g, WeightFn w);
};

/// All pairs of neighbors of v that are not adjacent to each other.
std::vector<std::pair<Vertex, Vertex>> deficiency(const UndirectedGraph& g, Vertex v);

/// Remove v, add its deficiency as fill edges. Vertex ids are preserved;
/// v keeps its slot but loses all edges.
UndirectedGraph eliminate(const UndirectedGraph& g, Vertex v);

struct PeoResult {
    bool chordal = false;
    std::vector<Vertex> order;          // elimination order when chordal
    std::vector<Vertex> hole;           // chordless >=4 cycle witness otherwise
};

/// Maximum-cardinality-search ordering, accepted iff eliminating along it
/// produces zero fill. On failure returns a chordless cycle witness.
PeoResult find_peo(const UndirectedGraph& g);

/// Fill edges produced by eliminating `order` front to back.
std::vector<std::pair<Vertex, Vertex>> fill_in(const UndirectedGraph& g,
                                               const std::vector<Vertex>& order);

/// Last vertex of a simplicial-outside-C elimination of G[A ∪ C]; adjacent to
/// every vertex of C when each C-vertex has a neighbor in the connected set A.
Vertex find_adjacent_to_all(const UndirectedGraph& g, const std::vector<Vertex>& clique,
                            const std::vector<Vertex>& component);

struct CliqueSeparator {
    std::vector<Vertex> s;
    std::vector<std::pair<Vertex, Frac>> component_weights; // marker -> weight
    bool is_clique = false;
    std::size_t edge_bound = 0; // |S|(|S|-1)/2, must be <= m
};

/// Clique separator: grow S one all-adjacent vertex at a time while some
/// component of G - S has weight above 1/2, dropping S-vertices with no
/// neighbor in the heavy component first. Components are identified by their
/// lowest-index vertex (marker), never stored.
CliqueSeparator chordal_separator(const ChordalInstance& inst, WorkspaceMeter& meter);

/// Markers and weights of the components of G - S. A vertex is a marker iff
/// no lower-indexed vertex outside S is connected to it; connectivity and
/// weighing go through the charged oracle, so algorithm-side storage is O(1).
std::vector<std::pair<Vertex, Frac>> marker_components(const UndirectedGraph& g,
                                                       const WeightFn& w,
                                                       const std::vector<Vertex>& s,
                                                       WorkspaceMeter& meter);

} // namespace sepspace
