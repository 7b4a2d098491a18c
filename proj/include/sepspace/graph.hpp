#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sepspace/error.hpp"
#include "sepspace/fraction.hpp"

namespace sepspace {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;

/// Simple digraph over dense vertex ids. Arcs are deduplicated, self-loops
/// rejected. Immutable once built (all queries are const).
class DirectedGraph {
public:
    DirectedGraph() = default;
    explicit DirectedGraph(std::size_t n) : out_(n), in_(n) {}

    static DirectedGraph from_arcs(std::size_t n, const std::vector<Arc>& arcs);

    std::size_t order() const { return out_.size(); }
    std::size_t arc_count() const { return arc_count_; }

    void add_arc(Vertex u, Vertex v);
    bool has_arc(Vertex u, Vertex v) const;

    const std::vector<Vertex>& out(Vertex u) const { return out_[u]; }
    const std::vector<Vertex>& in(Vertex v) const { return in_[v]; }

    std::vector<Arc> arcs() const;

private:
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::size_t arc_count_ = 0;
};

/// Undirected simple graph, adjacency sorted for binary-search membership.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(std::size_t n) : adj_(n) {}

    std::size_t order() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    void add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;

    const std::vector<Vertex>& neighbors(Vertex u) const { return adj_[u]; }

    std::vector<std::pair<Vertex, Vertex>> edges() const;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// Forget orientations: {u,v} present iff (u,v) or (v,u) is an arc.
UndirectedGraph underlying_undirected(const DirectedGraph& g);

/// Certified separator: V = S ∪ V1 ∪ V2, no V1–V2 edge, both sides <= 2/3.
struct Separator {
    std::vector<Vertex> s;
    std::vector<Vertex> v1;
    std::vector<Vertex> v2;
    Frac w1;
    Frac w2;
};

/// Outcome of verify_separator: either a certificate or the first violation.
struct SeparatorCheck {
    bool accepted = false;
    Separator cert;            // valid iff accepted
    std::string violation;     // e.g. REJECTED_BALANCE, non-empty iff rejected
};

/// Checks S against the separator definition. Components of the underlying
/// graph minus S are binned into the two sides: exactly (meet-in-the-middle
/// subset sum) for <= 30 components, first-fit-decreasing beyond that.
SeparatorCheck verify_separator(const DirectedGraph& g, const WeightFn& w,
                                const std::vector<Vertex>& s);

/// Same check when the undirected view is already at hand.
SeparatorCheck verify_separator(const UndirectedGraph& ug, const WeightFn& w,
                                const std::vector<Vertex>& s);

/// Ground truth for every reachability test in the suite: plain BFS over arcs.
bool reach_oracle(const DirectedGraph& g, Vertex s, Vertex t);

/// Connected components of an undirected graph; returns component id per vertex
/// and the number of components. Vertices where `alive` is false are skipped.
std::size_t components(const UndirectedGraph& g, const std::vector<char>& alive,
                       std::vector<std::uint32_t>& comp_id);

} // namespace sepspace
