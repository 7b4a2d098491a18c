#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sepspace/embedding.hpp"
#include "sepspace/graph.hpp"
#include "sepspace/meter.hpp"

namespace sepspace {

/// Unit disks with directed tangency arcs. Tangency tolerance is 1e-9 on the
/// center distance; overlapping disks are rejected on build.
struct DiskSet {
    static constexpr double tangency_eps = 1e-9;

    std::vector<double> x, y;   // centers, radius 1 each
    DirectedGraph arcs;         // tangency digraph
    UndirectedGraph touch;      // undirected tangency graph

    std::size_t size() const { return x.size(); }

    static DiskSet build(std::vector<double> xs, std::vector<double> ys,
                         const std::vector<Arc>& arcs, const std::vector<Arc>& biarcs);
};

struct SweepLine {
    int axis = 0;       // 0: vertical x = coord, 1: horizontal y = coord
    double coord = 0;
    double span_lo = 0; // clipped extent along the line
    double span_hi = 0;
    // recorded sweep statistics for re-validation
    std::uint32_t step_disks = 0;   // working-subset size at creation
    std::uint32_t crossed = 0;      // disks intersected by the line
    std::uint32_t side_lo = 0, side_hi = 0;
    std::uint32_t tangencies = 0;   // edges within the working subset
};

struct RectSubdivision {
    struct Cell {
        double lo[2], hi[2];
        int side_line[4] = {-1, -1, -1, -1}; // left,bottom,right,top line ids
        std::vector<Vertex> interior;        // fully-interior disks
        bool leaf = true;
        int line = -1;                       // split line id for non-leaves
        int child[2] = {-1, -1};
    };
    std::vector<Cell> cells;          // cell 0 = root bounding box
    std::vector<SweepLine> lines;
    std::vector<std::uint32_t> leaves;
    std::vector<std::uint32_t> leaf_of_disk; // leaf cell per disk center
};

/// The first admissible axis-parallel line over the subset: crossing at most
/// sweep_constant * sqrt(m'+n') disks with at most ceil(4n'/5) per open side.
/// Vertical candidates run left to right, then horizontal top to bottom.
SweepLine balanced_line(const DiskSet& ds, const std::vector<Vertex>& subset,
                        const RectSubdivision::Cell& bounds, double sweep_constant,
                        WorkspaceMeter& meter);

/// Repeated balanced splits until every cell keeps fewer than n^(1-epsilon)
/// fully-interior disks. Only line coordinates and the cell tree are charged.
RectSubdivision build_subdivision(const DiskSet& ds, double epsilon,
                                  double sweep_constant, WorkspaceMeter& meter);

/// Strict circular interleaving of two position pairs on one rectangle
/// boundary; shared positions never cross.
bool edges_cross(std::uint32_t pos_i, std::uint32_t pos_j, std::uint32_t pos_k,
                 std::uint32_t pos_l);

struct AuxVertex {
    Vertex disk;
    int line;            // stored line the anchor sits on
    double along;        // anchor coordinate along the line (unclamped)
};

struct AuxPlacement {
    std::uint32_t cell;  // leaf cell id
    int side;            // 0 left, 1 bottom, 2 right, 3 top
    std::uint32_t pos;   // anticlockwise ordinal within the cell
    /// Anchor-point rank: disks tangent to the line at the same point share
    /// one group; path-crossing tests use groups so that coincident anchors
    /// count as shared endpoints rather than crossings.
    std::uint32_t group = 0;
};

struct AuxEdge {
    std::uint32_t tail, head; // aux vertex ids
    std::uint32_t cell;
    bool dummy = false;       // same-disk side link
    bool kept = false;        // survives the maximal planar selection
};

struct AuxiliaryGraph {
    std::vector<AuxVertex> vertices;
    std::vector<std::vector<AuxPlacement>> placements;   // per vertex
    std::vector<std::vector<std::uint32_t>> cell_order;  // per leaf: vertex ids ACW
    std::vector<AuxEdge> edges;
    std::vector<std::vector<std::uint32_t>> cell_edges;  // edge ids per leaf
    std::vector<std::vector<std::uint32_t>> out_edges;   // per vertex
    std::vector<std::vector<std::uint32_t>> in_edges;    // per vertex
    std::vector<std::vector<std::uint32_t>> disk_vertices; // per disk

    std::uint32_t position_in(std::uint32_t vertex, std::uint32_t cell) const;
    std::uint32_t group_in(std::uint32_t vertex, std::uint32_t cell) const;
    bool has_aux_edge(std::uint32_t tail, std::uint32_t head) const;
    /// Some aux edge runs from a vertex of `disk_tail` to one of `disk_head`.
    bool has_disk_edge(Vertex disk_tail, Vertex disk_head) const;
    /// Same-cell edges whose underlying paths must intersect: group-level
    /// interleaving with shared disks and shared anchor points exempt.
    bool paths_cross(std::uint32_t edge_a, std::uint32_t edge_b) const;
};

/// Boundary vertices per cell in anticlockwise order plus reachability edges
/// resolved by per-cell search (results cached; each resolution is charged as
/// one base-level search).
AuxiliaryGraph build_aux_graph(const DiskSet& ds, const RectSubdivision& subdiv,
                               WorkspaceMeter& meter);

/// Lemma-8 style closure: when e and e' cross inside one cell, the aux graph
/// must also hold tail(e)->head(e') and tail(e')->head(e). Dummy edges carry
/// disk identity rather than a path and are exempt.
bool crossing_closure_check(const AuxiliaryGraph& aux, std::uint32_t edge_a,
                            std::uint32_t edge_b);

/// Marks the kept edges: an edge survives unless some same-cell edge starting
/// earlier in the anticlockwise order crosses it. Returns kept edge ids.
std::vector<std::uint32_t> maximal_planar_subgraph(AuxiliaryGraph& aux);

struct PseudoSeparator {
    std::vector<std::uint32_t> v2;                 // aux vertex ids
    std::vector<std::uint32_t> e2;                 // aux edge ids (real shields/cycle edges)
    std::size_t budget = 0;                        // target component size
    std::size_t size() const { return v2.size() + e2.size(); }
};

/// Pseudo-separator of the subgraph induced on `subset`: triangulated maximal
/// planar subgraph, cycle separator with component budget h^(1-beta), real
/// cycle edges plus up-to-four shield edges per triangulation-only cycle edge.
PseudoSeparator build_pseudo_separator(const AuxiliaryGraph& aux,
                                       const RectSubdivision& subdiv,
                                       const std::vector<std::uint32_t>& subset,
                                       double beta, WorkspaceMeter& meter);

/// Components of H . C (subset minus v2, edges crossing e2 dropped).
std::vector<std::vector<std::uint32_t>> pseudo_components(
    const AuxiliaryGraph& aux, const std::vector<std::uint32_t>& subset,
    const PseudoSeparator& ps);

struct ReachAuxOptions {
    double beta = 0.5;
    std::size_t base_threshold = 64;
    bool check_marks = false;
};

/// Marked-vertex reachability over the auxiliary graph from any source vertex
/// to any target vertex.
bool reach_aux(const AuxiliaryGraph& aux, const RectSubdivision& subdiv,
               const std::vector<std::uint32_t>& sources,
               const std::vector<std::uint32_t>& targets, const ReachAuxOptions& opts,
               WorkspaceMeter& meter);

struct PennyReachOptions {
    double epsilon = 0.5;
    double beta = 0.5;
    double sweep_constant = 4.0;
    std::size_t base_threshold = 64;
};

/// End-to-end pipeline: subdivision, auxiliary graph, pseudo-separator
/// recursion; interior endpoints are lifted to boundary vertices by in-cell
/// search.
bool penny_reach(const DiskSet& ds, Vertex s, Vertex t, const PennyReachOptions& opts,
                 WorkspaceMeter& meter);

/// Pipeline handle that keeps the subdivision and auxiliary graph cached for
/// several queries on one instance.
struct PennyPipeline {
    const DiskSet& ds;
    PennyReachOptions opts;
    RectSubdivision subdiv;
    AuxiliaryGraph aux;

    PennyPipeline(const DiskSet& ds, const PennyReachOptions& opts, WorkspaceMeter& meter);
    bool query(Vertex s, Vertex t, WorkspaceMeter& meter) const;
};

} // namespace sepspace
