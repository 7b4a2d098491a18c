#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sepspace/embedding.hpp"
#include "sepspace/geometry.hpp"
#include "sepspace/graph.hpp"
#include "sepspace/meter.hpp"
#include "sepspace/planar_separator.hpp"

namespace sepspace {

/// A set of Jordan regions (disks / simple polygons) with directed arc
/// orientations for every intersecting pair. Pairwise geometry is computed
/// once on build; m is the total number of boundary crossing points.
struct RegionSet {
    std::vector<geom::Shape> shapes;
    WeightFn weights;
    std::vector<Arc> arcs;
    double eps = 1e-9;

    DirectedGraph digraph;                  // intersection graph with input arcs
    std::unordered_map<std::uint64_t, std::vector<geom::Crossing>> crossings;
    std::vector<std::uint32_t> containment_count;
    std::size_t m = 0;

    std::size_t size() const { return shapes.size(); }

    /// Validates general position, arc coverage, and the everyone-intersects-
    /// someone requirement; computes crossings and containments. Sub-instances
    /// carved out of a larger family may waive the isolation check.
    static RegionSet build(std::vector<geom::Shape> shapes, WeightFn weights,
                           std::vector<Arc> arcs, bool allow_isolated = false);
};

enum class RegionClass : std::uint8_t { Heavy, Containment, Interior };

struct RegionPartition {
    std::vector<RegionClass> cls; // per region
    std::vector<Vertex> heavy;    // H: weight above 1/VVm
    std::vector<Vertex> containy; // L: at least VVm/3 containments
    std::vector<Vertex> interior; // I: the rest
};

/// H / L / I partition with exact threshold arithmetic (no square roots are
/// ever evaluated in floating point).
RegionPartition classify_regions(const RegionSet& rs);

struct CrossPoint {
    geom::Vec2 pos;
    std::array<std::int32_t, 2> owner; // owning regions; owner[1] = -1 for B-points
    std::array<double, 2> param;       // boundary parameter per owner
    bool is_b = false;
};

struct CrossingGraph {
    std::vector<CrossPoint> points;
    PlanarEmbedding emb;                             // vertex i = points[i]
    std::vector<std::vector<Vertex>> region_points;  // per region, in boundary order
    std::size_t a_count = 0;
    std::size_t b_count = 0;
};

/// The planar graph of boundary points: A-points are crossings touching at
/// least one interior-class region, B-points are three extra points per
/// interior-class region, edges join consecutive points along each
/// interior-class boundary. Rotations come from boundary tangent angles.
CrossingGraph build_crossing_graph(const RegionSet& rs);

/// Vertex weight of the triangulated crossing graph: each owning region
/// spreads its weight evenly over the d(C) graph points on its boundary.
Frac jordan_weight(const RegionSet& rs, const CrossingGraph& cg, Vertex v);

struct JordanSeparatorResult {
    std::vector<Vertex> separator;   // region ids (Sep(C) plus every non-I region)
    SeparatorCheck check;            // certificate on the region intersection graph
    std::size_t cycle_size = 0;      // crossing-graph separator size
    bool degraded = false;
    bool two_sided_ok = true;        // every surviving region saw one side only
};

/// Full pipeline: classify, build the crossing graph, triangulate, run the
/// weighted planar separator, lift separator points back to regions.
JordanSeparatorResult jordan_separator(const RegionSet& rs, WorkspaceMeter& meter);

} // namespace sepspace
