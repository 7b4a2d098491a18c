#pragma once

#include <optional>
#include <vector>

#include "sepspace/embedding.hpp"
#include "sepspace/fraction.hpp"
#include "sepspace/graph.hpp"
#include "sepspace/meter.hpp"

namespace sepspace {

struct PlanarSeparatorResult {
    std::vector<Vertex> s;
    std::vector<Vertex> side1; // pre-binned; callers re-certify via verify_separator
    std::vector<Vertex> side2;
    /// Simple cycles whose union is S (empty entries for articulation or
    /// brute-force pieces that are not cycles).
    std::vector<std::vector<Vertex>> cycles;
    /// Consecutive cycle pairs; second member tells whether the edge exists in
    /// the input embedding (false = chord added while completing the outer face).
    std::vector<std::pair<std::pair<Vertex, Vertex>, bool>> cycle_edges;
    bool degraded = false;
};

/// Weighted cycle separator on a triangulated embedding: BFS tree, then the
/// best balanced fundamental cycle (both open sides <= 2/3). With a
/// `component_budget`, heavy components are re-separated by vertex count until
/// every component of full-minus-S has at most that many vertices.
PlanarSeparatorResult planar_separator(const TriangulatedEmbedding& temb,
                                       const WeightFn& w, WorkspaceMeter& meter,
                                       std::optional<std::size_t> component_budget = {});

} // namespace sepspace
