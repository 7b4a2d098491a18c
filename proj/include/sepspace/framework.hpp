#pragma once

#include <functional>
#include <vector>

#include "sepspace/graph.hpp"
#include "sepspace/meter.hpp"

namespace sepspace {

/// Balanced-separator oracle for a graph class: given the vertex subset the
/// recursion is currently confined to, return a separator of the induced
/// subgraph (ids are the original graph's). Must satisfy verify_separator on
/// the induced subgraph under uniform weights.
using SeparatorOracle =
    std::function<std::vector<Vertex>(const DirectedGraph& g, const std::vector<Vertex>& subset,
                                      WorkspaceMeter& meter)>;

struct ReachOptions {
    std::size_t base_threshold = 64; // direct search at or below this size
    bool check_oracle = false;       // verify every separator (test mode)
    bool check_marks = false;        // assert marked => reachable (test mode)
};

/// Decides s->t reachability by recursive marking over separator vertices:
/// S = oracle(U) ∪ {s,t}; a vertex x of S is marked when some marked y
/// reaches it through a single component of U - S (checked by recursing on
/// component ∪ {x,y}). Charged space per frame is O(|S|) words plus oracle
/// tokens; component membership runs through the charged connectivity oracle.
bool reach_via_separator(const DirectedGraph& g, Vertex s, Vertex t,
                         const SeparatorOracle& oracle, WorkspaceMeter& meter,
                         const ReachOptions& opts = {});

} // namespace sepspace
