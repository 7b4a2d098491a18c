#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sepspace/graph.hpp"

namespace sepspace {

/// One directed side of an undirected edge.
struct Dart {
    Vertex tail;
    Vertex head;
    bool operator==(const Dart& o) const { return tail == o.tail && head == o.head; }
};

struct Point {
    double x = 0;
    double y = 0;
};

/// Combinatorial planar embedding: per-vertex clockwise cyclic order of
/// neighbors. Coordinates are optional and only carried for drawing.
class PlanarEmbedding {
public:
    PlanarEmbedding() = default;
    explicit PlanarEmbedding(std::size_t n) : rotation_(n) {}

    /// Build from a graph with rotations taken in sorted-neighbor order
    /// (useful for tests; geometric pipelines supply true rotations).
    static PlanarEmbedding with_sorted_rotations(const UndirectedGraph& g);

    std::size_t order() const { return rotation_.size(); }
    std::size_t edge_count() const;

    /// Neighbor lists in clockwise order; also defines the edge set.
    const std::vector<Vertex>& rotation(Vertex v) const { return rotation_[v]; }
    void set_rotation(Vertex v, std::vector<Vertex> order) { rotation_[v] = std::move(order); }

    bool has_edge(Vertex u, Vertex v) const;

    std::optional<std::vector<Point>> coordinates; // per vertex, if geometric

    /// Clockwise-next neighbor after `u` at `v`; the face-walk successor of
    /// dart (u,v) is (v, cw_next(v, u)).
    Vertex cw_next(Vertex v, Vertex u) const;

    UndirectedGraph to_graph() const;

    /// Induced sub-embedding on `keep` (ids are re-densified; returns the
    /// old-id per new-id map through `old_id`).
    PlanarEmbedding induced(const std::vector<Vertex>& keep,
                            std::vector<Vertex>* old_id = nullptr) const;

private:
    std::vector<std::vector<Vertex>> rotation_;
};

/// The closed walk bounding the face on the fixed side of dart `start`,
/// following the clockwise-next rule until the start dart repeats.
/// Throws DART_NOT_FOUND if the edge is absent from the embedding.
std::vector<Vertex> trace_face(const PlanarEmbedding& emb, Dart start);

/// All faces as dart walks, each dart appearing in exactly one walk.
std::vector<std::vector<Dart>> all_faces(const PlanarEmbedding& emb);

/// Euler check |V| - |E| + |F| = 1 + #components over the whole embedding.
bool euler_ok(const PlanarEmbedding& emb);

/// Lexicographically minimal rotation of a closed vertex walk over both
/// directions; used to pick deterministic outer faces and face identities.
std::vector<Vertex> canonical_cycle(const std::vector<Vertex>& walk);

struct TriangulatedEmbedding {
    PlanarEmbedding base;                        // the input embedding
    PlanarEmbedding full;                        // with fill chords inserted
    std::vector<std::pair<Vertex, Vertex>> fill_edges;
    std::vector<Vertex> outer_face;              // canonical walk left untouched
};

/// Fan-from-lowest-index triangulation of every face except the designated
/// outer one (the longest walk, ties broken by canonical cycle). When a fan
/// chord already exists in the graph the face falls back to ear cuts, which
/// keeps the graph simple. Input must be connected with n >= 3.
TriangulatedEmbedding triangulate(const PlanarEmbedding& emb);

/// Same machinery but also triangulates the outer face; used where a fully
/// triangulated graph is required internally. Extra chords are reported
/// separately from the ones `triangulate` would add.
struct CompletedTriangulation {
    PlanarEmbedding full;
    std::vector<std::pair<Vertex, Vertex>> added;
};
CompletedTriangulation complete_triangulation(const PlanarEmbedding& emb);

} // namespace sepspace
