#include "sepspace/embedding.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace sepspace {

namespace {

inline std::uint64_t dart_key(Vertex t, Vertex h) {
    return (std::uint64_t(t) << 32) | h;
}

inline std::uint64_t edge_key(Vertex u, Vertex v) {
    return u < v ? dart_key(u, v) : dart_key(v, u);
}

// per-vertex neighbor -> rotation position, for O(log d) successor lookups
struct RotationIndex {
    std::vector<std::vector<std::pair<Vertex, std::uint32_t>>> at;

    explicit RotationIndex(const PlanarEmbedding& emb) : at(emb.order()) {
        for (Vertex v = 0; v < emb.order(); ++v) {
            const auto& rot = emb.rotation(v);
            at[v].reserve(rot.size());
            for (std::uint32_t i = 0; i < rot.size(); ++i) at[v].emplace_back(rot[i], i);
            std::sort(at[v].begin(), at[v].end());
        }
    }

    std::uint32_t pos(Vertex v, Vertex u) const {
        const auto& lst = at[v];
        auto it = std::lower_bound(lst.begin(), lst.end(),
                                   std::make_pair(u, std::uint32_t(0)));
        require(it != lst.end() && it->first == u, "DART_NOT_FOUND",
                "no edge {" + std::to_string(v) + "," + std::to_string(u) +
                    "} in the embedding");
        return it->second;
    }
};

} // namespace

PlanarEmbedding PlanarEmbedding::with_sorted_rotations(const UndirectedGraph& g) {
    PlanarEmbedding emb(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        emb.set_rotation(v, g.neighbors(v)); // already sorted
    }
    return emb;
}

std::size_t PlanarEmbedding::edge_count() const {
    std::size_t darts = 0;
    for (const auto& r : rotation_) darts += r.size();
    return darts / 2;
}

bool PlanarEmbedding::has_edge(Vertex u, Vertex v) const {
    if (u >= order() || v >= order()) return false;
    const auto& r = rotation_[u];
    return std::find(r.begin(), r.end(), v) != r.end();
}

Vertex PlanarEmbedding::cw_next(Vertex v, Vertex u) const {
    const auto& rot = rotation_[v];
    for (std::size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == u) return rot[(i + 1) % rot.size()];
    raise("DART_NOT_FOUND", "no edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "} in the embedding");
}

UndirectedGraph PlanarEmbedding::to_graph() const {
    UndirectedGraph g(order());
    for (Vertex v = 0; v < order(); ++v)
        for (Vertex u : rotation_[v])
            if (v < u) g.add_edge(v, u);
    return g;
}

PlanarEmbedding PlanarEmbedding::induced(const std::vector<Vertex>& keep,
                                         std::vector<Vertex>* old_id) const {
    std::vector<std::uint32_t> new_id(order(), UINT32_MAX);
    for (std::size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<std::uint32_t>(i);
    PlanarEmbedding sub(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        std::vector<Vertex> rot;
        for (Vertex u : rotation_[keep[i]])
            if (new_id[u] != UINT32_MAX) rot.push_back(new_id[u]);
        sub.set_rotation(static_cast<Vertex>(i), std::move(rot));
    }
    if (coordinates) {
        std::vector<Point> pts(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) pts[i] = (*coordinates)[keep[i]];
        sub.coordinates = std::move(pts);
    }
    if (old_id) *old_id = keep;
    return sub;
}

std::vector<Vertex> trace_face(const PlanarEmbedding& emb, Dart start) {
    require(emb.has_edge(start.tail, start.head), "DART_NOT_FOUND",
            "dart (" + std::to_string(start.tail) + "," +
                std::to_string(start.head) + ") is not in the embedding");
    std::vector<Vertex> walk;
    Dart d = start;
    std::size_t cap = 2 * emb.edge_count() + 1;
    do {
        walk.push_back(d.tail);
        d = Dart{d.head, emb.cw_next(d.head, d.tail)};
        require(walk.size() <= cap, "INVALID_EMBEDDING",
                "face walk does not close; rotation system is inconsistent");
    } while (!(d == start));
    return walk;
}

std::vector<std::vector<Dart>> all_faces(const PlanarEmbedding& emb) {
    RotationIndex idx(emb);
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::vector<Dart>> faces;
    for (Vertex v = 0; v < emb.order(); ++v) {
        for (Vertex u : emb.rotation(v)) {
            if (seen.count(dart_key(v, u))) continue;
            std::vector<Dart> walk;
            Dart d{v, u};
            do {
                walk.push_back(d);
                seen.insert(dart_key(d.tail, d.head));
                const auto& rot = emb.rotation(d.head);
                Vertex next = rot[(idx.pos(d.head, d.tail) + 1) % rot.size()];
                d = Dart{d.head, next};
            } while (!(d.tail == v && d.head == u));
            faces.push_back(std::move(walk));
        }
    }
    return faces;
}

bool euler_ok(const PlanarEmbedding& emb) {
    UndirectedGraph g = emb.to_graph();
    std::vector<char> alive(g.order(), 1);
    std::vector<std::uint32_t> comp;
    std::size_t k = components(g, alive, comp);
    std::vector<std::int64_t> vcount(k, 0), ecount(k, 0), fcount(k, 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        vcount[comp[v]] += 1;
        ecount[comp[v]] += static_cast<std::int64_t>(g.neighbors(v).size());
    }
    for (auto& e : ecount) e /= 2;
    for (const auto& face : all_faces(emb)) fcount[comp[face.front().tail]] += 1;
    for (std::size_t c = 0; c < k; ++c) {
        if (vcount[c] == 1) continue; // isolated vertex, no faces traced
        if (vcount[c] - ecount[c] + fcount[c] != 2) return false;
    }
    return true;
}

std::vector<Vertex> canonical_cycle(const std::vector<Vertex>& walk) {
    if (walk.empty()) return {};
    const std::size_t n = walk.size();
    std::vector<Vertex> best;
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<Vertex> cand(n);
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t j = dir == 0 ? (s + i) % n : (s + n - i) % n;
                cand[i] = walk[j];
            }
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    return best;
}

namespace {

struct FaceSplitter {
    std::unordered_set<std::uint64_t> edges;
    std::vector<std::pair<Vertex, Vertex>> fill;
    std::vector<std::vector<Vertex>> final_faces;

    bool edge_present(Vertex a, Vertex b) const { return edges.count(edge_key(a, b)) != 0; }

    // Reduce one closed walk to triangles by chord insertion. Fan steps from
    // the lowest-indexed vertex are preferred; ears and general splits cover
    // faces whose fan chords already exist elsewhere or repeat vertices.
    void reduce(std::vector<Vertex> walk) {
        std::vector<std::vector<Vertex>> work{std::move(walk)};
        while (!work.empty()) {
            std::vector<Vertex> w = std::move(work.back());
            work.pop_back();
            const std::size_t len = w.size();
            if (len <= 3) {
                final_faces.push_back(std::move(w));
                continue;
            }
            auto valid = [&](std::size_t i, std::size_t j) {
                return w[i] != w[j] && !edge_present(w[i], w[j]);
            };
            std::size_t ci = len, cj = len;
            // fan step anchored at the lowest-indexed vertex
            std::size_t p = static_cast<std::size_t>(
                std::min_element(w.begin(), w.end()) - w.begin());
            if (valid(p, (p + 2) % len)) {
                ci = p;
                cj = (p + 2) % len;
            } else {
                for (std::size_t i = 0; i < len && ci == len; ++i)
                    if (valid(i, (i + 2) % len)) { ci = i; cj = (i + 2) % len; }
                for (std::size_t i = 0; i < len && ci == len; ++i)
                    for (std::size_t d = 2; d + 2 <= len && ci == len; ++d)
                        if (valid(i, (i + d) % len)) { ci = i; cj = (i + d) % len; }
            }
            require(ci != len, "TRIANGULATION_STUCK",
                    "no admissible chord in a face of length " + std::to_string(len));
            if (ci > cj) std::swap(ci, cj); // ensure ci < cj as positions
            edges.insert(edge_key(w[ci], w[cj]));
            fill.emplace_back(std::min(w[ci], w[cj]), std::max(w[ci], w[cj]));
            std::vector<Vertex> a(w.begin() + ci, w.begin() + cj + 1);
            std::vector<Vertex> b(w.begin() + cj, w.end());
            b.insert(b.end(), w.begin(), w.begin() + ci + 1);
            work.push_back(std::move(a));
            work.push_back(std::move(b));
        }
    }
};

struct TriangulationResult {
    PlanarEmbedding full;
    std::vector<std::pair<Vertex, Vertex>> fill;
    std::vector<Vertex> outer;
};

TriangulationResult triangulate_impl(const PlanarEmbedding& emb, bool keep_outer_open) {
    require(emb.order() >= 3, "PRECONDITION",
            "triangulation needs at least 3 vertices");
    {
        UndirectedGraph g = emb.to_graph();
        std::vector<char> alive(g.order(), 1);
        std::vector<std::uint32_t> comp;
        require(components(g, alive, comp) == 1, "DISCONNECTED_INPUT",
                "triangulation requires a connected embedding");
    }

    auto faces = all_faces(emb);
    std::vector<std::vector<Vertex>> walks;
    walks.reserve(faces.size());
    for (const auto& f : faces) {
        std::vector<Vertex> w;
        w.reserve(f.size());
        for (const Dart& d : f) w.push_back(d.tail);
        walks.push_back(std::move(w));
    }

    std::size_t outer_idx = 0;
    for (std::size_t i = 1; i < walks.size(); ++i) {
        if (walks[i].size() > walks[outer_idx].size())
            outer_idx = i;
        else if (walks[i].size() == walks[outer_idx].size() &&
                 canonical_cycle(walks[i]) < canonical_cycle(walks[outer_idx]))
            outer_idx = i;
    }

    FaceSplitter splitter;
    for (Vertex v = 0; v < emb.order(); ++v)
        for (Vertex u : emb.rotation(v))
            if (v < u) splitter.edges.insert(edge_key(v, u));

    for (std::size_t i = 0; i < walks.size(); ++i) {
        if (keep_outer_open && i == outer_idx) {
            splitter.final_faces.push_back(walks[i]);
            continue;
        }
        splitter.reduce(walks[i]);
    }

    // Rebuild rotations from the final faces: each dart (a,b) followed by
    // (b,c) in some face pins c as the clockwise successor of a at b.
    std::vector<std::unordered_map<Vertex, Vertex>> succ(emb.order());
    for (const auto& w : splitter.final_faces) {
        const std::size_t len = w.size();
        for (std::size_t t = 0; t < len; ++t) {
            Vertex a = w[t];
            Vertex b = w[(t + 1) % len];
            Vertex c = w[(t + 2) % len];
            succ[b][a] = c;
        }
    }
    PlanarEmbedding full(emb.order());
    for (Vertex v = 0; v < emb.order(); ++v) {
        if (succ[v].empty()) continue;
        std::vector<Vertex> rot;
        Vertex start = succ[v].begin()->first;
        Vertex cur = start;
        do {
            rot.push_back(cur);
            auto it = succ[v].find(cur);
            require(it != succ[v].end(), "INVALID_EMBEDDING",
                    "rotation reconstruction broke at vertex " + std::to_string(v));
            cur = it->second;
            require(rot.size() <= succ[v].size(), "INVALID_EMBEDDING",
                    "rotation at vertex " + std::to_string(v) + " does not close");
        } while (cur != start);
        require(rot.size() == succ[v].size(), "INVALID_EMBEDDING",
                "rotation at vertex " + std::to_string(v) + " splits into several cycles");
        full.set_rotation(v, std::move(rot));
    }
    full.coordinates = emb.coordinates;

    TriangulationResult out;
    out.full = std::move(full);
    out.fill = std::move(splitter.fill);
    out.outer = keep_outer_open ? canonical_cycle(walks[outer_idx]) : std::vector<Vertex>{};
    return out;
}

} // namespace

TriangulatedEmbedding triangulate(const PlanarEmbedding& emb) {
    TriangulationResult r = triangulate_impl(emb, /*keep_outer_open=*/true);
    TriangulatedEmbedding out;
    out.base = emb;
    out.full = std::move(r.full);
    out.fill_edges = std::move(r.fill);
    out.outer_face = std::move(r.outer);
    return out;
}

CompletedTriangulation complete_triangulation(const PlanarEmbedding& emb) {
    TriangulationResult r = triangulate_impl(emb, /*keep_outer_open=*/false);
    return CompletedTriangulation{std::move(r.full), std::move(r.fill)};
}

} // namespace sepspace
