#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "sepspace/embedding.hpp"

using namespace sepspace;

namespace {

PlanarEmbedding cycle_embedding(std::size_t n) {
    PlanarEmbedding emb(n);
    for (Vertex v = 0; v < n; ++v) {
        Vertex prev = static_cast<Vertex>((v + n - 1) % n);
        Vertex next = static_cast<Vertex>((v + 1) % n);
        emb.set_rotation(v, {prev, next});
    }
    return emb;
}

} // namespace

TEST_CASE("triangle faces all have length 3") {
    PlanarEmbedding tri = cycle_embedding(3);
    for (Vertex v = 0; v < 3; ++v) {
        auto walk = trace_face(tri, {v, static_cast<Vertex>((v + 1) % 3)});
        CHECK(walk.size() == 3);
    }
    CHECK(all_faces(tri).size() == 2);
    CHECK(euler_ok(tri));
}

TEST_CASE("C4 has two faces of length 4") {
    PlanarEmbedding c4 = cycle_embedding(4);
    auto faces = all_faces(c4);
    REQUIRE(faces.size() == 2);
    CHECK(faces[0].size() == 4);
    CHECK(faces[1].size() == 4);
    CHECK(euler_ok(c4));
}

TEST_CASE("dart not in embedding is reported") {
    PlanarEmbedding tri = cycle_embedding(3);
    CHECK_THROWS_AS(trace_face(tri, {0, 0}), Error);
}

TEST_CASE("face lengths sum to twice the edge count") {
    // wheel embedding: hub 0, rim 1..6 counterclockwise, hub rotation clockwise
    const std::size_t k = 6;
    PlanarEmbedding emb(k + 1);
    std::vector<Vertex> hub;
    for (Vertex i = static_cast<Vertex>(k); i >= 1; --i) hub.push_back(i);
    emb.set_rotation(0, hub);
    for (Vertex i = 1; i <= k; ++i) {
        Vertex prev = i == 1 ? static_cast<Vertex>(k) : i - 1;
        Vertex next = i == k ? 1 : i + 1;
        emb.set_rotation(i, {prev, 0, next});
    }
    std::size_t total = 0;
    for (const auto& f : all_faces(emb)) total += f.size();
    CHECK(total == 2 * emb.edge_count());
    CHECK(euler_ok(emb));
}

TEST_CASE("triangle is already triangulated") {
    auto t = triangulate(cycle_embedding(3));
    CHECK(t.fill_edges.empty());
    CHECK(euler_ok(t.full));
}

TEST_CASE("C4 gains exactly the chord {0,2}") {
    auto t = triangulate(cycle_embedding(4));
    REQUIRE(t.fill_edges.size() == 1);
    CHECK(t.fill_edges[0] == std::make_pair(Vertex(0), Vertex(2)));
    CHECK(euler_ok(t.full));
    // the untouched outer face still has length 4
    bool saw_square = false;
    for (const auto& f : all_faces(t.full)) saw_square |= f.size() == 4;
    CHECK(saw_square);
}

TEST_CASE("C5 gains two chords, both at vertex 0") {
    auto t = triangulate(cycle_embedding(5));
    REQUIRE(t.fill_edges.size() == 2);
    for (auto [u, v] : t.fill_edges) {
        CHECK(u == 0);
        CHECK((v == 2 || v == 3));
    }
    CHECK(euler_ok(t.full));
}

TEST_CASE("every non-outer face of a triangulation is a triangle") {
    // 3x3 grid embedding from coordinates
    const int side = 3;
    PlanarEmbedding emb(side * side);
    auto id = [&](int r, int c) { return static_cast<Vertex>(r * side + c); };
    for (int r = 0; r < side; ++r) {
        for (int c = 0; c < side; ++c) {
            // clockwise around (r, c): up, right, down, left
            std::vector<Vertex> rot;
            if (r + 1 < side) rot.push_back(id(r + 1, c));
            if (c + 1 < side) rot.push_back(id(r, c + 1));
            if (r > 0) rot.push_back(id(r - 1, c));
            if (c > 0) rot.push_back(id(r, c - 1));
            emb.set_rotation(id(r, c), rot);
        }
    }
    REQUIRE(euler_ok(emb));
    auto t = triangulate(emb);
    REQUIRE(euler_ok(t.full));
    auto faces = all_faces(t.full);
    std::size_t non_triangle = 0;
    for (const auto& f : faces)
        if (f.size() != 3) ++non_triangle;
    CHECK(non_triangle <= 1); // only the designated outer face
    CHECK(canonical_cycle(t.outer_face) == t.outer_face);
}

TEST_CASE("completing the outer face yields a maximal planar edge count") {
    auto ct = complete_triangulation(cycle_embedding(5));
    CHECK(ct.full.edge_count() == 3 * 5 - 6);
    for (const auto& f : all_faces(ct.full)) CHECK(f.size() == 3);
}

TEST_CASE("trees triangulate through the ear fallback") {
    // star K_{1,3}: every face walk repeats the hub
    PlanarEmbedding star(4);
    star.set_rotation(0, {1, 2, 3});
    star.set_rotation(1, {0});
    star.set_rotation(2, {0});
    star.set_rotation(3, {0});
    REQUIRE(euler_ok(star));
    auto t = triangulate(star);
    CHECK(euler_ok(t.full));
    std::size_t non_triangle = 0;
    for (const auto& f : all_faces(t.full))
        if (f.size() != 3) ++non_triangle;
    CHECK(non_triangle <= 1);
}

TEST_CASE("canonical cycle picks the lexicographically least rotation") {
    std::vector<Vertex> walk{3, 1, 2};
    auto canon = canonical_cycle(walk);
    CHECK(canon == std::vector<Vertex>{1, 2, 3});
    // reversal is allowed
    std::vector<Vertex> walk2{2, 1, 3};
    CHECK(canonical_cycle(walk2) == std::vector<Vertex>{1, 2, 3});
}
