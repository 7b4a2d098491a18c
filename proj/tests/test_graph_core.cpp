#include <doctest.h>

#include "sepspace/graph.hpp"
#include "sepspace/instance_gen.hpp"

using namespace sepspace;

TEST_CASE("underlying undirected: single arc and antiparallel pair") {
    DirectedGraph g(2);
    g.add_arc(0, 1);
    UndirectedGraph u = underlying_undirected(g);
    CHECK(u.edge_count() == 1);
    CHECK(u.has_edge(0, 1));

    g.add_arc(1, 0);
    UndirectedGraph u2 = underlying_undirected(g);
    CHECK(u2.edge_count() == 1); // deduplicated
}

TEST_CASE("underlying undirected matches a brute-force pair scan") {
    Rng rng(7);
    const std::size_t n = 20;
    DirectedGraph g(n);
    for (int i = 0; i < 60; ++i) {
        Vertex u = static_cast<Vertex>(rng.below(n));
        Vertex v = static_cast<Vertex>(rng.below(n));
        if (u != v) g.add_arc(u, v);
    }
    UndirectedGraph und = underlying_undirected(g);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            bool expect = u != v && (g.has_arc(u, v) || g.has_arc(v, u));
            CHECK(und.has_edge(u, v) == expect);
        }
}

TEST_CASE("underlying undirected is invariant under arc flips") {
    Rng rng(11);
    const std::size_t n = 12;
    std::vector<Arc> arcs;
    for (int i = 0; i < 30; ++i) {
        Vertex u = static_cast<Vertex>(rng.below(n));
        Vertex v = static_cast<Vertex>(rng.below(n));
        if (u != v) arcs.emplace_back(u, v);
    }
    DirectedGraph g = DirectedGraph::from_arcs(n, arcs);
    for (auto& [u, v] : arcs) std::swap(u, v);
    DirectedGraph flipped = DirectedGraph::from_arcs(n, arcs);
    auto e1 = underlying_undirected(g).edges();
    auto e2 = underlying_undirected(flipped).edges();
    CHECK(e1 == e2);
}

TEST_CASE("verify_separator on P3, K4 minus one, K4 minus two") {
    // path 0-1-2, S={1}
    DirectedGraph p3(3);
    p3.add_arc(0, 1);
    p3.add_arc(1, 2);
    auto chk = verify_separator(p3, WeightFn::uniform(3), {1});
    REQUIRE(chk.accepted);
    CHECK(chk.cert.v1.size() == 1);
    CHECK(chk.cert.v2.size() == 1);

    DirectedGraph k4(4);
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = u + 1; v < 4; ++v) k4.add_arc(u, v);
    // one vertex leaves a weight-3/4 triangle
    CHECK_FALSE(verify_separator(k4, WeightFn::uniform(4), {0}).accepted);
    CHECK(verify_separator(k4, WeightFn::uniform(4), {0}).violation == "REJECTED_BALANCE");
    // two vertices leave weight 1/2
    auto ok = verify_separator(k4, WeightFn::uniform(4), {0, 1});
    REQUIRE(ok.accepted);
    CHECK((ok.cert.w1 == Frac(1, 2) || ok.cert.w2 == Frac(1, 2)));
}

TEST_CASE("accepted separators never admit an edge between the sides") {
    Rng rng(23);
    for (int round = 0; round < 40; ++round) {
        const std::size_t n = 8 + rng.below(10);
        DirectedGraph g(n);
        for (std::size_t i = 0; i < 2 * n; ++i) {
            Vertex u = static_cast<Vertex>(rng.below(n));
            Vertex v = static_cast<Vertex>(rng.below(n));
            if (u != v) g.add_arc(u, v);
        }
        std::vector<Vertex> s;
        for (Vertex v = 0; v < n; ++v)
            if (rng.below(3) == 0) s.push_back(v);
        auto chk = verify_separator(g, WeightFn::uniform(n), s);
        if (!chk.accepted) continue;
        UndirectedGraph u = underlying_undirected(g);
        for (Vertex a : chk.cert.v1)
            for (Vertex b : chk.cert.v2) CHECK_FALSE(u.has_edge(a, b));
    }
}

TEST_CASE("reach oracle basics and orientation") {
    DirectedGraph g(2);
    g.add_arc(0, 1);
    CHECK(reach_oracle(g, 0, 0)); // empty path
    CHECK(reach_oracle(g, 0, 1));
    CHECK_FALSE(reach_oracle(g, 1, 0));
    CHECK_THROWS_AS(reach_oracle(g, 0, 5), Error);
}

TEST_CASE("reach oracle agrees with cubic transitive closure") {
    Rng rng(31);
    const std::size_t n = 100;
    DirectedGraph g(n);
    for (std::size_t i = 0; i < 3 * n; ++i) {
        Vertex u = static_cast<Vertex>(rng.below(n));
        Vertex v = static_cast<Vertex>(rng.below(n));
        if (u != v) g.add_arc(u, v);
    }
    // closure by repeated relaxation
    std::vector<std::vector<char>> close(n, std::vector<char>(n, 0));
    for (Vertex v = 0; v < n; ++v) close[v][v] = 1;
    for (auto [u, v] : g.arcs()) close[u][v] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = 0; j < n; ++j) {
                if (!close[i][j]) continue;
                for (Vertex k = 0; k < n; ++k)
                    if (close[j][k] && !close[i][k]) {
                        close[i][k] = 1;
                        changed = true;
                    }
            }
    }
    for (int probe = 0; probe < 400; ++probe) {
        Vertex s = static_cast<Vertex>(rng.below(n));
        Vertex t = static_cast<Vertex>(rng.below(n));
        CHECK(reach_oracle(g, s, t) == bool(close[s][t]));
    }
}

TEST_CASE("reach oracle is transitive on sampled triples") {
    Rng rng(37);
    const std::size_t n = 40;
    DirectedGraph g(n);
    for (std::size_t i = 0; i < 2 * n; ++i) {
        Vertex u = static_cast<Vertex>(rng.below(n));
        Vertex v = static_cast<Vertex>(rng.below(n));
        if (u != v) g.add_arc(u, v);
    }
    for (int probe = 0; probe < 200; ++probe) {
        Vertex a = static_cast<Vertex>(rng.below(n));
        Vertex b = static_cast<Vertex>(rng.below(n));
        Vertex c = static_cast<Vertex>(rng.below(n));
        if (reach_oracle(g, a, b) && reach_oracle(g, b, c)) CHECK(reach_oracle(g, a, c));
    }
}

TEST_CASE("weights stay exact fractions") {
    WeightFn w = WeightFn::from_fractions({Frac(1, 3), Frac(1, 3), Frac(1, 3)});
    CHECK(w.weight(0) == Frac(1, 3));
    CHECK(w.weight_of(std::vector<Vertex>{0, 1, 2}) == Frac(1, 1));
    CHECK_THROWS_AS(WeightFn::from_fractions({Frac(1, 2), Frac(1, 3)}), Error);
    CHECK_THROWS_AS(Frac(1, 0), Error);
    CHECK(Frac(2, 4) == Frac(1, 2));
    CHECK(Frac(2, 3) > Frac(1, 2));
}
