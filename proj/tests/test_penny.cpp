#include <doctest.h>

#include <cmath>

#include "sepspace/instance_gen.hpp"
#include "sepspace/penny.hpp"

using namespace sepspace;

namespace {

DiskSet chain(std::size_t n) {
    std::vector<double> xs, ys;
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < n; ++i) {
        xs.push_back(2.0 * double(i));
        ys.push_back(0);
        if (i) arcs.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
    }
    return DiskSet::build(std::move(xs), std::move(ys), arcs, {});
}

RectSubdivision::Cell whole_plane() {
    RectSubdivision::Cell c;
    c.lo[0] = c.lo[1] = -1e9;
    c.hi[0] = c.hi[1] = 1e9;
    return c;
}

} // namespace

TEST_CASE("disk set validation") {
    CHECK_THROWS_AS(DiskSet::build({0, 1}, {0, 0}, {}, {}), Error); // overlap
    CHECK_THROWS_AS(DiskSet::build({0, 5}, {0, 0}, {{0, 1}}, {}), Error); // not tangent
    DiskSet ds = chain(3);
    CHECK(ds.touch.edge_count() == 2);
    CHECK(ds.arcs.arc_count() == 2);
}

TEST_CASE("balanced line on a chain of ten disks") {
    DiskSet ds = chain(10);
    std::vector<Vertex> all(10);
    for (Vertex v = 0; v < 10; ++v) all[v] = v;
    WorkspaceMeter m;
    SweepLine line = balanced_line(ds, all, whole_plane(), 4.0, m);
    CHECK(line.axis == 0);
    CHECK(line.crossed <= 2);
    CHECK(line.side_lo <= 8);
    CHECK(line.side_hi <= 8);
    // re-validate by full scan
    std::uint32_t lo = 0, hi = 0, cross = 0;
    for (Vertex v = 0; v < 10; ++v) {
        if (ds.x[v] < line.coord - 1 - DiskSet::tangency_eps) ++lo;
        else if (ds.x[v] > line.coord + 1 + DiskSet::tangency_eps) ++hi;
        else ++cross;
    }
    CHECK(lo == line.side_lo);
    CHECK(hi == line.side_hi);
    CHECK(cross == line.crossed);
    CHECK(m.current_words() == 0);
}

TEST_CASE("balanced line rejects singleton input") {
    DiskSet ds = chain(1);
    WorkspaceMeter m;
    CHECK_THROWS_AS(balanced_line(ds, {0}, whole_plane(), 4.0, m), Error);
}

TEST_CASE("subdivision respects the interior budget") {
    GenSpec spec;
    spec.family = "penny";
    spec.n = 100;
    spec.style = "grid";
    spec.seed = 1;
    DiskSet ds = gen_penny(spec);
    WorkspaceMeter m;
    RectSubdivision sd = build_subdivision(ds, 0.5, 4.0, m);
    double budget = std::pow(100.0, 0.5);
    for (std::uint32_t leaf : sd.leaves)
        CHECK(double(sd.cells[leaf].interior.size()) < budget);
    // every stored line satisfied its predicates at creation
    for (const SweepLine& line : sd.lines) {
        CHECK(line.side_lo <= (4 * line.step_disks + 4) / 5);
        CHECK(line.side_hi <= (4 * line.step_disks + 4) / 5);
        CHECK(double(line.crossed) <=
              4.0 * std::sqrt(double(line.tangencies) + double(line.step_disks)));
    }
    CHECK(m.current_words() == 0);
}

TEST_CASE("single disk needs no lines") {
    DiskSet ds = chain(1);
    WorkspaceMeter m;
    RectSubdivision sd = build_subdivision(ds, 0.5, 4.0, m);
    CHECK(sd.lines.empty());
    CHECK(sd.leaves.size() == 1);
}

TEST_CASE("edges_cross is exact circular interleaving") {
    CHECK(edges_cross(1, 3, 2, 4));
    CHECK_FALSE(edges_cross(1, 2, 3, 4));
    CHECK_FALSE(edges_cross(1, 3, 1, 4)); // shared endpoint
    // against a geometric oracle on the unit circle
    Rng rng(12);
    for (int round = 0; round < 300; ++round) {
        std::uint32_t p[4];
        bool distinct = true;
        for (auto& x : p) x = static_cast<std::uint32_t>(rng.below(32));
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) distinct &= p[i] != p[j];
        if (!distinct) continue;
        auto ang = [](std::uint32_t pos) { return 2 * 3.141592653589793 * pos / 32.0; };
        // segments between circle points cross iff endpoints interleave
        auto side = [&](double a, double b, double t) {
            double x1 = std::cos(a), y1 = std::sin(a);
            double x2 = std::cos(b), y2 = std::sin(b);
            double xt = std::cos(t), yt = std::sin(t);
            return (x2 - x1) * (yt - y1) - (y2 - y1) * (xt - x1) > 0;
        };
        bool geometric = side(ang(p[0]), ang(p[1]), ang(p[2])) !=
                         side(ang(p[0]), ang(p[1]), ang(p[3]));
        bool geometric2 = side(ang(p[2]), ang(p[3]), ang(p[0])) !=
                          side(ang(p[2]), ang(p[3]), ang(p[1]));
        CHECK(edges_cross(p[0], p[1], p[2], p[3]) == (geometric && geometric2));
    }
}

TEST_CASE("aux graph of two disks straddling a line keeps parallel edges") {
    // force a split between two tangent disks by adding enough mass around
    GenSpec spec;
    spec.family = "penny";
    spec.n = 36;
    spec.style = "grid";
    spec.seed = 3;
    spec.orient = ArcPolicy::Dag;
    DiskSet ds = gen_penny(spec);
    WorkspaceMeter m;
    RectSubdivision sd = build_subdivision(ds, 0.4, 4.0, m);
    REQUIRE(!sd.lines.empty());
    AuxiliaryGraph aux = build_aux_graph(ds, sd, m);
    CHECK(!aux.vertices.empty());
    // tangent pairs across a line appear as edges in both adjacent cells
    std::size_t parallel = 0;
    for (std::uint32_t e1 = 0; e1 < aux.edges.size(); ++e1)
        for (std::uint32_t e2 = e1 + 1; e2 < aux.edges.size(); ++e2) {
            const AuxEdge& a = aux.edges[e1];
            const AuxEdge& b = aux.edges[e2];
            if (a.dummy || b.dummy) continue;
            if (a.cell == b.cell) continue;
            if (aux.vertices[a.tail].disk == aux.vertices[b.tail].disk &&
                aux.vertices[a.head].disk == aux.vertices[b.head].disk)
                ++parallel;
        }
    CHECK(parallel > 0);
    CHECK(m.current_words() == 0);
}

TEST_CASE("crossing closure holds on generated aux cells") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        GenSpec spec;
        spec.family = "penny";
        spec.n = 60;
        spec.style = seed % 2 ? "tri" : "random";
        spec.seed = seed;
        DiskSet ds = gen_penny(spec);
        WorkspaceMeter m;
        RectSubdivision sd = build_subdivision(ds, 0.5, 4.0, m);
        AuxiliaryGraph aux = build_aux_graph(ds, sd, m);
        for (std::uint32_t li = 0; li < aux.cell_edges.size(); ++li) {
            const auto& es = aux.cell_edges[li];
            for (std::size_t i = 0; i < es.size(); ++i)
                for (std::size_t j = i + 1; j < es.size(); ++j)
                    CHECK(crossing_closure_check(aux, es[i], es[j]));
        }
    }
}

TEST_CASE("maximal planar subgraph keeps no crossing pair") {
    GenSpec spec;
    spec.family = "penny";
    spec.n = 80;
    spec.style = "random";
    spec.seed = 7;
    DiskSet ds = gen_penny(spec);
    WorkspaceMeter m;
    RectSubdivision sd = build_subdivision(ds, 0.5, 4.0, m);
    AuxiliaryGraph aux = build_aux_graph(ds, sd, m);
    auto kept = maximal_planar_subgraph(aux);
    for (std::uint32_t li = 0; li < aux.cell_edges.size(); ++li) {
        std::vector<std::uint32_t> cell_kept;
        for (std::uint32_t e : aux.cell_edges[li])
            if (aux.edges[e].kept) cell_kept.push_back(e);
        for (std::size_t i = 0; i < cell_kept.size(); ++i) {
            for (std::size_t j = i + 1; j < cell_kept.size(); ++j) {
                const AuxEdge& a = aux.edges[cell_kept[i]];
                const AuxEdge& b = aux.edges[cell_kept[j]];
                CHECK_FALSE(edges_cross(aux.position_in(a.tail, li),
                                        aux.position_in(a.head, li),
                                        aux.position_in(b.tail, li),
                                        aux.position_in(b.head, li)));
            }
        }
    }
    // every excluded edge crosses some kept edge (sampled maximality)
    std::size_t checked = 0;
    for (std::uint32_t li = 0; li < aux.cell_edges.size() && checked < 50; ++li) {
        for (std::uint32_t e : aux.cell_edges[li]) {
            if (aux.edges[e].kept) continue;
            bool crossed = false;
            for (std::uint32_t o : aux.cell_edges[li]) {
                if (!aux.edges[o].kept) continue;
                if (edges_cross(aux.position_in(aux.edges[e].tail, li),
                                aux.position_in(aux.edges[e].head, li),
                                aux.position_in(aux.edges[o].tail, li),
                                aux.position_in(aux.edges[o].head, li))) {
                    crossed = true;
                    break;
                }
            }
            CHECK(crossed);
            ++checked;
        }
    }
}

TEST_CASE("pseudo-separator bounds component sizes") {
    GenSpec spec;
    spec.family = "penny";
    spec.n = 150;
    spec.style = "tri";
    spec.seed = 11;
    DiskSet ds = gen_penny(spec);
    WorkspaceMeter m;
    RectSubdivision sd = build_subdivision(ds, 0.5, 4.0, m);
    AuxiliaryGraph aux = build_aux_graph(ds, sd, m);
    std::vector<std::uint32_t> all(aux.vertices.size());
    for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    PseudoSeparator ps = build_pseudo_separator(aux, sd, all, 0.5, m);
    auto comps = pseudo_components(aux, all, ps);
    for (const auto& c : comps) CHECK(c.size() <= 8 * ps.budget);
    CHECK(m.current_words() == 0);
}

TEST_CASE("penny reach matches the oracle on the tangency digraph") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        GenSpec spec;
        spec.family = "penny";
        spec.n = 40 + 10 * seed;
        spec.style = seed % 3 == 0 ? "random" : (seed % 3 == 1 ? "grid" : "tri");
        spec.seed = seed;
        spec.orient = seed % 2 ? ArcPolicy::Random : ArcPolicy::Dag;
        DiskSet ds = gen_penny(spec);
        WorkspaceMeter m;
        PennyReachOptions opts;
        opts.base_threshold = 24; // exercise the recursion on small instances
        PennyPipeline pipe(ds, opts, m);
        Rng rng(seed * 997);
        for (int probe = 0; probe < 15; ++probe) {
            Vertex s = static_cast<Vertex>(rng.below(ds.size()));
            Vertex t = static_cast<Vertex>(rng.below(ds.size()));
            bool expect = reach_oracle(ds.arcs, s, t);
            CHECK(pipe.query(s, t, m) == expect);
        }
        CHECK(m.current_words() == 0);
    }
}

TEST_CASE("penny reach handles trivial and disconnected cases") {
    DiskSet two = DiskSet::build({0, 2}, {0, 0}, {{0, 1}}, {});
    WorkspaceMeter m;
    PennyReachOptions opts;
    CHECK(penny_reach(two, 0, 1, opts, m));
    CHECK_FALSE(penny_reach(two, 1, 0, opts, m));
    CHECK(penny_reach(two, 1, 1, opts, m));
    CHECK_THROWS_AS(penny_reach(two, 0, 7, opts, m), Error);

    // two far-apart tangent pairs
    DiskSet split = DiskSet::build({0, 2, 50, 52}, {0, 0, 0, 0}, {{0, 1}, {2, 3}}, {});
    CHECK_FALSE(penny_reach(split, 0, 2, opts, m));
    CHECK(penny_reach(split, 2, 3, opts, m));
    CHECK(m.current_words() == 0);
}
