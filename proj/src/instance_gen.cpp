#include "sepspace/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace sepspace {

std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    require(bound > 0, "PRECONDITION", "empty range");
    // rejection sampling keeps the draw unbiased
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do { v = next(); } while (v >= limit);
    return v % bound;
}

double Rng::unit() { return double(next() >> 11) * 0x1.0p-53; }

double Rng::between(double lo, double hi) { return lo + (hi - lo) * unit(); }

ArcPolicy parse_arc_policy(const std::string& name) {
    if (name == "random") return ArcPolicy::Random;
    if (name == "dag") return ArcPolicy::Dag;
    if (name == "bidirected") return ArcPolicy::Bidirected;
    raise("PARSE_ERROR", "unknown orientation policy '" + name + "'");
}

namespace {

// orient undirected pairs (u < v) per policy
void orient_pairs(const std::vector<std::pair<Vertex, Vertex>>& pairs, ArcPolicy policy,
                  Rng& rng, std::vector<Arc>& arcs, std::vector<Arc>& biarcs) {
    for (auto [u, v] : pairs) {
        switch (policy) {
        case ArcPolicy::Random:
            if (rng.below(2) == 0) arcs.emplace_back(u, v);
            else arcs.emplace_back(v, u);
            break;
        case ArcPolicy::Dag:
            arcs.emplace_back(std::min(u, v), std::max(u, v));
            break;
        case ArcPolicy::Bidirected:
            biarcs.emplace_back(u, v);
            break;
        }
    }
}

} // namespace

DiskSet gen_penny(const GenSpec& spec) {
    require(spec.n >= 1, "PRECONDITION", "penny instances need n >= 1");
    Rng rng(spec.seed ^ 0x70656e6e79ull);
    std::vector<double> xs, ys;
    xs.reserve(spec.n);
    ys.reserve(spec.n);

    if (spec.style == "grid") {
        auto k = static_cast<std::size_t>(std::ceil(std::sqrt(double(spec.n))));
        for (std::size_t i = 0; i < spec.n; ++i) {
            xs.push_back(double(2 * (i % k)));
            ys.push_back(double(2 * (i / k)));
        }
    } else if (spec.style == "tri") {
        auto k = static_cast<std::size_t>(std::ceil(std::sqrt(double(spec.n))));
        const double row_h = std::sqrt(3.0);
        for (std::size_t i = 0; i < spec.n; ++i) {
            std::size_t row = i / k, col = i % k;
            xs.push_back(double(2 * col) + (row % 2 ? 1.0 : 0.0));
            ys.push_back(double(row) * row_h);
        }
    } else if (spec.style == "random") {
        xs.push_back(0);
        ys.push_back(0);
        std::unordered_map<std::uint64_t, std::vector<std::size_t>> grid;
        auto key_of = [](double cx, double cy) {
            auto gx = static_cast<std::int32_t>(std::floor(cx / 2.0)) + 0x40000000;
            auto gy = static_cast<std::int32_t>(std::floor(cy / 2.0)) + 0x40000000;
            return (std::uint64_t(std::uint32_t(gx)) << 32) | std::uint32_t(gy);
        };
        grid[key_of(0, 0)].push_back(0);
        while (xs.size() < spec.n) {
            std::size_t base = rng.below(xs.size());
            double theta = rng.between(0, 6.283185307179586);
            double cx = xs[base] + 2 * std::cos(theta);
            double cy = ys[base] + 2 * std::sin(theta);
            bool ok = true;
            auto gx = static_cast<std::int32_t>(std::floor(cx / 2.0));
            auto gy = static_cast<std::int32_t>(std::floor(cy / 2.0));
            for (int dx = -1; dx <= 1 && ok; ++dx) {
                for (int dy = -1; dy <= 1 && ok; ++dy) {
                    std::uint64_t key =
                        (std::uint64_t(std::uint32_t(gx + dx + 0x40000000)) << 32) |
                        std::uint32_t(gy + dy + 0x40000000);
                    auto it = grid.find(key);
                    if (it == grid.end()) continue;
                    for (std::size_t j : it->second) {
                        double ddx = cx - xs[j], ddy = cy - ys[j];
                        if (ddx * ddx + ddy * ddy < (2 - DiskSet::tangency_eps) *
                                                        (2 - DiskSet::tangency_eps))
                            ok = false;
                    }
                }
            }
            if (!ok) continue;
            grid[key_of(cx, cy)].push_back(xs.size());
            xs.push_back(cx);
            ys.push_back(cy);
        }
    } else {
        raise("PARSE_ERROR", "unknown penny style '" + spec.style + "'");
    }

    // tangent pairs, then orientation
    DiskSet probe = DiskSet::build(xs, ys, {}, {});
    std::vector<std::pair<Vertex, Vertex>> pairs = probe.touch.edges();
    std::vector<Arc> arcs, biarcs;
    orient_pairs(pairs, spec.orient, rng, arcs, biarcs);
    return DiskSet::build(std::move(xs), std::move(ys), arcs, biarcs);
}

ChordalInstance gen_chordal(const GenSpec& spec) {
    require(spec.n >= spec.k + 1, "PRECONDITION", "k-tree needs n >= k+1");
    Rng rng(spec.seed ^ 0x6368726464ull);
    const std::size_t k = spec.k;

    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::vector<std::vector<Vertex>> cliques; // all k-cliques available for attachment
    for (Vertex u = 0; u < k + 1; ++u)
        for (Vertex v = u + 1; v < k + 1; ++v) pairs.emplace_back(u, v);
    for (Vertex skip = 0; skip < k + 1; ++skip) {
        std::vector<Vertex> c;
        for (Vertex u = 0; u < k + 1; ++u)
            if (u != skip) c.push_back(u);
        cliques.push_back(std::move(c));
    }
    for (Vertex v = static_cast<Vertex>(k + 1); v < spec.n; ++v) {
        const std::vector<Vertex> c = cliques[rng.below(cliques.size())];
        for (Vertex u : c) pairs.emplace_back(u, v);
        for (std::size_t drop = 0; drop < c.size(); ++drop) {
            std::vector<Vertex> nc;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (i != drop) nc.push_back(c[i]);
            nc.push_back(v);
            cliques.push_back(std::move(nc));
        }
    }

    std::vector<Arc> arcs, biarcs;
    orient_pairs(pairs, spec.orient, rng, arcs, biarcs);
    for (auto [u, v] : biarcs) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    DirectedGraph g = DirectedGraph::from_arcs(spec.n, arcs);
    return ChordalInstance::validate(std::move(g), WeightFn::uniform(spec.n));
}

RegionSet gen_jordan(const GenSpec& spec) {
    require(spec.n >= 2, "PRECONDITION", "jordan instances need n >= 2");
    Rng rng(spec.seed ^ 0x6a6f7264616eull);

    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<geom::Shape> shapes;
        double spread = std::sqrt(double(spec.n)) * 2.0 / std::max(spec.density, 0.05);

        std::size_t hub_children = 0;
        if (spec.nested) {
            // a hub disk with a crowd of mutually crossing children inside it
            hub_children = std::min(std::max<std::size_t>(2, spec.n / 3), spec.n - 1);
            geom::Disk hub{{0, 0}, 10.0};
            shapes.emplace_back(hub);
            for (std::size_t i = 0; i < hub_children; ++i) {
                double ang = rng.between(0, 6.283185307179586);
                double rad = rng.between(0.0, 2.0);
                geom::Disk d{{rad * std::cos(ang), rad * std::sin(ang)},
                             rng.between(1.5, 3.0)};
                shapes.emplace_back(d);
            }
        }
        while (shapes.size() < spec.n) {
            if (shapes.empty()) {
                shapes.emplace_back(geom::Disk{{rng.between(-spread, spread),
                                                rng.between(-spread, spread)},
                                               rng.between(0.8, 2.2)});
                continue;
            }
            // cross an existing region on purpose so nobody ends up isolated
            std::size_t base = spec.nested && shapes.size() <= hub_children
                                   ? 1 + rng.below(std::max<std::size_t>(hub_children, 1))
                                   : rng.below(shapes.size());
            if (base >= shapes.size()) base = shapes.size() - 1;
            const geom::Disk* bd = std::get_if<geom::Disk>(&shapes[base]);
            double r = rng.between(0.8, 2.2);
            double lo = std::abs(bd->r - r) + 0.15 * std::min(bd->r, r);
            double hi = bd->r + r - 0.15 * std::min(bd->r, r);
            double dist = rng.between(lo, hi);
            double ang = rng.between(0, 6.283185307179586);
            geom::Vec2 c{bd->c.x + dist * std::cos(ang), bd->c.y + dist * std::sin(ang)};
            shapes.emplace_back(geom::Disk{c, r});
        }

        std::vector<std::pair<Vertex, Vertex>> pairs;
        bool bad = false;
        double eps = 1e-9 * 4 * spread;
        for (Vertex i = 0; i < shapes.size() && !bad; ++i) {
            for (Vertex j = i + 1; j < shapes.size() && !bad; ++j) {
                try {
                    if (geom::intersects(shapes[i], shapes[j], eps)) pairs.emplace_back(i, j);
                } catch (const Error&) {
                    bad = true;
                }
            }
        }
        if (bad) continue;

        std::vector<Arc> arcs, biarcs;
        orient_pairs(pairs, spec.orient, rng, arcs, biarcs);
        for (auto [u, v] : biarcs) {
            arcs.emplace_back(u, v);
            arcs.emplace_back(v, u);
        }
        try {
            return RegionSet::build(std::move(shapes), WeightFn::uniform(spec.n),
                                    std::move(arcs));
        } catch (const Error&) {
            continue; // general-position or isolation trouble: resample
        }
    }
    raise("RESAMPLE_EXHAUSTED", "could not generate a valid region family in 1000 tries");
}

} // namespace sepspace
