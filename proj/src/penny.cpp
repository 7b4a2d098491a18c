#include "sepspace/penny.hpp"

#include "sepspace/planar_separator.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace sepspace {

namespace {

constexpr double kEps = DiskSet::tangency_eps;

inline std::uint64_t pack2(std::uint32_t a, std::uint32_t b) {
    return (std::uint64_t(a) << 32) | b;
}

} // namespace

DiskSet DiskSet::build(std::vector<double> xs, std::vector<double> ys,
                       const std::vector<Arc>& arcs, const std::vector<Arc>& biarcs) {
    require(xs.size() == ys.size(), "PRECONDITION", "coordinate arrays differ in length");
    DiskSet ds;
    ds.x = std::move(xs);
    ds.y = std::move(ys);
    const std::size_t n = ds.size();
    ds.arcs = DirectedGraph(n);
    ds.touch = UndirectedGraph(n);

    // hash grid with cell size 2: tangent disks are always in adjacent cells
    std::unordered_map<std::uint64_t, std::vector<Vertex>> grid;
    auto cell_of = [&](double cx, double cy) {
        auto gx = static_cast<std::int32_t>(std::floor(cx / 2.0));
        auto gy = static_cast<std::int32_t>(std::floor(cy / 2.0));
        return pack2(static_cast<std::uint32_t>(gx + 0x40000000),
                     static_cast<std::uint32_t>(gy + 0x40000000));
    };
    for (Vertex i = 0; i < n; ++i) grid[cell_of(ds.x[i], ds.y[i])].push_back(i);

    for (Vertex i = 0; i < n; ++i) {
        auto gx = static_cast<std::int32_t>(std::floor(ds.x[i] / 2.0));
        auto gy = static_cast<std::int32_t>(std::floor(ds.y[i] / 2.0));
        for (int dx = -1; dx <= 1; ++dx) {
            for (int dy = -1; dy <= 1; ++dy) {
                auto it = grid.find(pack2(static_cast<std::uint32_t>(gx + dx + 0x40000000),
                                          static_cast<std::uint32_t>(gy + dy + 0x40000000)));
                if (it == grid.end()) continue;
                for (Vertex j : it->second) {
                    if (j <= i) continue;
                    double ddx = ds.x[i] - ds.x[j];
                    double ddy = ds.y[i] - ds.y[j];
                    double d2 = ddx * ddx + ddy * ddy;
                    double lo = (2 - kEps) * (2 - kEps);
                    double hi = (2 + kEps) * (2 + kEps);
                    require(d2 >= lo, "OVERLAPPING_DISKS",
                            "disks " + std::to_string(i) + " and " + std::to_string(j) +
                                " overlap");
                    if (d2 <= hi) ds.touch.add_edge(i, j);
                }
            }
        }
    }
    auto check_tangent = [&](Vertex u, Vertex v) {
        require(u < n && v < n, "UNKNOWN_DISK", "arc endpoint out of range");
        require(ds.touch.has_edge(u, v), "ARC_WITHOUT_TANGENCY",
                "arc between non-tangent disks " + std::to_string(u) + "," +
                    std::to_string(v));
    };
    for (auto [u, v] : arcs) {
        check_tangent(u, v);
        ds.arcs.add_arc(u, v);
    }
    for (auto [u, v] : biarcs) {
        check_tangent(u, v);
        ds.arcs.add_arc(u, v);
        ds.arcs.add_arc(v, u);
    }
    return ds;
}

namespace {

std::uint32_t count_subset_edges(const UndirectedGraph& touch,
                                 const std::vector<Vertex>& subset,
                                 const std::vector<char>& in_subset) {
    std::uint32_t m = 0;
    for (Vertex v : subset)
        for (Vertex u : touch.neighbors(v))
            if (u > v && in_subset[u]) ++m;
    return m;
}

} // namespace

SweepLine balanced_line(const DiskSet& ds, const std::vector<Vertex>& subset,
                        const RectSubdivision::Cell& bounds, double sweep_constant,
                        WorkspaceMeter& meter) {
    require(subset.size() >= 2, "PRECONDITION",
            "balanced line needs at least two disks");
    ChargeGuard counters(meter, "sweep-counters", 3);

    std::vector<char> in_subset(ds.size(), 0);
    for (Vertex v : subset) in_subset[v] = 1;
    const std::uint32_t n_sub = static_cast<std::uint32_t>(subset.size());
    const std::uint32_t m_sub = count_subset_edges(ds.touch, subset, in_subset);
    const double cross_cap = sweep_constant * std::sqrt(double(m_sub) + double(n_sub));
    const std::uint32_t side_cap = static_cast<std::uint32_t>((4 * n_sub + 4) / 5);

    for (int axis = 0; axis < 2; ++axis) {
        std::vector<double> coords;
        coords.reserve(subset.size());
        for (Vertex v : subset) coords.push_back(axis == 0 ? ds.x[v] : ds.y[v]);
        std::sort(coords.begin(), coords.end());

        // tangency contact coordinates along this axis; a line through a
        // contact point lets paths slip across it invisibly, so those
        // placements are skipped (general position for the subdivision)
        std::vector<double> contacts;
        for (Vertex v : subset)
            for (Vertex u : ds.touch.neighbors(v))
                if (u > v && in_subset[u])
                    contacts.push_back(((axis == 0 ? ds.x[v] : ds.y[v]) +
                                        (axis == 0 ? ds.x[u] : ds.y[u])) /
                                       2);
        std::sort(contacts.begin(), contacts.end());
        auto near_contact = [&](double c) {
            auto it = std::lower_bound(contacts.begin(), contacts.end(), c - 1e-6);
            return it != contacts.end() && *it <= c + 1e-6;
        };

        // candidates: event boundaries (center +- (1+eps)) and the centers
        // themselves, plus midpoints of consecutive events, clipped to the cell
        std::vector<double> cand;
        for (double c : coords) {
            cand.push_back(c - 1 - 2 * kEps);
            cand.push_back(c);
            cand.push_back(c + 1 + 2 * kEps);
        }
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        std::vector<double> mids;
        for (std::size_t i = 0; i + 1 < cand.size(); ++i)
            mids.push_back((cand[i] + cand[i + 1]) / 2);
        cand.insert(cand.end(), mids.begin(), mids.end());
        std::sort(cand.begin(), cand.end());

        for (double c : cand) {
            if (c <= bounds.lo[axis] || c >= bounds.hi[axis]) continue;
            if (near_contact(c)) continue;
            // side counts via binary search on sorted centers
            auto lo_it = std::lower_bound(coords.begin(), coords.end(), c - 1 - kEps);
            auto hi_it = std::upper_bound(coords.begin(), coords.end(), c + 1 + kEps);
            auto side_lo = static_cast<std::uint32_t>(lo_it - coords.begin());
            auto side_hi = static_cast<std::uint32_t>(coords.end() - hi_it);
            std::uint32_t crossed = n_sub - side_lo - side_hi;
            if (crossed > cross_cap) continue;
            if (side_lo > side_cap || side_hi > side_cap) continue;
            if (side_lo >= n_sub || side_hi >= n_sub) continue; // must shrink both children
            SweepLine line;
            line.axis = axis;
            line.coord = c;
            line.span_lo = bounds.lo[1 - axis];
            line.span_hi = bounds.hi[1 - axis];
            line.step_disks = n_sub;
            line.crossed = crossed;
            line.side_lo = side_lo;
            line.side_hi = side_hi;
            line.tangencies = m_sub;
            return line;
        }
    }
    raise("NO_LINE_FOUND",
          "no admissible balanced line over " + std::to_string(subset.size()) +
              " disks; raise the sweep constant");
}

RectSubdivision build_subdivision(const DiskSet& ds, double epsilon,
                                  double sweep_constant, WorkspaceMeter& meter) {
    require(epsilon > 0 && epsilon < 1, "PRECONDITION", "epsilon must be in (0,1)");
    meter.set_phase("subdivision");
    const std::size_t n = ds.size();
    RectSubdivision sd;

    RectSubdivision::Cell root;
    root.lo[0] = root.lo[1] = 1e300;
    root.hi[0] = root.hi[1] = -1e300;
    for (std::size_t i = 0; i < n; ++i) {
        root.lo[0] = std::min(root.lo[0], ds.x[i] - 3);
        root.lo[1] = std::min(root.lo[1], ds.y[i] - 3);
        root.hi[0] = std::max(root.hi[0], ds.x[i] + 3);
        root.hi[1] = std::max(root.hi[1], ds.y[i] + 3);
    }
    if (n == 0) { root.lo[0] = root.lo[1] = 0; root.hi[0] = root.hi[1] = 1; }
    root.interior.resize(n);
    std::iota(root.interior.begin(), root.interior.end(), 0);
    sd.cells.push_back(std::move(root));

    const double threshold = std::pow(double(std::max<std::size_t>(n, 1)),
                                      1.0 - epsilon);
    ChargeGuard store(meter, "subdivision-store", 2); // root cell

    std::deque<std::uint32_t> work{0};
    while (!work.empty()) {
        std::uint32_t ci = work.front();
        work.pop_front();
        if (double(sd.cells[ci].interior.size()) < threshold ||
            sd.cells[ci].interior.size() < 2) {
            continue;
        }
        SweepLine line = balanced_line(ds, sd.cells[ci].interior, sd.cells[ci],
                                       sweep_constant, meter);
        int line_id = static_cast<int>(sd.lines.size());
        sd.lines.push_back(line);
        store.grow(1); // the stored coordinate

        RectSubdivision::Cell lo_cell, hi_cell;
        for (int a = 0; a < 2; ++a) {
            lo_cell.lo[a] = hi_cell.lo[a] = sd.cells[ci].lo[a];
            lo_cell.hi[a] = hi_cell.hi[a] = sd.cells[ci].hi[a];
        }
        lo_cell.hi[line.axis] = line.coord;
        hi_cell.lo[line.axis] = line.coord;
        for (int sline = 0; sline < 4; ++sline) {
            lo_cell.side_line[sline] = sd.cells[ci].side_line[sline];
            hi_cell.side_line[sline] = sd.cells[ci].side_line[sline];
        }
        // side ids: 0 left (lo x), 1 bottom (lo y), 2 right (hi x), 3 top (hi y)
        if (line.axis == 0) {
            lo_cell.side_line[2] = line_id;
            hi_cell.side_line[0] = line_id;
        } else {
            lo_cell.side_line[3] = line_id;
            hi_cell.side_line[1] = line_id;
        }
        for (Vertex v : sd.cells[ci].interior) {
            double c = line.axis == 0 ? ds.x[v] : ds.y[v];
            if (c < line.coord - 1 - kEps) lo_cell.interior.push_back(v);
            else if (c > line.coord + 1 + kEps) hi_cell.interior.push_back(v);
            // disks meeting the line become boundary disks of both children
        }
        sd.cells[ci].leaf = false;
        sd.cells[ci].line = line_id;
        sd.cells[ci].interior.clear();
        sd.cells[ci].child[0] = static_cast<int>(sd.cells.size());
        sd.cells.push_back(std::move(lo_cell));
        sd.cells[ci].child[1] = static_cast<int>(sd.cells.size());
        sd.cells.push_back(std::move(hi_cell));
        store.grow(4);
        work.push_back(static_cast<std::uint32_t>(sd.cells[ci].child[0]));
        work.push_back(static_cast<std::uint32_t>(sd.cells[ci].child[1]));
    }

    for (std::uint32_t ci = 0; ci < sd.cells.size(); ++ci)
        if (sd.cells[ci].leaf) sd.leaves.push_back(ci);

    sd.leaf_of_disk.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        std::uint32_t cur = 0;
        while (!sd.cells[cur].leaf) {
            const SweepLine& line = sd.lines[sd.cells[cur].line];
            double c = line.axis == 0 ? ds.x[v] : ds.y[v];
            cur = static_cast<std::uint32_t>(
                c < line.coord ? sd.cells[cur].child[0] : sd.cells[cur].child[1]);
        }
        sd.leaf_of_disk[v] = cur;
    }
    return sd;
}

bool edges_cross(std::uint32_t pos_i, std::uint32_t pos_j, std::uint32_t pos_k,
                 std::uint32_t pos_l) {
    if (pos_i == pos_j || pos_k == pos_l) return false;
    if (pos_i == pos_k || pos_i == pos_l || pos_j == pos_k || pos_j == pos_l)
        return false; // shared endpoint
    std::uint32_t a = std::min(pos_i, pos_j), b = std::max(pos_i, pos_j);
    bool k_in = pos_k > a && pos_k < b;
    bool l_in = pos_l > a && pos_l < b;
    return k_in != l_in;
}

std::uint32_t AuxiliaryGraph::position_in(std::uint32_t vertex, std::uint32_t cell) const {
    for (const AuxPlacement& p : placements[vertex])
        if (p.cell == cell) return p.pos;
    raise("PLACEMENT_CONFLICT", "vertex " + std::to_string(vertex) +
                                    " is not placed in cell " + std::to_string(cell));
}

std::uint32_t AuxiliaryGraph::group_in(std::uint32_t vertex, std::uint32_t cell) const {
    for (const AuxPlacement& p : placements[vertex])
        if (p.cell == cell) return p.group;
    raise("PLACEMENT_CONFLICT", "vertex " + std::to_string(vertex) +
                                    " is not placed in cell " + std::to_string(cell));
}

bool AuxiliaryGraph::has_aux_edge(std::uint32_t tail, std::uint32_t head) const {
    for (std::uint32_t e : out_edges[tail])
        if (edges[e].head == head) return true;
    return false;
}

bool AuxiliaryGraph::has_disk_edge(Vertex disk_tail, Vertex disk_head) const {
    for (std::uint32_t v : disk_vertices[disk_tail])
        for (std::uint32_t e : out_edges[v])
            if (vertices[edges[e].head].disk == disk_head) return true;
    return false;
}

bool AuxiliaryGraph::paths_cross(std::uint32_t edge_a, std::uint32_t edge_b) const {
    const AuxEdge& a = edges[edge_a];
    const AuxEdge& b = edges[edge_b];
    if (a.cell != b.cell) return false;
    if (a.dummy || b.dummy) return false; // disk identity, not a path
    Vertex da = vertices[a.tail].disk, db = vertices[a.head].disk;
    Vertex dc = vertices[b.tail].disk, dd = vertices[b.head].disk;
    if (da == dc || da == dd || db == dc || db == dd) return false;
    // a disk touching several sides anchors the path at several boundary
    // points; the paths are forced across each other only if every anchor
    // combination interleaves
    auto groups_of = [&](Vertex disk) {
        std::vector<std::uint32_t> gs;
        for (std::uint32_t v : disk_vertices[disk])
            for (const AuxPlacement& p : placements[v])
                if (p.cell == a.cell) gs.push_back(p.group);
        return gs;
    };
    for (std::uint32_t ga : groups_of(da))
        for (std::uint32_t gb : groups_of(db))
            for (std::uint32_t gc : groups_of(dc))
                for (std::uint32_t gd : groups_of(dd))
                    if (!edges_cross(ga, gb, gc, gd)) return false;
    return true;
}

namespace {

struct CellGeometry {
    // members: disks intersecting the closed cell
    std::vector<std::vector<Vertex>> members;
    std::vector<std::uint32_t> member_cell_of; // scratch
};

double box_distance(const RectSubdivision::Cell& c, double px, double py) {
    double dx = std::max({c.lo[0] - px, 0.0, px - c.hi[0]});
    double dy = std::max({c.lo[1] - py, 0.0, py - c.hi[1]});
    return std::sqrt(dx * dx + dy * dy);
}

} // namespace

AuxiliaryGraph build_aux_graph(const DiskSet& ds, const RectSubdivision& subdiv,
                               WorkspaceMeter& meter) {
    meter.set_phase("aux-graph");
    AuxiliaryGraph aux;
    const std::size_t n = ds.size();

    // vertices: one per (disk, stored line) with the disk within unit distance
    // of the line's span; placements per leaf side
    std::unordered_map<std::uint64_t, std::uint32_t> vertex_id; // (disk,line)
    struct RawPlacement {
        std::uint32_t vertex;
        int side;
        double key; // directed coordinate along the anticlockwise traversal
    };
    std::vector<std::vector<RawPlacement>> raw(subdiv.leaves.size());
    std::vector<std::uint32_t> leaf_index(subdiv.cells.size(), UINT32_MAX);
    for (std::uint32_t li = 0; li < subdiv.leaves.size(); ++li)
        leaf_index[subdiv.leaves[li]] = li;

    for (std::uint32_t li = 0; li < subdiv.leaves.size(); ++li) {
        const auto& cell = subdiv.cells[subdiv.leaves[li]];
        for (int side = 0; side < 4; ++side) {
            int line_id = cell.side_line[side];
            if (line_id < 0) continue; // outer bounding box: no disk reaches it
            const SweepLine& line = subdiv.lines[line_id];
            int axis = line.axis; // 0: vertical line, side is left/right
            double lo = side == 0 || side == 2 ? cell.lo[1] : cell.lo[0];
            double hi = side == 0 || side == 2 ? cell.hi[1] : cell.hi[0];
            for (Vertex d = 0; d < n; ++d) {
                double perp = axis == 0 ? ds.x[d] : ds.y[d];
                double along = axis == 0 ? ds.y[d] : ds.x[d];
                if (std::abs(perp - line.coord) > 1 + kEps) continue;
                // distance from center to the side segment
                double clamped = std::clamp(along, lo, hi);
                double da = along - clamped;
                double dp = perp - line.coord;
                if (da * da + dp * dp > (1 + kEps) * (1 + kEps)) continue;
                auto key = pack2(d, static_cast<std::uint32_t>(line_id));
                auto it = vertex_id.find(key);
                std::uint32_t vid;
                if (it == vertex_id.end()) {
                    vid = static_cast<std::uint32_t>(aux.vertices.size());
                    vertex_id.emplace(key, vid);
                    aux.vertices.push_back({d, line_id, along});
                    aux.placements.emplace_back();
                } else {
                    vid = it->second;
                }
                // anticlockwise: bottom +x, right +y, top -x, left -y
                double dir = (side == 1 || side == 2) ? along : -along;
                raw[li].push_back({vid, side, dir});
            }
        }
    }

    // positions: traverse bottom, right, top, left
    aux.cell_order.resize(subdiv.leaves.size());
    const int traversal_rank[4] = {3, 0, 1, 2}; // left,bottom,right,top -> rank
    for (std::uint32_t li = 0; li < subdiv.leaves.size(); ++li) {
        auto& lst = raw[li];
        std::sort(lst.begin(), lst.end(), [&](const RawPlacement& a, const RawPlacement& b) {
            if (traversal_rank[a.side] != traversal_rank[b.side])
                return traversal_rank[a.side] < traversal_rank[b.side];
            if (a.key != b.key) return a.key < b.key;
            // ties are opposite-side tangency pairs: the id order must mirror
            // between the two adjacent cells so their boundary walks agree
            bool ascending = a.side == 1 || a.side == 2;
            Vertex da = aux.vertices[a.vertex].disk;
            Vertex db = aux.vertices[b.vertex].disk;
            return ascending ? da < db : da > db;
        });
        // a vertex may appear once per side; keep one entry per vertex.
        // Coincident anchors (tangency pairs resting on the same line point)
        // share a group id.
        std::unordered_set<std::uint32_t> seen;
        std::uint32_t pos = 0, group = 0;
        int prev_side = -1;
        double prev_key = 0;
        for (const RawPlacement& p : lst) {
            if (seen.count(p.vertex)) continue;
            seen.insert(p.vertex);
            if (pos > 0 && (p.side != prev_side || std::abs(p.key - prev_key) > 1e-6))
                ++group;
            prev_side = p.side;
            prev_key = p.key;
            aux.placements[p.vertex].push_back({li, p.side, pos, group});
            aux.cell_order[li].push_back(p.vertex);
            ++pos;
        }
    }

    // members per leaf
    aux.cell_edges.resize(subdiv.leaves.size());
    std::vector<std::vector<Vertex>> members(subdiv.leaves.size());
    for (std::uint32_t li = 0; li < subdiv.leaves.size(); ++li) {
        const auto& cell = subdiv.cells[subdiv.leaves[li]];
        for (Vertex d = 0; d < n; ++d)
            if (box_distance(cell, ds.x[d], ds.y[d]) <= 1 + kEps)
                members[li].push_back(d);
    }

    // dummy links: same-disk placements within one cell, chained by position
    std::unordered_set<std::uint64_t> dummy_seen;
    for (std::uint32_t li = 0; li < subdiv.leaves.size(); ++li) {
        std::unordered_map<Vertex, std::vector<std::pair<std::uint32_t, std::uint32_t>>> by_disk;
        for (std::uint32_t vid : aux.cell_order[li])
            by_disk[aux.vertices[vid].disk].push_back({aux.position_in(vid, li), vid});
        for (auto& [disk, lst] : by_disk) {
            if (lst.size() < 2) continue;
            std::sort(lst.begin(), lst.end());
            for (std::size_t i = 0; i + 1 < lst.size(); ++i) {
                std::uint32_t a = lst[i].second, b = lst[i + 1].second;
                std::uint64_t key = pack2(std::min(a, b), std::max(a, b));
                if (dummy_seen.count(key)) continue;
                dummy_seen.insert(key);
                aux.edges.push_back({a, b, li, true, false});
                aux.edges.push_back({b, a, li, true, false});
                aux.cell_edges[li].push_back(static_cast<std::uint32_t>(aux.edges.size() - 2));
                aux.cell_edges[li].push_back(static_cast<std::uint32_t>(aux.edges.size() - 1));
            }
        }
    }

    // reachability edges: one in-cell search per placed member disk, cached;
    // each search is charged like a base-level scan of the cell
    std::vector<std::uint32_t> stamp(n, 0);
    std::vector<std::uint32_t> disk_rep(n, UINT32_MAX);
    std::uint32_t round = 0;
    for (std::uint32_t li = 0; li < subdiv.leaves.size(); ++li) {
        const auto& mem = members[li];
        // representative vertex per placed disk: smallest position in the cell
        ++round;
        std::vector<std::pair<Vertex, std::uint32_t>> placed; // (disk, rep vertex)
        for (std::uint32_t vid : aux.cell_order[li]) {
            Vertex d = aux.vertices[vid].disk;
            if (stamp[d] != round) {
                stamp[d] = round;
                disk_rep[d] = vid;
                placed.push_back({d, vid});
            }
        }
        std::vector<char> in_members(n, 0);
        for (Vertex d : mem) in_members[d] = 1;
        for (auto [src, src_vid] : placed) {
            ChargeGuard search(meter, "cell-search",
                               static_cast<std::int64_t>(mem.size()));
            std::vector<char> seen(n, 0);
            std::deque<Vertex> queue{src};
            seen[src] = 1;
            while (!queue.empty()) {
                Vertex u = queue.front();
                queue.pop_front();
                for (Vertex v : ds.arcs.out(u)) {
                    if (!in_members[v] || seen[v]) continue;
                    seen[v] = 1;
                    queue.push_back(v);
                }
            }
            for (auto [dst, dst_vid] : placed) {
                if (dst == src || !seen[dst]) continue;
                aux.edges.push_back({src_vid, dst_vid, li, false, false});
                aux.cell_edges[li].push_back(static_cast<std::uint32_t>(aux.edges.size() - 1));
            }
        }
    }

    aux.out_edges.assign(aux.vertices.size(), {});
    aux.in_edges.assign(aux.vertices.size(), {});
    for (std::uint32_t e = 0; e < aux.edges.size(); ++e) {
        aux.out_edges[aux.edges[e].tail].push_back(e);
        aux.in_edges[aux.edges[e].head].push_back(e);
    }
    aux.disk_vertices.assign(n, {});
    for (std::uint32_t v = 0; v < aux.vertices.size(); ++v)
        aux.disk_vertices[aux.vertices[v].disk].push_back(v);
    return aux;
}

namespace {

// Blocking patterns over the anticlockwise indexing: an edge is kept unless a
// same-cell edge that starts earlier interleaves it. The last pattern is the
// symmetric completion of the rule (the source statement repeats its third
// ordering verbatim where this one belongs).
bool blocks(std::uint32_t uk, std::uint32_t vk, std::uint32_t ul, std::uint32_t vl) {
    auto lt = [](std::uint32_t a, std::uint32_t b) { return a < b; };
    if (lt(uk, ul) && lt(ul, vk) && lt(vk, vl)) return true;
    if (lt(vk, ul) && lt(ul, uk) && lt(uk, vl)) return true;
    if (lt(uk, vl) && lt(vl, vk) && lt(vk, ul)) return true;
    if (lt(vk, vl) && lt(vl, uk) && lt(uk, ul)) return true;
    return false;
}

} // namespace

std::vector<std::uint32_t> maximal_planar_subgraph(AuxiliaryGraph& aux) {
    std::vector<std::uint32_t> kept;
    for (std::uint32_t li = 0; li < aux.cell_edges.size(); ++li) {
        const auto& es = aux.cell_edges[li];
        for (std::uint32_t el : es) {
            std::uint32_t ul = aux.position_in(aux.edges[el].tail, li);
            std::uint32_t vl = aux.position_in(aux.edges[el].head, li);
            bool blocked = false;
            for (std::uint32_t ek : es) {
                if (ek == el) continue;
                std::uint32_t uk = aux.position_in(aux.edges[ek].tail, li);
                std::uint32_t vk = aux.position_in(aux.edges[ek].head, li);
                if (blocks(uk, vk, ul, vl)) { blocked = true; break; }
            }
            aux.edges[el].kept = !blocked;
        }
        // completion pass: an excluded edge whose crossings were all excluded
        // too can rejoin without breaking planarity
        for (std::uint32_t el : es) {
            if (aux.edges[el].kept) continue;
            std::uint32_t ul = aux.position_in(aux.edges[el].tail, li);
            std::uint32_t vl = aux.position_in(aux.edges[el].head, li);
            bool crossed = false;
            for (std::uint32_t ek : es) {
                if (ek == el || !aux.edges[ek].kept) continue;
                if (edges_cross(aux.position_in(aux.edges[ek].tail, li),
                                aux.position_in(aux.edges[ek].head, li), ul, vl)) {
                    crossed = true;
                    break;
                }
            }
            if (!crossed) aux.edges[el].kept = true;
        }
        for (std::uint32_t el : es)
            if (aux.edges[el].kept) kept.push_back(el);
    }
    return kept;
}

bool crossing_closure_check(const AuxiliaryGraph& aux, std::uint32_t edge_a,
                            std::uint32_t edge_b) {
    if (!aux.paths_cross(edge_a, edge_b)) return true;
    const AuxEdge& a = aux.edges[edge_a];
    const AuxEdge& b = aux.edges[edge_b];
    // the implied shortcuts join the disks; which placement carries the edge
    // is a representation detail
    return aux.has_disk_edge(aux.vertices[a.tail].disk, aux.vertices[b.head].disk) &&
           aux.has_disk_edge(aux.vertices[b.tail].disk, aux.vertices[a.head].disk);
}

namespace {

// ---- embedding of the maximal planar subgraph plus cell boundary rings ----

struct HEmbedding {
    PlanarEmbedding emb;                 // over local ids
    std::vector<std::uint32_t> global;   // local -> aux vertex id
    std::vector<std::uint32_t> local;    // aux vertex id -> local or UINT32_MAX
};

// kept-edge selection restricted to a subset (blockers outside vanish)
std::vector<char> kept_in_subset(const AuxiliaryGraph& aux,
                                 const std::vector<char>& in_subset) {
    std::vector<char> kept(aux.edges.size(), 0);
    for (std::uint32_t li = 0; li < aux.cell_edges.size(); ++li) {
        std::vector<std::uint32_t> es;
        for (std::uint32_t e : aux.cell_edges[li])
            if (in_subset[aux.edges[e].tail] && in_subset[aux.edges[e].head])
                es.push_back(e);
        for (std::uint32_t el : es) {
            std::uint32_t ul = aux.position_in(aux.edges[el].tail, li);
            std::uint32_t vl = aux.position_in(aux.edges[el].head, li);
            bool blocked = false;
            for (std::uint32_t ek : es) {
                if (ek == el) continue;
                std::uint32_t uk = aux.position_in(aux.edges[ek].tail, li);
                std::uint32_t vk = aux.position_in(aux.edges[ek].head, li);
                if (blocks(uk, vk, ul, vl)) { blocked = true; break; }
            }
            kept[el] = !blocked;
        }
        for (std::uint32_t el : es) {
            if (kept[el]) continue;
            std::uint32_t ul = aux.position_in(aux.edges[el].tail, li);
            std::uint32_t vl = aux.position_in(aux.edges[el].head, li);
            bool crossed = false;
            for (std::uint32_t ek : es) {
                if (ek == el || !kept[ek]) continue;
                if (edges_cross(aux.position_in(aux.edges[ek].tail, li),
                                aux.position_in(aux.edges[ek].head, li), ul, vl)) {
                    crossed = true;
                    break;
                }
            }
            if (!crossed) kept[el] = true;
        }
    }
    return kept;
}

HEmbedding build_h_embedding(const AuxiliaryGraph& aux, const RectSubdivision& subdiv,
                             const std::vector<std::uint32_t>& subset) {
    HEmbedding h;
    h.global = subset;
    h.local.assign(aux.vertices.size(), UINT32_MAX);
    for (std::uint32_t i = 0; i < subset.size(); ++i) h.local[subset[i]] = i;
    std::vector<char> in_subset(aux.vertices.size(), 0);
    for (std::uint32_t v : subset) in_subset[v] = 1;

    std::vector<char> kept = kept_in_subset(aux, in_subset);

    // undirected edge set: kept chords plus cell rings over surviving vertices
    struct Chord { std::uint32_t other; std::uint32_t cell; };
    std::vector<std::vector<Chord>> incident(subset.size());
    std::unordered_set<std::uint64_t> seen;
    auto add_undirected = [&](std::uint32_t gu, std::uint32_t gv, std::uint32_t cell) {
        std::uint32_t lu = h.local[gu], lv = h.local[gv];
        if (lu == lv) return;
        std::uint64_t key = pack2(std::min(lu, lv), std::max(lu, lv));
        if (seen.count(key)) return;
        seen.insert(key);
        incident[lu].push_back({lv, cell});
        incident[lv].push_back({lu, cell});
    };
    for (std::uint32_t e = 0; e < aux.edges.size(); ++e) {
        if (!kept[e]) continue;
        add_undirected(aux.edges[e].tail, aux.edges[e].head, aux.edges[e].cell);
    }
    // rings: consecutive surviving placements per cell
    for (std::uint32_t li = 0; li < aux.cell_order.size(); ++li) {
        std::vector<std::uint32_t> ring;
        for (std::uint32_t v : aux.cell_order[li])
            if (in_subset[v]) ring.push_back(v);
        if (ring.size() < 2) continue;
        for (std::size_t i = 0; i < ring.size(); ++i) {
            std::uint32_t a = ring[i];
            std::uint32_t b = ring[(i + 1) % ring.size()];
            if (ring.size() == 2 && i == 1) break; // avoid the doubled pair
            add_undirected(a, b, li);
        }
    }

    // rotations: cells clockwise around the anchor, then chords by decreasing
    // anticlockwise offset within each cell
    PlanarEmbedding emb(subset.size());
    for (std::uint32_t lv = 0; lv < subset.size(); ++lv) {
        std::uint32_t gv = subset[lv];
        const AuxVertex& av = aux.vertices[gv];
        const SweepLine& line = subdiv.lines[av.line];
        double ax = line.axis == 0 ? line.coord : av.along;
        double ay = line.axis == 0 ? av.along : line.coord;

        // group incident edges by owning cell
        std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> by_cell;
        for (const Chord& c : incident[lv]) by_cell[c.cell].push_back(c.other);

        struct Sector { double angle; std::vector<std::pair<std::uint32_t, std::uint32_t>> chords; };
        std::vector<Sector> sectors;
        for (auto& [cell, others] : by_cell) {
            const auto& box = subdiv.cells[subdiv.leaves[cell]];
            double cx = (box.lo[0] + box.hi[0]) / 2 - ax;
            double cy = (box.lo[1] + box.hi[1]) / 2 - ay;
            Sector sec;
            sec.angle = std::atan2(cy, cx);
            std::uint32_t mypos = aux.position_in(gv, cell);
            std::uint32_t k = static_cast<std::uint32_t>(aux.cell_order[cell].size());
            for (std::uint32_t other_lv : others) {
                std::uint32_t gpos = aux.position_in(subset[other_lv], cell);
                std::uint32_t offset = (gpos + k - mypos) % k;
                sec.chords.push_back({offset, other_lv});
            }
            std::sort(sec.chords.begin(), sec.chords.end(),
                      [](auto& a, auto& b) { return a.first > b.first; });
            sectors.push_back(std::move(sec));
        }
        std::sort(sectors.begin(), sectors.end(),
                  [](const Sector& a, const Sector& b) { return a.angle > b.angle; });
        std::vector<Vertex> rot;
        for (const Sector& sec : sectors)
            for (auto& [off, other] : sec.chords) rot.push_back(other);
        emb.set_rotation(lv, std::move(rot));
    }
    h.emb = std::move(emb);
    return h;
}

} // namespace

std::vector<std::vector<std::uint32_t>> pseudo_components(
    const AuxiliaryGraph& aux, const std::vector<std::uint32_t>& subset,
    const PseudoSeparator& ps) {
    std::vector<char> in_subset(aux.vertices.size(), 0);
    for (std::uint32_t v : subset) in_subset[v] = 1;
    std::vector<char> removed(aux.vertices.size(), 0);
    for (std::uint32_t v : ps.v2) removed[v] = 1;

    // union-find over surviving vertices through surviving edges
    std::unordered_map<std::uint32_t, std::uint32_t> idx;
    std::vector<std::uint32_t> verts;
    for (std::uint32_t v : subset) {
        if (removed[v]) continue;
        idx.emplace(v, static_cast<std::uint32_t>(verts.size()));
        verts.push_back(v);
    }
    std::vector<std::uint32_t> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };

    auto edge_cut = [&](std::uint32_t eid) {
        for (std::uint32_t e2id : ps.e2)
            if (aux.paths_cross(eid, e2id)) return true;
        return false;
    };

    for (std::uint32_t eid = 0; eid < aux.edges.size(); ++eid) {
        const AuxEdge& e = aux.edges[eid];
        if (!in_subset[e.tail] || !in_subset[e.head]) continue;
        if (removed[e.tail] || removed[e.head]) continue;
        if (edge_cut(eid)) continue;
        std::uint32_t a = find(idx[e.tail]);
        std::uint32_t b = find(idx[e.head]);
        if (a != b) parent[a] = b;
    }
    std::unordered_map<std::uint32_t, std::uint32_t> comp_idx;
    std::vector<std::vector<std::uint32_t>> comps;
    for (std::uint32_t i = 0; i < verts.size(); ++i) {
        std::uint32_t root = find(i);
        auto it = comp_idx.find(root);
        if (it == comp_idx.end()) {
            it = comp_idx.emplace(root, static_cast<std::uint32_t>(comps.size())).first;
            comps.emplace_back();
        }
        comps[it->second].push_back(verts[i]);
    }
    return comps;
}

PseudoSeparator build_pseudo_separator(const AuxiliaryGraph& aux,
                                       const RectSubdivision& subdiv,
                                       const std::vector<std::uint32_t>& subset,
                                       double beta, WorkspaceMeter& meter) {
    PseudoSeparator ps;
    const std::size_t h = subset.size();
    ps.budget = static_cast<std::size_t>(
        std::ceil(std::pow(double(std::max<std::size_t>(h, 1)), 1.0 - beta)));
    if (h <= 3 || h <= ps.budget) return ps;

    HEmbedding hemb = build_h_embedding(aux, subdiv, subset);

    // separate every oversized embedding component under the vertex budget
    UndirectedGraph hg = hemb.emb.to_graph();
    std::vector<char> alive(hg.order(), 1);
    std::vector<std::uint32_t> comp;
    std::size_t k = components(hg, alive, comp);
    std::vector<std::vector<Vertex>> comp_members(k);
    for (Vertex v = 0; v < hg.order(); ++v) comp_members[comp[v]].push_back(v);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> cycle_pairs; // local ids
    std::unordered_set<std::uint32_t> v2_local;
    for (std::size_t c = 0; c < k; ++c) {
        if (comp_members[c].size() <= ps.budget) continue;
        PlanarEmbedding sub = hemb.emb.induced(comp_members[c]);
        TriangulatedEmbedding temb = triangulate(sub);
        PlanarSeparatorResult res =
            planar_separator(temb, WeightFn::uniform(comp_members[c].size()), meter,
                             ps.budget);
        for (Vertex lv : res.s) v2_local.insert(comp_members[c][lv]);
        for (auto& [edge, real] : res.cycle_edges) {
            (void)real;
            cycle_pairs.push_back({comp_members[c][edge.first],
                                   comp_members[c][edge.second]});
        }
    }
    for (std::uint32_t lv : v2_local) ps.v2.push_back(hemb.global[lv]);
    std::sort(ps.v2.begin(), ps.v2.end());

    // split cycle edges into real aux edges and triangulation-only edges
    std::unordered_set<std::uint32_t> e2set;
    for (auto& [la, lb] : cycle_pairs) {
        std::uint32_t ga = hemb.global[la];
        std::uint32_t gb = hemb.global[lb];
        bool real = false;
        for (std::uint32_t e : aux.out_edges[ga])
            if (aux.edges[e].head == gb) { e2set.insert(e); real = true; }
        for (std::uint32_t e : aux.out_edges[gb])
            if (aux.edges[e].head == ga) { e2set.insert(e); real = true; }
        if (real) continue;

        // shield around a triangulation-only edge: from each endpoint the
        // nearest outgoing aux edge on either side in the boundary order
        std::uint32_t cell = UINT32_MAX;
        for (const AuxPlacement& pa : aux.placements[ga]) {
            for (const AuxPlacement& pb : aux.placements[gb])
                if (pa.cell == pb.cell) { cell = pa.cell; break; }
            if (cell != UINT32_MAX) break;
        }
        if (cell == UINT32_MAX) continue; // no common rectangle: no shield exists
        std::uint32_t ring = static_cast<std::uint32_t>(aux.cell_order[cell].size());
        auto add_nearest = [&](std::uint32_t from) {
            std::uint32_t fpos = aux.position_in(from, cell);
            std::uint32_t best_cw = UINT32_MAX, best_ccw = UINT32_MAX;
            std::uint32_t cw_dist = ring, ccw_dist = ring;
            for (std::uint32_t e : aux.out_edges[from]) {
                if (aux.edges[e].cell != cell || aux.edges[e].dummy) continue;
                std::uint32_t hpos = aux.position_in(aux.edges[e].head, cell);
                std::uint32_t fwd = (hpos + ring - fpos) % ring;
                std::uint32_t bwd = (fpos + ring - hpos) % ring;
                if (fwd < ccw_dist) { ccw_dist = fwd; best_ccw = e; }
                if (bwd < cw_dist) { cw_dist = bwd; best_cw = e; }
            }
            if (best_cw != UINT32_MAX) e2set.insert(best_cw);
            if (best_ccw != UINT32_MAX) e2set.insert(best_ccw);
        };
        add_nearest(ga);
        add_nearest(gb);
    }
    ps.e2.assign(e2set.begin(), e2set.end());
    std::sort(ps.e2.begin(), ps.e2.end());
    return ps;
}

namespace {

struct ReachContext {
    const AuxiliaryGraph& aux;
    const RectSubdivision& subdiv;
    const ReachAuxOptions& opts;
    WorkspaceMeter& meter;
};

// multi-source multi-target reachability on the induced aux subgraph
std::vector<char> reach_targets(ReachContext& ctx, const std::vector<std::uint32_t>& subset,
                                const std::vector<std::uint32_t>& sources,
                                const std::vector<std::uint32_t>& targets,
                                std::size_t depth);

std::vector<char> base_reach(ReachContext& ctx, const std::vector<std::uint32_t>& subset,
                             const std::vector<std::uint32_t>& sources,
                             const std::vector<std::uint32_t>& targets) {
    ChargeGuard charge(ctx.meter, "aux-base-search",
                       static_cast<std::int64_t>(subset.size()));
    std::unordered_set<std::uint32_t> in_subset(subset.begin(), subset.end());
    std::unordered_set<std::uint32_t> seen;
    std::deque<std::uint32_t> queue;
    for (std::uint32_t s : sources) {
        if (in_subset.count(s) && !seen.count(s)) {
            seen.insert(s);
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        std::uint32_t u = queue.front();
        queue.pop_front();
        for (std::uint32_t e : ctx.aux.out_edges[u]) {
            std::uint32_t v = ctx.aux.edges[e].head;
            if (!in_subset.count(v) || seen.count(v)) continue;
            seen.insert(v);
            queue.push_back(v);
        }
    }
    std::vector<char> out(targets.size(), 0);
    for (std::size_t i = 0; i < targets.size(); ++i)
        out[i] = seen.count(targets[i]) ? 1 : 0;
    return out;
}

std::vector<char> reach_targets(ReachContext& ctx, const std::vector<std::uint32_t>& subset,
                                const std::vector<std::uint32_t>& sources,
                                const std::vector<std::uint32_t>& targets,
                                std::size_t depth) {
    if (subset.size() <= ctx.opts.base_threshold || depth >= 24)
        return base_reach(ctx, subset, sources, targets);

    PseudoSeparator ps =
        build_pseudo_separator(ctx.aux, ctx.subdiv, subset, ctx.opts.beta, ctx.meter);

    // anchors: pseudo-separator vertices plus endpoints
    std::vector<std::uint32_t> anchors = ps.v2;
    anchors.insert(anchors.end(), sources.begin(), sources.end());
    anchors.insert(anchors.end(), targets.begin(), targets.end());
    std::sort(anchors.begin(), anchors.end());
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
    {
        std::unordered_set<std::uint32_t> in_subset(subset.begin(), subset.end());
        std::vector<std::uint32_t> filtered;
        for (std::uint32_t a : anchors)
            if (in_subset.count(a)) filtered.push_back(a);
        anchors = std::move(filtered);
    }

    PseudoSeparator cut;
    cut.v2 = anchors;
    cut.e2 = ps.e2;
    auto comps = pseudo_components(ctx.aux, subset, cut);

    // no progress guard: fall back to plain search rather than recurse forever
    for (const auto& c : comps)
        if (c.size() >= subset.size()) return base_reach(ctx, subset, sources, targets);

    std::unordered_map<std::uint32_t, std::uint32_t> comp_of;
    for (std::uint32_t ci = 0; ci < comps.size(); ++ci)
        for (std::uint32_t v : comps[ci]) comp_of.emplace(v, ci);

    // marked anchors + per-pseudo-separator-edge verified crossing tails
    ChargeGuard marks(ctx.meter, "aux-marked",
                      static_cast<std::int64_t>(anchors.size() + 2 * cut.e2.size()));
    ChargeGuard tail_charge(ctx.meter, "aux-transport-tails", 0);
    std::unordered_map<std::uint32_t, char> marked;
    for (std::uint32_t a : anchors) marked[a] = 0;
    for (std::uint32_t s : sources) marked[s] = 1;
    // e2 edge -> tails of crossing edges already known reachable
    std::unordered_map<std::uint32_t, std::unordered_set<std::uint32_t>> verified;
    std::unordered_set<std::uint32_t> in_anchor(anchors.begin(), anchors.end());

    // crossing edges per pseudo-separator edge (within the subset)
    std::unordered_set<std::uint32_t> in_subset(subset.begin(), subset.end());
    std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> crossers;
    for (std::uint32_t e2id : cut.e2) {
        const AuxEdge& e2 = ctx.aux.edges[e2id];
        std::vector<std::uint32_t> lst;
        for (std::uint32_t e : ctx.aux.cell_edges[e2.cell]) {
            if (e == e2id) continue;
            const AuxEdge& cand = ctx.aux.edges[e];
            if (!in_subset.count(cand.tail) || !in_subset.count(cand.head)) continue;
            if (ctx.aux.paths_cross(e, e2id)) lst.push_back(e);
        }
        if (!lst.empty()) crossers.emplace(e2id, std::move(lst));
    }

    std::size_t total_crossers = 0;
    for (auto& [e2id, lst] : crossers) total_crossers += lst.size();
    std::size_t max_rounds = anchors.size() + total_crossers + cut.e2.size() + 2;
    for (std::size_t round = 0; round < max_rounds; ++round) {
        bool changed = false;

        // direct anchor-to-anchor arcs
        for (std::uint32_t a : anchors) {
            if (!marked[a]) continue;
            for (std::uint32_t e : ctx.aux.out_edges[a]) {
                std::uint32_t v = ctx.aux.edges[e].head;
                if (in_anchor.count(v) && in_subset.count(v) && !marked[v]) {
                    marked[v] = 1;
                    changed = true;
                }
            }
        }

        for (std::uint32_t ci = 0; ci < comps.size(); ++ci) {
            // seeds: heads of marked-anchor arcs plus heads of crossing edges
            // whose tails were already verified reachable
            std::vector<std::uint32_t> seeds;
            auto push_head = [&](std::uint32_t head) {
                auto it = comp_of.find(head);
                if (it != comp_of.end() && it->second == ci) seeds.push_back(head);
            };
            for (std::uint32_t a : anchors) {
                if (!marked[a]) continue;
                for (std::uint32_t e : ctx.aux.out_edges[a])
                    push_head(ctx.aux.edges[e].head);
            }
            for (auto& [e2id, tails] : verified) {
                for (std::uint32_t e : crossers[e2id])
                    if (tails.count(ctx.aux.edges[e].tail))
                        push_head(ctx.aux.edges[e].head);
            }
            std::sort(seeds.begin(), seeds.end());
            seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
            if (seeds.empty()) continue;

            // probes: in-component tails whose reachability marks an anchor
            // (via the tail->anchor arc) or verifies a crossing-edge tail
            std::vector<std::uint32_t> probes;
            std::vector<std::pair<std::uint32_t, std::uint32_t>> probe_marks; // probe idx -> anchor
            std::vector<std::pair<std::uint32_t, std::uint32_t>> tail_for;    // probe idx -> e2
            for (std::uint32_t a : anchors) {
                if (marked[a]) continue;
                for (std::uint32_t e : ctx.aux.in_edges[a]) {
                    std::uint32_t w = ctx.aux.edges[e].tail;
                    auto it = comp_of.find(w);
                    if (it != comp_of.end() && it->second == ci) {
                        probe_marks.push_back({static_cast<std::uint32_t>(probes.size()), a});
                        probes.push_back(w);
                    }
                }
            }
            for (auto& [e2id, lst] : crossers) {
                auto& tails = verified[e2id];
                for (std::uint32_t e : lst) {
                    std::uint32_t u = ctx.aux.edges[e].tail;
                    if (tails.count(u)) continue;
                    auto it = comp_of.find(u);
                    if (it != comp_of.end() && it->second == ci) {
                        tail_for.push_back({static_cast<std::uint32_t>(probes.size()), e2id});
                        probes.push_back(u);
                    }
                }
            }
            if (probes.empty()) continue;

            std::vector<std::uint32_t> sub = comps[ci];
            std::vector<char> hit = reach_targets(ctx, sub, seeds, probes, depth + 1);

            for (auto& [idx, anchor] : probe_marks) {
                if (hit[idx] && !marked[anchor]) {
                    marked[anchor] = 1;
                    changed = true;
                }
            }
            for (auto& [idx, e2id] : tail_for) {
                if (!hit[idx]) continue;
                if (verified[e2id].insert(probes[idx]).second) {
                    tail_charge.grow(1);
                    changed = true;
                }
            }
        }
        if (!changed) break;
    }

    std::vector<char> out(targets.size(), 0);
    for (std::size_t i = 0; i < targets.size(); ++i) {
        auto it = marked.find(targets[i]);
        out[i] = (it != marked.end() && it->second) ? 1 : 0;
    }
    return out;
}

} // namespace

bool reach_aux(const AuxiliaryGraph& aux, const RectSubdivision& subdiv,
               const std::vector<std::uint32_t>& sources,
               const std::vector<std::uint32_t>& targets, const ReachAuxOptions& opts,
               WorkspaceMeter& meter) {
    if (sources.empty() || targets.empty()) return false;
    for (std::uint32_t s : sources)
        for (std::uint32_t t : targets)
            if (s == t) return true;
    std::vector<std::uint32_t> all(aux.vertices.size());
    std::iota(all.begin(), all.end(), 0);
    ReachContext ctx{aux, subdiv, opts, meter};
    std::vector<char> hit = reach_targets(ctx, all, sources, targets, 0);
    for (char h : hit)
        if (h) return true;
    return false;
}

PennyPipeline::PennyPipeline(const DiskSet& ds_in, const PennyReachOptions& o,
                             WorkspaceMeter& meter)
    : ds(ds_in), opts(o) {
    subdiv = build_subdivision(ds, opts.epsilon, opts.sweep_constant, meter);
    aux = build_aux_graph(ds, subdiv, meter);
}

bool PennyPipeline::query(Vertex s, Vertex t, WorkspaceMeter& meter) const {
    require(s < ds.size() && t < ds.size(), "UNKNOWN_DISK",
            "query endpoints must be disk ids");
    if (s == t) return true;
    meter.set_phase("penny-reach");

    // long-lived pipeline state billed for the query's duration
    std::int64_t store = static_cast<std::int64_t>(subdiv.lines.size()) +
                         2 * static_cast<std::int64_t>(subdiv.cells.size());
    for (const auto& p : aux.placements) store += static_cast<std::int64_t>(p.size());
    ChargeGuard pipeline_charge(meter, "pipeline-store", store);

    const std::size_t n = ds.size();
    std::vector<std::uint32_t> sources, targets;
    bool same_cell_hit = false;

    // per-leaf membership scan around the endpoints' cells only
    for (std::uint32_t li = 0; li < subdiv.leaves.size(); ++li) {
        const auto& cell = subdiv.cells[subdiv.leaves[li]];
        bool has_s = box_distance(cell, ds.x[s], ds.y[s]) <= 1 + kEps;
        bool has_t = box_distance(cell, ds.x[t], ds.y[t]) <= 1 + kEps;
        if (!has_s && !has_t) continue;
        std::vector<Vertex> mem;
        for (Vertex d = 0; d < n; ++d)
            if (box_distance(cell, ds.x[d], ds.y[d]) <= 1 + kEps) mem.push_back(d);
        std::vector<char> in_mem(n, 0);
        for (Vertex d : mem) in_mem[d] = 1;

        auto search = [&](Vertex from, bool forward) {
            ChargeGuard charge(meter, "cell-search", static_cast<std::int64_t>(mem.size()));
            std::vector<char> seen(n, 0);
            std::deque<Vertex> queue{from};
            seen[from] = 1;
            while (!queue.empty()) {
                Vertex u = queue.front();
                queue.pop_front();
                const auto& nbrs = forward ? ds.arcs.out(u) : ds.arcs.in(u);
                for (Vertex v : nbrs) {
                    if (!in_mem[v] || seen[v]) continue;
                    seen[v] = 1;
                    queue.push_back(v);
                }
            }
            return seen;
        };
        if (has_s && in_mem[s]) {
            auto seen = search(s, true);
            if (has_t && in_mem[t] && seen[t]) same_cell_hit = true;
            for (std::uint32_t vid : aux.cell_order[li])
                if (seen[aux.vertices[vid].disk]) sources.push_back(vid);
        }
        if (has_t && in_mem[t]) {
            auto seen = search(t, false);
            for (std::uint32_t vid : aux.cell_order[li])
                if (seen[aux.vertices[vid].disk]) targets.push_back(vid);
        }
    }
    if (same_cell_hit) return true;

    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

    ReachAuxOptions ro;
    ro.beta = opts.beta;
    ro.base_threshold = opts.base_threshold;
    return reach_aux(aux, subdiv, sources, targets, ro, meter);
}

bool penny_reach(const DiskSet& ds, Vertex s, Vertex t, const PennyReachOptions& opts,
                 WorkspaceMeter& meter) {
    PennyPipeline pipe(ds, opts, meter);
    return pipe.query(s, t, meter);
}

} // namespace sepspace
