#include "sepspace/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace sepspace {

DirectedGraph DirectedGraph::from_arcs(std::size_t n, const std::vector<Arc>& arcs) {
    DirectedGraph g(n);
    for (auto [u, v] : arcs) g.add_arc(u, v);
    return g;
}

void DirectedGraph::add_arc(Vertex u, Vertex v) {
    require(u < order() && v < order(), "UNKNOWN_VERTEX",
            "arc endpoint out of range");
    require(u != v, "SELF_LOOP", "self-loops are not allowed");
    if (has_arc(u, v)) return;
    auto& o = out_[u];
    o.insert(std::lower_bound(o.begin(), o.end(), v), v);
    auto& i = in_[v];
    i.insert(std::lower_bound(i.begin(), i.end(), u), u);
    ++arc_count_;
}

bool DirectedGraph::has_arc(Vertex u, Vertex v) const {
    if (u >= order() || v >= order()) return false;
    const auto& o = out_[u];
    return std::binary_search(o.begin(), o.end(), v);
}

std::vector<Arc> DirectedGraph::arcs() const {
    std::vector<Arc> all;
    all.reserve(arc_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : out_[u]) all.emplace_back(u, v);
    return all;
}

void UndirectedGraph::add_edge(Vertex u, Vertex v) {
    require(u < order() && v < order(), "UNKNOWN_VERTEX",
            "edge endpoint out of range");
    require(u != v, "SELF_LOOP", "self-loops are not allowed");
    if (has_edge(u, v)) return;
    auto& a = adj_[u];
    a.insert(std::lower_bound(a.begin(), a.end(), v), v);
    auto& b = adj_[v];
    b.insert(std::lower_bound(b.begin(), b.end(), u), u);
    ++edge_count_;
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const {
    if (u >= order() || v >= order()) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> UndirectedGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> all;
    all.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) all.emplace_back(u, v);
    return all;
}

UndirectedGraph underlying_undirected(const DirectedGraph& g) {
    UndirectedGraph ug(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v : g.out(u)) ug.add_edge(u, v);
    return ug;
}

std::size_t components(const UndirectedGraph& g, const std::vector<char>& alive,
                       std::vector<std::uint32_t>& comp_id) {
    const std::uint32_t none = UINT32_MAX;
    comp_id.assign(g.order(), none);
    std::size_t count = 0;
    std::deque<Vertex> queue;
    for (Vertex start = 0; start < g.order(); ++start) {
        if (!alive[start] || comp_id[start] != none) continue;
        comp_id[start] = static_cast<std::uint32_t>(count);
        queue.push_back(start);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex v : g.neighbors(u)) {
                if (alive[v] && comp_id[v] == none) {
                    comp_id[v] = static_cast<std::uint32_t>(count);
                    queue.push_back(v);
                }
            }
        }
        ++count;
    }
    return count;
}

namespace {

// Bin component weights into two sides, each at most 2/3 of the total mass.
// Returns side per component or empty if no feasible binning was found.
std::vector<int> bin_components(const std::vector<std::int64_t>& comp_num,
                                std::int64_t den) {
    const std::size_t k = comp_num.size();
    auto side_ok = [&](__int128 sum) { return 3 * sum <= 2 * __int128(den); };
    std::vector<int> side(k, 0);
    if (k == 0) return side;

    if (k <= 30) {
        // exact: meet in the middle over component subsets, minimise max side
        std::size_t half = k / 2;
        std::size_t left_n = half, right_n = k - half;
        std::vector<std::pair<std::int64_t, std::uint32_t>> right_sums;
        right_sums.reserve(std::size_t(1) << right_n);
        for (std::uint32_t mask = 0; mask < (1u << right_n); ++mask) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < right_n; ++i)
                if (mask >> i & 1) s += comp_num[half + i];
            right_sums.emplace_back(s, mask);
        }
        std::sort(right_sums.begin(), right_sums.end());
        std::int64_t total = 0;
        for (auto s : comp_num) total += s;
        std::int64_t best_hi = -1;
        std::uint64_t best_mask = 0;
        for (std::uint32_t lmask = 0; lmask < (1u << left_n); ++lmask) {
            std::int64_t ls = 0;
            for (std::size_t i = 0; i < left_n; ++i)
                if (lmask >> i & 1) ls += comp_num[i];
            // want side1 = ls + rs as close to total/2 from below as possible
            std::int64_t want = total / 2 - ls;
            auto it = std::upper_bound(right_sums.begin(), right_sums.end(),
                                       std::make_pair(want, UINT32_MAX));
            if (it == right_sums.begin()) continue;
            --it;
            std::int64_t s1 = ls + it->first;
            std::int64_t hi = std::max(s1, total - s1);
            if (best_hi < 0 || hi < best_hi) {
                best_hi = hi;
                best_mask = (std::uint64_t(it->second) << left_n) | lmask;
            }
        }
        if (best_hi < 0 || !side_ok(best_hi)) return {};
        // mask layout: left component bits first, right components shifted up
        for (std::size_t i = 0; i < k; ++i)
            side[i] = (best_mask >> i & 1) ? 0 : 1;
        return side;
    }

    // first-fit decreasing, then a sorted sequential fill as fallback
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return comp_num[a] > comp_num[b];
    });
    auto attempt = [&](bool sequential) -> bool {
        std::int64_t s0 = 0, s1 = 0;
        for (std::size_t idx : order) {
            std::int64_t c = comp_num[idx];
            if (side_ok(s0 + c) && (!sequential || s1 == 0)) {
                s0 += c;
                side[idx] = 0;
            } else if (side_ok(s1 + c)) {
                s1 += c;
                side[idx] = 1;
            } else {
                return false;
            }
        }
        return true;
    };
    if (attempt(false)) return side;
    if (attempt(true)) return side;
    return {};
}

} // namespace

SeparatorCheck verify_separator(const UndirectedGraph& ug, const WeightFn& w,
                                const std::vector<Vertex>& s) {
    SeparatorCheck out;
    std::vector<char> alive(ug.order(), 1);
    for (Vertex v : s) {
        require(v < ug.order(), "UNKNOWN_VERTEX", "separator vertex out of range");
        alive[v] = 0;
    }
    std::vector<std::uint32_t> comp_id;
    std::size_t k = components(ug, alive, comp_id);

    std::vector<std::int64_t> comp_num(k, 0);
    for (Vertex v = 0; v < ug.order(); ++v)
        if (alive[v]) comp_num[comp_id[v]] += w.numerator(v);

    std::vector<int> side = bin_components(comp_num, w.denominator());
    if (side.empty() && k > 0) {
        out.violation = "REJECTED_BALANCE";
        return out;
    }

    out.accepted = true;
    out.cert.s = s;
    std::sort(out.cert.s.begin(), out.cert.s.end());
    out.cert.s.erase(std::unique(out.cert.s.begin(), out.cert.s.end()), out.cert.s.end());
    std::int64_t n1 = 0, n2 = 0;
    for (Vertex v = 0; v < ug.order(); ++v) {
        if (!alive[v]) continue;
        if (side[comp_id[v]] == 0) {
            out.cert.v1.push_back(v);
            n1 += w.numerator(v);
        } else {
            out.cert.v2.push_back(v);
            n2 += w.numerator(v);
        }
    }
    out.cert.w1 = Frac(n1, w.denominator());
    out.cert.w2 = Frac(n2, w.denominator());
    return out;
}

SeparatorCheck verify_separator(const DirectedGraph& g, const WeightFn& w,
                                const std::vector<Vertex>& s) {
    return verify_separator(underlying_undirected(g), w, s);
}

bool reach_oracle(const DirectedGraph& g, Vertex s, Vertex t) {
    require(s < g.order() && t < g.order(), "UNKNOWN_VERTEX",
            "reachability query outside the vertex range");
    if (s == t) return true;
    std::vector<char> seen(g.order(), 0);
    std::deque<Vertex> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : g.out(u)) {
            if (v == t) return true;
            if (!seen[v]) {
                seen[v] = 1;
                queue.push_back(v);
            }
        }
    }
    return false;
}

} // namespace sepspace
