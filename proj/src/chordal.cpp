#include "sepspace/chordal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace sepspace {

std::vector<std::pair<Vertex, Vertex>> deficiency(const UndirectedGraph& g, Vertex v) {
    require(v < g.order(), "UNKNOWN_VERTEX", "deficiency of missing vertex");
    const auto& nb = g.neighbors(v);
    std::vector<std::pair<Vertex, Vertex>> out;
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.has_edge(nb[i], nb[j])) out.emplace_back(nb[i], nb[j]);
    return out;
}

UndirectedGraph eliminate(const UndirectedGraph& g, Vertex v) {
    UndirectedGraph out(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        if (u == v) continue;
        for (Vertex x : g.neighbors(u))
            if (x != v && u < x) out.add_edge(u, x);
    }
    for (auto [a, b] : deficiency(g, v)) out.add_edge(a, b);
    return out;
}

namespace {

// For every vertex of one connected component, the weight of the heaviest
// component left by its removal; articulation-point DFS, all vertices in one
// pass. Used to choose the opening separator vertex.
std::vector<std::int64_t> removal_max_component(const UndirectedGraph& g,
                                                const std::vector<Vertex>& comp,
                                                const WeightFn& w) {
    std::vector<std::int64_t> result(g.order(), 0);
    std::vector<char> in_comp(g.order(), 0);
    for (Vertex v : comp) in_comp[v] = 1;
    std::int64_t total = 0;
    for (Vertex v : comp) total += w.numerator(v);

    std::vector<std::int64_t> sub(g.order(), 0); // DFS subtree weight
    std::vector<std::uint32_t> disc(g.order(), 0), low(g.order(), 0);
    std::vector<std::int64_t> cut_sum(g.order(), 0); // split-off subtree mass
    std::vector<std::int64_t> cut_max(g.order(), 0);
    std::uint32_t timer = 1;

    struct Item { Vertex v; Vertex parent; std::size_t next; };
    std::vector<Item> stack;
    Vertex root = comp.front();
    stack.push_back({root, root, 0});
    disc[root] = low[root] = timer++;
    sub[root] = w.numerator(root);
    while (!stack.empty()) {
        auto& [v, parent, next] = stack.back();
        const auto& nbrs = g.neighbors(v);
        if (next < nbrs.size()) {
            Vertex u = nbrs[next++];
            if (!in_comp[u]) continue;
            if (disc[u] == 0) {
                disc[u] = low[u] = timer++;
                sub[u] = w.numerator(u);
                stack.push_back({u, v, 0});
            } else if (u != parent) {
                low[v] = std::min(low[v], disc[u]);
            }
        } else {
            Vertex child = v;
            stack.pop_back();
            if (!stack.empty()) {
                Vertex p = stack.back().v;
                low[p] = std::min(low[p], low[child]);
                sub[p] += sub[child];
                if (low[child] >= disc[p]) { // p separates this subtree
                    cut_sum[p] += sub[child];
                    cut_max[p] = std::max(cut_max[p], sub[child]);
                }
            }
        }
    }
    for (Vertex v : comp) {
        std::int64_t rest = total - w.numerator(v) - cut_sum[v];
        result[v] = std::max(cut_max[v], rest);
    }
    return result;
}

// MCS visit order (first visited first), optionally visiting `first` before
// anything else; `first` must be a clique for the result to stay a valid MCS
// (its members always sit at the maximum count, so preferring them is only a
// tie-break). Ties go to the lower vertex id. Bucketed, O((n+m) log n).
std::vector<Vertex> mcs_order(const UndirectedGraph& g, const std::vector<Vertex>& first) {
    const std::size_t n = g.order();
    std::vector<std::uint32_t> score(n, 0);
    std::vector<char> visited(n, 0);
    // preferred vertices get a +n offset so they drain first
    std::vector<std::set<Vertex>> bucket(2 * n + 1);
    for (Vertex v : first) score[v] = static_cast<std::uint32_t>(n);
    for (Vertex v = 0; v < n; ++v) bucket[score[v]].insert(v);
    std::size_t top = first.empty() ? 0 : n;
    std::vector<Vertex> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        while (bucket[top].empty()) --top;
        Vertex best = *bucket[top].begin();
        bucket[top].erase(bucket[top].begin());
        visited[best] = 1;
        order.push_back(best);
        for (Vertex u : g.neighbors(best)) {
            if (visited[u]) continue;
            bucket[score[u]].erase(u);
            ++score[u];
            bucket[score[u]].insert(u);
            if (score[u] > top) top = score[u];
        }
    }
    return order;
}

// zero-fill check for the elimination order (reverse MCS): every vertex's
// earlier-ordered neighbors... we use the standard test: for each v, the
// later-ordered neighbors of v must all be adjacent to the latest of them.
// Orders here are elimination orders (eliminated front to back).
bool zero_fill(const UndirectedGraph& g, const std::vector<Vertex>& elim_order,
               Vertex* bad_vertex) {
    const std::size_t n = g.order();
    std::vector<std::uint32_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[elim_order[i]] = static_cast<std::uint32_t>(i);
    for (Vertex v = 0; v < n; ++v) {
        Vertex anchor = UINT32_MAX; // later neighbor eliminated soonest
        for (Vertex u : g.neighbors(v))
            if (pos[u] > pos[v] && (anchor == UINT32_MAX || pos[u] < pos[anchor])) anchor = u;
        if (anchor == UINT32_MAX) continue;
        for (Vertex u : g.neighbors(v)) {
            if (u == anchor || pos[u] <= pos[v]) continue;
            if (!g.has_edge(anchor, u)) {
                if (bad_vertex) *bad_vertex = v;
                return false;
            }
        }
    }
    return true;
}

// witness extraction: v with two later neighbors a, b that are non-adjacent;
// the shortest a-b path avoiding N[v] \ {a,b} closes a chordless >=4 cycle.
std::vector<Vertex> hole_witness(const UndirectedGraph& g, const std::vector<Vertex>& order) {
    const std::size_t n = g.order();
    std::vector<std::uint32_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = static_cast<std::uint32_t>(i);
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> later;
        for (Vertex u : g.neighbors(v))
            if (pos[u] > pos[v]) later.push_back(u);
        for (std::size_t i = 0; i < later.size(); ++i) {
            for (std::size_t j = i + 1; j < later.size(); ++j) {
                Vertex a = later[i], b = later[j];
                if (g.has_edge(a, b)) continue;
                // BFS from a to b avoiding closed neighborhood of v (minus a,b)
                std::vector<char> blocked(n, 0);
                blocked[v] = 1;
                for (Vertex u : g.neighbors(v)) blocked[u] = 1;
                blocked[a] = blocked[b] = 0;
                std::vector<Vertex> par(n, UINT32_MAX);
                std::deque<Vertex> q{a};
                par[a] = a;
                while (!q.empty()) {
                    Vertex x = q.front();
                    q.pop_front();
                    for (Vertex y : g.neighbors(x)) {
                        if (blocked[y] || par[y] != UINT32_MAX) continue;
                        par[y] = x;
                        q.push_back(y);
                    }
                }
                if (par[b] == UINT32_MAX) continue;
                std::vector<Vertex> cycle{v};
                for (Vertex x = b; x != a; x = par[x]) cycle.push_back(x);
                cycle.push_back(a);
                std::reverse(cycle.begin() + 1, cycle.end());
                if (cycle.size() >= 4) return cycle;
            }
        }
    }
    return {};
}

} // namespace

std::vector<std::pair<Vertex, Vertex>> fill_in(const UndirectedGraph& g,
                                               const std::vector<Vertex>& order) {
    UndirectedGraph cur = g;
    std::vector<std::pair<Vertex, Vertex>> fill;
    for (Vertex v : order) {
        auto d = deficiency(cur, v);
        fill.insert(fill.end(), d.begin(), d.end());
        cur = eliminate(cur, v);
    }
    return fill;
}

PeoResult find_peo(const UndirectedGraph& g) {
    PeoResult out;
    std::vector<Vertex> visit = mcs_order(g, {});
    out.order.assign(visit.rbegin(), visit.rend());
    Vertex bad = UINT32_MAX;
    if (zero_fill(g, out.order, &bad)) {
        out.chordal = true;
        return out;
    }
    out.chordal = false;
    out.hole = hole_witness(g, out.order);
    require(!out.hole.empty(), "NOT_CHORDAL",
            "graph failed the zero-fill test but no hole was extracted");
    out.order.clear();
    return out;
}

ChordalInstance ChordalInstance::validate(DirectedGraph g, WeightFn w) {
    UndirectedGraph ug = underlying_undirected(g);
    PeoResult peo = find_peo(ug);
    if (!peo.chordal) {
        std::string cyc;
        for (Vertex v : peo.hole) cyc += std::to_string(v) + " ";
        raise("NOT_CHORDAL", "chordless cycle: " + cyc);
    }
    ChordalInstance inst;
    inst.g = std::move(g);
    inst.w = std::move(w);
    inst.peo = std::move(peo.order);
    return inst;
}

Vertex find_adjacent_to_all(const UndirectedGraph& g, const std::vector<Vertex>& clique,
                            const std::vector<Vertex>& component) {
    std::vector<char> in_c(g.order(), 0), in_a(g.order(), 0);
    for (Vertex v : clique) in_c[v] = 1;
    for (Vertex v : component) in_a[v] = 1;
    for (Vertex c : clique) {
        bool touches = false;
        for (Vertex u : g.neighbors(c))
            if (in_a[u]) { touches = true; break; }
        require(touches, "ASSUMPTION_VIOLATED",
                "clique vertex " + std::to_string(c) + " has no neighbor in the component");
    }

    // MCS on G[A ∪ C] that visits C first yields an elimination order (the
    // reverse) peeling A simplicially before C; the first A-vertex visited is
    // the last one eliminated, and is adjacent to the whole clique.
    std::vector<Vertex> local;
    local.reserve(clique.size() + component.size());
    local.insert(local.end(), clique.begin(), clique.end());
    local.insert(local.end(), component.begin(), component.end());
    std::sort(local.begin(), local.end());
    std::vector<std::uint32_t> local_id(g.order(), UINT32_MAX);
    for (std::size_t i = 0; i < local.size(); ++i) local_id[local[i]] = static_cast<std::uint32_t>(i);
    UndirectedGraph sub(local.size());
    for (Vertex v : local)
        for (Vertex u : g.neighbors(v))
            if (v < u && local_id[u] != UINT32_MAX) sub.add_edge(local_id[v], local_id[u]);
    std::vector<Vertex> first;
    for (Vertex c : clique) first.push_back(local_id[c]);
    std::vector<Vertex> visit = mcs_order(sub, first);
    for (Vertex lv : visit) {
        Vertex v = local[lv];
        if (in_a[v]) return v;
    }
    raise("ASSUMPTION_VIOLATED", "component is empty");
}

std::vector<std::pair<Vertex, Frac>> marker_components(const UndirectedGraph& g,
                                                       const WeightFn& w,
                                                       const std::vector<Vertex>& s,
                                                       WorkspaceMeter& meter) {
    std::vector<char> in_s(g.order(), 0);
    for (Vertex v : s) in_s[v] = 1;
    ChargeGuard cursor(meter, "marker-scan", 2);
    std::size_t k = 0;
    // batched connectivity oracle; labels are oracle scratch
    std::vector<std::uint32_t> label = charged_component_labels(g, in_s, meter, &k);
    std::vector<std::pair<Vertex, Frac>> out;
    std::vector<char> seen(k, 0);
    std::vector<std::int64_t> weight(k, 0);
    std::vector<Vertex> marker(k, 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (in_s[v]) continue;
        std::uint32_t c = label[v];
        if (!seen[c]) { // lowest index first encountered = marker
            seen[c] = 1;
            marker[c] = v;
        }
        weight[c] += w.numerator(v);
    }
    for (std::size_t c = 0; c < k; ++c)
        out.emplace_back(marker[c], Frac(weight[c], w.denominator()));
    return out;
}

CliqueSeparator chordal_separator(const ChordalInstance& inst, WorkspaceMeter& meter) {
    const UndirectedGraph ug = underlying_undirected(inst.g);
    const WeightFn& w = inst.w;
    const Frac half(1, 2);

    meter.set_phase("chordal-separator");
    std::vector<Vertex> s;
    ChargeGuard s_charge(meter, "separator-set", 0);

    const std::size_t max_iters = ug.order() * ug.order() + 16;
    std::size_t iters = 0;
    while (true) {
        require(++iters <= max_iters, "NO_PROGRESS",
                "separator loop exceeded its iteration bound");
        // one batched oracle call per iteration; labels and the component
        // member list below are oracle scratch, only S itself is charged
        std::vector<char> in_s(ug.order(), 0);
        for (Vertex v : s) in_s[v] = 1;
        std::size_t k = 0;
        std::vector<std::uint32_t> label = charged_component_labels(ug, in_s, meter, &k);
        std::vector<std::int64_t> comp_weight(k, 0);
        for (Vertex v = 0; v < ug.order(); ++v)
            if (!in_s[v]) comp_weight[label[v]] += w.numerator(v);
        std::uint32_t heavy = UINT32_MAX;
        for (std::uint32_t c = 0; c < k; ++c) {
            if (!w.sum_le(comp_weight[c], half)) { heavy = c; break; }
        }
        if (heavy == UINT32_MAX) break;

        // drop separator vertices with no neighbor in the heavy component
        std::vector<Vertex> kept;
        for (Vertex x : s) {
            bool adj = false;
            for (Vertex u : ug.neighbors(x))
                if (!in_s[u] && label[u] == heavy) { adj = true; break; }
            if (adj) kept.push_back(x);
        }
        if (kept.size() != s.size()) {
            s_charge.grow(static_cast<std::int64_t>(kept.size()) -
                          static_cast<std::int64_t>(s.size()));
            s = std::move(kept);
            continue; // dropped vertices rejoin the pool before the next pick
        }

        std::vector<Vertex> comp;
        for (Vertex v = 0; v < ug.order(); ++v)
            if (!in_s[v] && label[v] == heavy) comp.push_back(v);
        Vertex v;
        if (s.empty()) {
            // any vertex qualifies for an empty clique: open with the one
            // whose removal leaves the lightest heaviest component
            auto worst = removal_max_component(ug, comp, w);
            v = comp.front();
            for (Vertex cand : comp)
                if (worst[cand] < worst[v]) v = cand;
        } else {
            v = find_adjacent_to_all(ug, s, comp);
        }
        s.push_back(v);
        s_charge.grow(1);
    }

    CliqueSeparator out;
    std::sort(s.begin(), s.end());
    out.s = std::move(s);
    out.is_clique = true;
    for (std::size_t i = 0; i < out.s.size() && out.is_clique; ++i)
        for (std::size_t j = i + 1; j < out.s.size(); ++j)
            if (!ug.has_edge(out.s[i], out.s[j])) { out.is_clique = false; break; }
    out.edge_bound = out.s.size() * (out.s.size() ? out.s.size() - 1 : 0) / 2;
    out.component_weights = marker_components(ug, w, out.s, meter);
    return out;
}

} // namespace sepspace
