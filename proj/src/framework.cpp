#include "sepspace/framework.hpp"

#include <algorithm>
#include <deque>

namespace sepspace {

namespace {

struct Frame {
    const DirectedGraph& g;
    const SeparatorOracle& oracle;
    WorkspaceMeter& meter;
    const ReachOptions& opts;
    std::size_t depth = 0;
};

// direct BFS on the induced subgraph; the visited set is charged in full
bool base_search(Frame& f, const std::vector<Vertex>& subset, Vertex s, Vertex t) {
    if (s == t) return true;
    ChargeGuard visited_charge(f.meter, "base-search-visited",
                               static_cast<std::int64_t>(subset.size()));
    std::vector<char> in_subset(f.g.order(), 0);
    for (Vertex v : subset) in_subset[v] = 1;
    std::vector<char> seen(f.g.order(), 0);
    std::deque<Vertex> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : f.g.out(u)) {
            if (!in_subset[v] || seen[v]) continue;
            if (v == t) return true;
            seen[v] = 1;
            queue.push_back(v);
        }
    }
    return false;
}

bool reach_in_subset(Frame& f, const std::vector<Vertex>& subset, Vertex s, Vertex t);

bool reach_in_subset(Frame& f, const std::vector<Vertex>& subset, Vertex s, Vertex t) {
    if (s == t) return true;
    if (subset.size() <= f.opts.base_threshold) return base_search(f, subset, s, t);
    require(f.depth < 64, "NO_PROGRESS", "separator recursion too deep");

    std::vector<Vertex> sep = f.oracle(f.g, subset, f.meter);
    if (f.opts.check_oracle) {
        // induced-subgraph check under uniform weights
        std::vector<std::uint32_t> local(f.g.order(), UINT32_MAX);
        for (std::size_t i = 0; i < subset.size(); ++i) local[subset[i]] = static_cast<std::uint32_t>(i);
        DirectedGraph sub(subset.size());
        for (Vertex v : subset)
            for (Vertex u : f.g.out(v))
                if (local[u] != UINT32_MAX) sub.add_arc(local[v], local[u]);
        std::vector<Vertex> lsep;
        for (Vertex v : sep)
            if (local[v] != UINT32_MAX) lsep.push_back(local[v]);
        auto chk = verify_separator(sub, WeightFn::uniform(subset.size()), lsep);
        require(chk.accepted, "ORACLE_UNSOUND",
                "separator oracle returned a non-separator: " + chk.violation);
    }

    sep.push_back(s);
    sep.push_back(t);
    std::sort(sep.begin(), sep.end());
    sep.erase(std::unique(sep.begin(), sep.end()), sep.end());

    // marked array + sep ids are this frame's worktape
    ChargeGuard frame_charge(f.meter, "framework-frame",
                             static_cast<std::int64_t>(2 * sep.size()) + 2);

    // component structure of subset − sep; labels are oracle scratch
    std::vector<char> in_subset(f.g.order(), 0);
    for (Vertex v : subset) in_subset[v] = 1;
    UndirectedGraph ug(f.g.order());
    for (Vertex v : subset)
        for (Vertex u : f.g.out(v))
            if (in_subset[u]) ug.add_edge(v, u);
    std::vector<char> excluded(f.g.order(), 1);
    for (Vertex v : subset) excluded[v] = 0;
    for (Vertex v : sep) excluded[v] = 1;
    std::size_t k = 0;
    std::vector<std::uint32_t> label = charged_component_labels(ug, excluded, f.meter, &k);

    std::vector<std::vector<Vertex>> comp_members(k);
    for (Vertex v : subset)
        if (!excluded[v]) comp_members[label[v]].push_back(v);

    Frame deeper{f.g, f.oracle, f.meter, f.opts, f.depth + 1};
    auto path_via_one_component = [&](Vertex y, Vertex x) -> bool {
        if (f.g.has_arc(y, x)) return true;
        std::vector<char> from_y(k, 0), to_x(k, 0);
        for (Vertex u : f.g.out(y))
            if (in_subset[u] && !excluded[u]) from_y[label[u]] = 1;
        for (Vertex u : f.g.in(x))
            if (in_subset[u] && !excluded[u]) to_x[label[u]] = 1;
        for (std::uint32_t c = 0; c < k; ++c) {
            if (!from_y[c] || !to_x[c]) continue;
            std::vector<Vertex> sub = comp_members[c];
            sub.push_back(y);
            sub.push_back(x);
            std::sort(sub.begin(), sub.end());
            sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
            bool hit = sub.size() < subset.size()
                           ? reach_in_subset(deeper, sub, y, x)
                           : base_search(deeper, sub, y, x); // oracle failed to shrink
            if (hit) return true;
        }
        return false;
    };

    std::vector<char> marked(sep.size(), 0);
    auto idx_of = [&](Vertex v) {
        return static_cast<std::size_t>(
            std::lower_bound(sep.begin(), sep.end(), v) - sep.begin());
    };
    marked[idx_of(s)] = 1;

    bool changed = true;
    std::size_t rounds = 0;
    while (changed && rounds <= sep.size()) {
        changed = false;
        ++rounds;
        for (std::size_t xi = 0; xi < sep.size(); ++xi) {
            if (marked[xi]) continue;
            for (std::size_t yi = 0; yi < sep.size() && !marked[xi]; ++yi) {
                if (!marked[yi]) continue;
                if (path_via_one_component(sep[yi], sep[xi])) {
                    marked[xi] = 1;
                    changed = true;
                    if (f.opts.check_marks) {
                        Frame probe{f.g, f.oracle, f.meter, f.opts, f.depth};
                        require(base_search(probe, subset, s, sep[xi]), "MARK_UNSOUND",
                                "marked vertex is not reachable from the source");
                    }
                }
            }
        }
    }
    return marked[idx_of(t)];
}

} // namespace

bool reach_via_separator(const DirectedGraph& g, Vertex s, Vertex t,
                         const SeparatorOracle& oracle, WorkspaceMeter& meter,
                         const ReachOptions& opts) {
    require(s < g.order() && t < g.order(), "UNKNOWN_VERTEX",
            "query endpoints must be vertices of the graph");
    meter.set_phase("framework-reach");
    std::vector<Vertex> all(g.order());
    for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
    Frame f{g, oracle, meter, opts, 0};
    return reach_in_subset(f, all, s, t);
}

} // namespace sepspace
