#include "sepspace/planar_separator.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <tuple>
#include <unordered_set>

namespace sepspace {

namespace {

using i128 = __int128;

inline std::uint64_t ekey(Vertex u, Vertex v) {
    return u < v ? (std::uint64_t(u) << 32 | v) : (std::uint64_t(v) << 32 | u);
}

struct CycleOut {
    bool ok = false;
    std::vector<Vertex> cycle;          // simple cycle, or plain vertex set
    bool is_cycle = false;              // consecutive pairs are edges
    std::vector<char> in_side_a;        // per vertex, valid iff is_cycle
    bool uses_fake = false;
};

// Weighted fundamental-cycle separator on one connected embedding.
// `nums` are weight numerators, `total` their sum; sides must stay <= 2/3
// of total. Fake chords complete the outer face and are avoided if possible.
class CycleSeparator {
public:
    CycleSeparator(const PlanarEmbedding& emb, const std::vector<std::int64_t>& nums,
                   std::int64_t total)
        : base_(emb), nums_(nums), total_(total) {}

    CycleOut run() {
        const std::size_t n = base_.order();
        if (n <= 4) return brute_force();

        CycleOut single = articulation_probe();
        if (single.ok) return single;

        CompletedTriangulation ct = complete_triangulation(base_);
        full_ = std::move(ct.full);
        fake_.clear();
        for (auto [u, v] : ct.added) fake_.insert(ekey(u, v));

        build_bfs_tree();
        auto candidates = collect_candidates();

        CycleOut best;
        const std::size_t good_len = 2 * static_cast<std::size_t>(std::ceil(std::sqrt(double(n)))) + 3;
        for (const auto& cand : candidates) {
            CycleOut cur = evaluate(cand.first, cand.second);
            if (!cur.ok) continue;
            if (!best.ok || better(cur, best)) best = std::move(cur);
            if (best.ok && !best.uses_fake && best.cycle.size() <= good_len) break;
        }
        return best;
    }

private:
    const PlanarEmbedding& base_;
    const std::vector<std::int64_t>& nums_;
    std::int64_t total_;

    PlanarEmbedding full_;
    std::unordered_set<std::uint64_t> fake_;
    std::vector<Vertex> parent_;
    std::vector<std::uint32_t> depth_;

    // flood scratch, stamped to avoid reallocations per candidate
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint32_t> on_cycle_stamp_;
    std::uint32_t round_ = 0;

    bool side_ok(i128 sum) const { return 3 * sum <= 2 * i128(total_); }

    static bool better(const CycleOut& a, const CycleOut& b) {
        if (a.uses_fake != b.uses_fake) return !a.uses_fake;
        return a.cycle.size() < b.cycle.size();
    }

    CycleOut brute_force() {
        const std::size_t n = base_.order();
        UndirectedGraph g = base_.to_graph();
        CycleOut best;
        std::int64_t best_hi = -1;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::uint32_t sz = static_cast<std::uint32_t>(__builtin_popcount(mask));
            if (best.ok && sz > best.cycle.size()) continue;
            std::vector<char> alive(n, 1);
            for (std::size_t v = 0; v < n; ++v)
                if (mask >> v & 1) alive[v] = 0;
            std::vector<std::uint32_t> comp;
            std::size_t k = components(g, alive, comp);
            std::vector<std::int64_t> cw(k, 0);
            for (std::size_t v = 0; v < n; ++v)
                if (alive[v]) cw[comp[v]] += nums_[v];
            // bin exactly, keeping the most balanced feasible split: k <= 4 here
            bool feasible = false;
            std::int64_t hi = 0;
            for (std::uint32_t bm = 0; bm < (1u << k); ++bm) {
                std::int64_t s1 = 0, s2 = 0;
                for (std::size_t c = 0; c < k; ++c)
                    (bm >> c & 1 ? s1 : s2) += cw[c];
                if (side_ok(s1) && side_ok(s2)) {
                    std::int64_t cand = std::max(s1, s2);
                    if (!feasible || cand < hi) hi = cand;
                    feasible = true;
                }
            }
            if (!feasible) continue;
            if (!best.ok || sz < best.cycle.size() ||
                (sz == best.cycle.size() && hi < best_hi)) {
                best.ok = true;
                best.is_cycle = false;
                best.cycle.clear();
                for (std::size_t v = 0; v < n; ++v)
                    if (mask >> v & 1) best.cycle.push_back(static_cast<Vertex>(v));
                best_hi = hi;
            }
        }
        return best;
    }

    // cheap pre-pass: a high-degree cut vertex often separates on its own
    CycleOut articulation_probe() {
        UndirectedGraph g = base_.to_graph();
        std::vector<Vertex> order(g.order());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
            auto da = g.neighbors(a).size(), db = g.neighbors(b).size();
            if (da != db) return da > db;
            return a < b;
        });
        CycleOut out;
        for (std::size_t i = 0; i < order.size() && i < 8; ++i) {
            Vertex v = order[i];
            std::vector<char> alive(g.order(), 1);
            alive[v] = 0;
            std::vector<std::uint32_t> comp;
            std::size_t k = components(g, alive, comp);
            if (k < 2) continue;
            std::vector<std::int64_t> cw(k, 0);
            for (Vertex u = 0; u < g.order(); ++u)
                if (alive[u]) cw[comp[u]] += nums_[u];
            std::int64_t s1 = 0, s2 = 0;
            std::vector<std::size_t> idx(k);
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end(),
                      [&](std::size_t a, std::size_t b) { return cw[a] > cw[b]; });
            std::vector<int> bin(k, 1);
            bool ok = true;
            for (std::size_t c : idx) {
                if (side_ok(s1 + cw[c])) { s1 += cw[c]; bin[c] = 0; }
                else if (side_ok(s2 + cw[c])) { s2 += cw[c]; }
                else { ok = false; break; }
            }
            if (!ok) continue;
            out.ok = true;
            out.is_cycle = false;
            out.cycle = {v};
            out.in_side_a.assign(g.order(), 0);
            for (Vertex u = 0; u < g.order(); ++u)
                if (alive[u] && bin[comp[u]] == 0) out.in_side_a[u] = 1;
            return out;
        }
        return out;
    }

    void build_bfs_tree() {
        const std::size_t n = full_.order();
        parent_.assign(n, UINT32_MAX);
        depth_.assign(n, 0);
        Vertex root = pick_root();
        std::deque<Vertex> queue{root};
        parent_[root] = root;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            // real edges first keeps the tree inside the original graph
            for (int pass = 0; pass < 2; ++pass) {
                for (Vertex v : full_.rotation(u)) {
                    bool fake = fake_.count(ekey(u, v)) != 0;
                    if ((pass == 0) == fake) continue;
                    if (parent_[v] == UINT32_MAX) {
                        parent_[v] = u;
                        depth_[v] = depth_[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
    }

    Vertex pick_root() {
        // double sweep: far vertex from 0, then the midpoint of the far path
        auto bfs_far = [&](Vertex s, std::vector<Vertex>* par) {
            std::vector<std::uint32_t> d(full_.order(), UINT32_MAX);
            if (par) par->assign(full_.order(), UINT32_MAX);
            std::deque<Vertex> q{s};
            d[s] = 0;
            Vertex far = s;
            while (!q.empty()) {
                Vertex u = q.front();
                q.pop_front();
                if (d[u] > d[far]) far = u;
                for (Vertex v : full_.rotation(u)) {
                    if (d[v] == UINT32_MAX) {
                        d[v] = d[u] + 1;
                        if (par) (*par)[v] = u;
                        q.push_back(v);
                    }
                }
            }
            return far;
        };
        Vertex a = bfs_far(0, nullptr);
        std::vector<Vertex> par;
        Vertex b = bfs_far(a, &par);
        std::vector<Vertex> path;
        for (Vertex x = b; x != a; x = par[x]) path.push_back(x);
        path.push_back(a);
        return path[path.size() / 2];
    }

    std::vector<std::pair<Vertex, Vertex>> collect_candidates() {
        std::vector<std::tuple<bool, std::uint32_t, Vertex, Vertex>> order;
        for (Vertex u = 0; u < full_.order(); ++u) {
            for (Vertex v : full_.rotation(u)) {
                if (u > v) continue;
                if (parent_[u] == v || parent_[v] == u) continue;
                bool fake = fake_.count(ekey(u, v)) != 0;
                std::uint32_t len = cycle_length(u, v);
                order.emplace_back(fake, len, u, v);
            }
        }
        std::sort(order.begin(), order.end());
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(order.size());
        for (auto& [fake, len, u, v] : order) out.emplace_back(u, v);
        return out;
    }

    Vertex lca(Vertex u, Vertex v) const {
        while (u != v) {
            if (depth_[u] >= depth_[v]) u = parent_[u];
            else v = parent_[v];
        }
        return u;
    }

    std::uint32_t cycle_length(Vertex u, Vertex v) const {
        Vertex a = lca(u, v);
        return depth_[u] + depth_[v] - 2 * depth_[a] + 1;
    }

    std::vector<Vertex> fundamental_cycle(Vertex u, Vertex v) const {
        Vertex a = lca(u, v);
        std::vector<Vertex> up, down;
        for (Vertex x = u; x != a; x = parent_[x]) up.push_back(x);
        up.push_back(a);
        for (Vertex x = v; x != a; x = parent_[x]) down.push_back(x);
        up.insert(up.end(), down.rbegin(), down.rend());
        return up;
    }

    CycleOut evaluate(Vertex u, Vertex v) {
        std::vector<Vertex> cyc = fundamental_cycle(u, v);
        const std::size_t n = full_.order();
        if (cyc.size() >= n) return {};
        if (stamp_.size() != n) {
            stamp_.assign(n, 0);
            on_cycle_stamp_.assign(n, 0);
        }
        ++round_;
        for (Vertex c : cyc) on_cycle_stamp_[c] = round_;

        std::int64_t ws = 0;
        for (Vertex c : cyc) ws += nums_[c];

        // side A seeds: at each cycle vertex, the rotation arc from the
        // successor (exclusive) to the predecessor (exclusive), clockwise
        std::deque<Vertex> queue;
        std::int64_t wa = 0;
        const std::size_t len = cyc.size();
        for (std::size_t i = 0; i < len; ++i) {
            Vertex c = cyc[i];
            Vertex prev = cyc[(i + len - 1) % len];
            Vertex next = cyc[(i + 1) % len];
            const auto& rot = full_.rotation(c);
            std::size_t pn = rot.size(), pp = rot.size();
            for (std::size_t j = 0; j < rot.size(); ++j) {
                if (rot[j] == next) pn = j;
                if (rot[j] == prev) pp = j;
            }
            if (pn == rot.size() || pp == rot.size()) return {}; // not edges: skip
            for (std::size_t j = (pn + 1) % rot.size(); j != pp; j = (j + 1) % rot.size()) {
                Vertex w = rot[j];
                if (on_cycle_stamp_[w] == round_ || stamp_[w] == round_) continue;
                stamp_[w] = round_;
                wa += nums_[w];
                queue.push_back(w);
            }
        }
        while (!queue.empty()) {
            if (!side_ok(wa)) return {};
            Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : full_.rotation(x)) {
                if (on_cycle_stamp_[y] == round_ || stamp_[y] == round_) continue;
                stamp_[y] = round_;
                wa += nums_[y];
                queue.push_back(y);
            }
        }
        std::int64_t wb = total_ - ws - wa;
        if (!side_ok(wa) || !side_ok(wb)) return {};

        CycleOut out;
        out.ok = true;
        out.is_cycle = true;
        out.cycle = std::move(cyc);
        out.in_side_a.assign(n, 0);
        for (Vertex x = 0; x < n; ++x)
            if (stamp_[x] == round_ && on_cycle_stamp_[x] != round_) out.in_side_a[x] = 1;
        out.uses_fake = fake_.count(ekey(u, v)) != 0;
        for (std::size_t i = 0; i + 1 < out.cycle.size() && !out.uses_fake; ++i)
            if (fake_.count(ekey(out.cycle[i], out.cycle[i + 1]))) out.uses_fake = true;
        return out;
    }
};

} // namespace

PlanarSeparatorResult planar_separator(const TriangulatedEmbedding& temb,
                                       const WeightFn& w, WorkspaceMeter& meter,
                                       std::optional<std::size_t> component_budget) {
    const PlanarEmbedding& full = temb.full;
    const std::size_t n = full.order();
    PlanarSeparatorResult out;
    ChargeGuard counters(meter, "planar-sep-counters", 4);

    auto degrade = [&]() {
        out = PlanarSeparatorResult{};
        out.s.resize(n);
        std::iota(out.s.begin(), out.s.end(), 0);
        out.degraded = true;
        return out;
    };

    if (n == 0) return out;

    // balance is relative to the mass actually present on the graph's
    // vertices (sub-unit weightings leave the rest outside)
    std::vector<std::int64_t> nums(n);
    std::int64_t total = 0;
    for (Vertex v = 0; v < n; ++v) total += (nums[v] = w.numerator(v));
    if (total == 0) total = 1;

    auto run_connected = [&](const PlanarEmbedding& emb, const std::vector<std::int64_t>& local_nums,
                             std::int64_t local_total) {
        CycleSeparator sep(emb, local_nums, local_total);
        return sep.run();
    };

    // main cut, weighted
    {
        CycleOut res = run_connected(full, nums, total);
        if (!res.ok) return degrade();
        ChargeGuard cyc(meter, "planar-sep-cycle", static_cast<std::int64_t>(res.cycle.size()));
        out.s = res.cycle;
        if (res.is_cycle && res.cycle.size() >= 3) {
            out.cycles.push_back(res.cycle);
            for (std::size_t i = 0; i < res.cycle.size(); ++i) {
                Vertex a = res.cycle[i];
                Vertex b = res.cycle[(i + 1) % res.cycle.size()];
                out.cycle_edges.push_back({{a, b}, temb.full.has_edge(a, b)});
            }
        }
    }

    if (component_budget) {
        std::size_t budget = std::max<std::size_t>(*component_budget, 1);
        std::vector<char> in_s(n, 0);
        for (Vertex v : out.s) in_s[v] = 1;
        UndirectedGraph g = full.to_graph();
        for (int guard = 0; guard < 4096; ++guard) {
            std::size_t k = 0;
            std::vector<std::uint32_t> comp = charged_component_labels(g, in_s, meter, &k);
            std::vector<std::vector<Vertex>> members(k);
            for (Vertex v = 0; v < n; ++v)
                if (!in_s[v]) members[comp[v]].push_back(v);
            std::size_t heavy = k;
            for (std::size_t c = 0; c < k; ++c)
                if (members[c].size() > budget) { heavy = c; break; }
            if (heavy == k) break;

            PlanarEmbedding sub = full.induced(members[heavy]);
            std::vector<std::int64_t> unit(members[heavy].size(), 1);
            CycleOut res = run_connected(sub, unit, static_cast<std::int64_t>(unit.size()));
            if (!res.ok || res.cycle.empty()) return degrade();
            ChargeGuard cyc(meter, "planar-sep-cycle", static_cast<std::int64_t>(res.cycle.size()));
            std::vector<Vertex> mapped;
            mapped.reserve(res.cycle.size());
            for (Vertex local : res.cycle) mapped.push_back(members[heavy][local]);
            for (Vertex v : mapped) {
                if (!in_s[v]) {
                    in_s[v] = 1;
                    out.s.push_back(v);
                }
            }
            if (res.is_cycle && mapped.size() >= 3) {
                out.cycles.push_back(mapped);
                for (std::size_t i = 0; i < mapped.size(); ++i) {
                    Vertex a = mapped[i];
                    Vertex b = mapped[(i + 1) % mapped.size()];
                    out.cycle_edges.push_back({{a, b}, temb.full.has_edge(a, b)});
                }
            }
        }
    }

    // final side partition for reporting
    SeparatorCheck chk = verify_separator(full.to_graph(), w, out.s);
    if (!chk.accepted) return degrade();
    out.side1 = std::move(chk.cert.v1);
    out.side2 = std::move(chk.cert.v2);
    return out;
}

} // namespace sepspace
