#include "sepspace/meter.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

namespace sepspace {

ChargePolicy ChargePolicy::for_instance(std::size_t n, std::uint32_t word_bits) {
    ChargePolicy p;
    p.word_bits = word_bits;
    std::uint32_t bits = 1;
    while ((std::size_t(1) << bits) < std::max<std::size_t>(n, 2)) ++bits;
    p.oracle_charge = std::max<std::int64_t>(1, (bits + word_bits - 1) / word_bits);
    return p;
}

void WorkspaceMeter::charge(const std::string& label, std::int64_t words) {
    require(words >= 0, "NEGATIVE_CHARGE", "charge must be non-negative");
    current_ += words;
    peak_ = std::max(peak_, current_);
    if (keep_log_) log_.push_back({label, words, phase_});
    for (auto& [l, w] : outstanding_) {
        if (l == label) {
            w += words;
            return;
        }
    }
    outstanding_.emplace_back(label, words);
}

void WorkspaceMeter::release(const std::string& label, std::int64_t words) {
    require(words >= 0, "NEGATIVE_CHARGE", "release must be non-negative");
    for (auto& [l, w] : outstanding_) {
        if (l == label) {
            require(w >= words, "UNDERFLOW",
                    "release exceeds outstanding charge for '" + label + "'");
            w -= words;
            current_ -= words;
            if (keep_log_) log_.push_back({label, -words, phase_});
            return;
        }
    }
    raise("UNDERFLOW", "release of never-charged label '" + label + "'");
}

std::string WorkspaceMeter::dump_log_jsonl() const {
    std::ostringstream os;
    for (const auto& e : log_) {
        os << "{\"label\":\"" << e.label << "\",\"words\":" << e.words
           << ",\"phase\":\"" << e.phase << "\"}\n";
    }
    return os.str();
}

bool charged_connectivity(const UndirectedGraph& g, Vertex u, Vertex v,
                          WorkspaceMeter& meter) {
    ChargeGuard token(meter, "connectivity-oracle", meter.policy().oracle_charge);
    if (u == v) return true;
    std::vector<char> seen(g.order(), 0); // oracle scratch, unmetered
    std::deque<Vertex> queue{u};
    seen[u] = 1;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : g.neighbors(x)) {
            if (y == v) return true;
            if (!seen[y]) {
                seen[y] = 1;
                queue.push_back(y);
            }
        }
    }
    return false;
}

std::vector<std::uint32_t> charged_component_labels(const UndirectedGraph& g,
                                                    const std::vector<char>& excluded,
                                                    WorkspaceMeter& meter,
                                                    std::size_t* count) {
    ChargeGuard token(meter, "connectivity-oracle", meter.policy().oracle_charge);
    std::vector<char> alive(g.order(), 1);
    for (Vertex v = 0; v < g.order(); ++v)
        if (v < excluded.size() && excluded[v]) alive[v] = 0;
    std::vector<std::uint32_t> labels;
    std::size_t k = components(g, alive, labels);
    if (count) *count = k;
    return labels;
}

} // namespace sepspace
