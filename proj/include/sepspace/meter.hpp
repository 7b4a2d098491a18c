#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sepspace/error.hpp"
#include "sepspace/graph.hpp"

namespace sepspace {

/// How charged words are counted. Log-space subroutines (undirected
/// connectivity, embedding helpers) are billed a flat token per call instead
/// of their true footprint; everything an algorithm keeps on its own worktape
/// is billed word by word. The paper leaves the unit of workspace unstated,
/// so this charging model is this project's own construction (see README).
struct ChargePolicy {
    std::uint32_t word_bits = 64;
    std::int64_t oracle_charge = 1; // words billed per charged-oracle call

    static ChargePolicy for_instance(std::size_t n, std::uint32_t word_bits = 64);
};

struct ChargeEvent {
    std::string label;
    std::int64_t words; // positive = charge, negative = release
    std::string phase;
};

/// Charged-space ledger for one pipeline run. Single-threaded by contract.
class WorkspaceMeter {
public:
    WorkspaceMeter() = default;
    explicit WorkspaceMeter(ChargePolicy policy, bool keep_log = true)
        : policy_(policy), keep_log_(keep_log) {}

    void charge(const std::string& label, std::int64_t words);
    void release(const std::string& label, std::int64_t words);

    void set_phase(std::string phase) { phase_ = std::move(phase); }
    const std::string& phase() const { return phase_; }

    std::int64_t current_words() const { return current_; }
    std::int64_t peak_words() const { return peak_; }
    const ChargePolicy& policy() const { return policy_; }
    const std::vector<ChargeEvent>& log() const { return log_; }

    /// One JSON object per line: {"label":...,"words":...,"phase":...}
    std::string dump_log_jsonl() const;

private:
    ChargePolicy policy_;
    bool keep_log_ = true;
    std::int64_t current_ = 0;
    std::int64_t peak_ = 0;
    std::string phase_ = "init";
    std::vector<ChargeEvent> log_;
    std::vector<std::pair<std::string, std::int64_t>> outstanding_;
};

/// Scope guard: charge now, release the same amount on exit.
class ChargeGuard {
public:
    ChargeGuard(WorkspaceMeter& meter, std::string label, std::int64_t words)
        : meter_(&meter), label_(std::move(label)), words_(words) {
        meter_->charge(label_, words_);
    }
    ChargeGuard(const ChargeGuard&) = delete;
    ChargeGuard& operator=(const ChargeGuard&) = delete;
    ~ChargeGuard() {
        if (meter_) meter_->release(label_, words_);
    }

    /// Adjust the held charge in place (e.g. a set that grows or shrinks).
    void grow(std::int64_t delta_words) {
        if (delta_words >= 0) meter_->charge(label_, delta_words);
        else meter_->release(label_, -delta_words);
        words_ += delta_words;
    }

private:
    WorkspaceMeter* meter_;
    std::string label_;
    std::int64_t words_;
};

/// Connectivity query billed at the policy's flat token cost. Implemented by
/// ordinary search; its internal scratch is deliberately not metered, standing
/// in for a genuinely log-space connectivity subroutine.
bool charged_connectivity(const UndirectedGraph& g, Vertex u, Vertex v,
                          WorkspaceMeter& meter);

/// Batched form of the same oracle: component labels for all vertices not in
/// `excluded`. Billed one token, like a single oracle call; the label array is
/// oracle scratch, not algorithm storage.
std::vector<std::uint32_t> charged_component_labels(const UndirectedGraph& g,
                                                    const std::vector<char>& excluded,
                                                    WorkspaceMeter& meter,
                                                    std::size_t* count = nullptr);

} // namespace sepspace
