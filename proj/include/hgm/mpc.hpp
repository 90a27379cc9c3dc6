#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

#include "hgm/hypergraph.hpp"

namespace hgm {

struct MpcConfig {
    std::size_t k = 1;       // machine count
    std::size_t s = 1;       // per-machine memory budget, in edges
    std::uint64_t seed = 0;  // global randomness seed
    bool parallel = false;   // run per-machine work on threads; results are identical
};

// Disjoint edge-index sets covering all edges of the host.
struct KPartition {
    std::vector<std::vector<EdgeId>> parts;
};

// Each edge independently uniform over k parts; deterministic per seed.
KPartition random_k_partition(const Hypergraph& g, std::size_t k, std::uint64_t seed);

struct MachineState {
    std::vector<EdgeId> edges;
};

struct Message {
    std::size_t to;
    std::vector<EdgeId> payload;
};

struct MachineRoundStats {
    std::size_t edges_held = 0;  // after receiving
    std::size_t sent = 0;        // edge units
    std::size_t received = 0;
    bool violation = false;
};

struct RoundRecord {
    std::size_t round = 0;
    std::vector<MachineRoundStats> machines;
    std::size_t peak_load = 0;
};

struct RoundTrace {
    std::vector<RoundRecord> rounds;
    std::size_t violations = 0;
    std::size_t attempts = 1;  // retries used by algorithms with a retry policy

    std::size_t num_rounds() const { return rounds.size(); }
    // CSV: round,machine,edges_held,bytes_sent_equiv,violation_flag
    void write_csv(std::ostream& os) const;
};

// Round-based engine: applies the local function to every machine (each with
// a seed derived from global seed, machine id and round index), routes the
// returned messages, charges received edges against s and appends a trace
// entry. A machine whose post-receive load exceeds s is recorded as a
// violation and MemoryViolation is thrown; the trace keeps the partial
// history.
class MpcEngine {
public:
    // Returns the messages the machine wants delivered next; may mutate its
    // own state freely.
    using LocalFn =
        std::function<std::vector<Message>(std::size_t machine, MachineState& state,
                                           std::uint64_t seed)>;

    explicit MpcEngine(MpcConfig config) : config_(config) {}

    void run_round(std::vector<MachineState>& machines, const LocalFn& local);

    const MpcConfig& config() const { return config_; }
    const RoundTrace& trace() const { return trace_; }
    RoundTrace take_trace() { return std::move(trace_); }

private:
    MpcConfig config_;
    RoundTrace trace_;
    std::size_t round_ = 0;
};

}  // namespace hgm
