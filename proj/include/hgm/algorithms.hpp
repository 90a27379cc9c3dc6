#pragma once

#include <optional>

#include "hgm/hedcs.hpp"
#include "hgm/matching.hpp"
#include "hgm/mpc.hpp"

namespace hgm {

enum class PartMatcher {
    GreedyMaximal,  // default choice in the benchmark harness
    Exact,          // exact oracle on parts small enough for it
};

// Measured degree-sum envelope of the multigraph union C of per-machine
// HEDCSs, archived for re-verification.
struct HedcsUnionStats {
    std::vector<EdgeId> members;           // host edge ids of C
    HedcsParams machine_params;            // (beta, beta_minus) used per machine
    long long max_member_degree_sum = 0;   // measured beta_C
    long long min_nonmember_degree_sum = -1;  // measured beta_C^-; -1 when C = G
};

struct AlgoResult {
    Matching matching;
    RoundTrace trace;
    std::size_t iterations = 0;  // sampling iterations (iterated sampling only)
    std::size_t k_used = 1;
    std::optional<HedcsUnionStats> hedcs;
};

// Random k-partition, one matching per machine, sequential merge in machine
// order on machine 0. Exactly 3 rounds. s = 0 defaults to 2m/k.
AlgoResult greedy_coreset(const Hypergraph& g, std::size_t k, PartMatcher matcher,
                          std::uint64_t seed, std::size_t s = 0);

// Repeated sampling rounds: sample the residual with p = s/(5|S|d), match the
// sample centrally, recompute the residual induced on unmatched vertices,
// stop when it fits in s and solve it exactly greedily. An attempt whose
// sample overflows s is retried with a fresh derived seed.
// Each sampling iteration is charged 2 MPC rounds (sample + residual
// rebuild), plus 1 round for the final solve.
AlgoResult iterated_sampling(const Hypergraph& g, std::size_t s, std::uint64_t seed,
                             std::size_t max_attempts = 5);

// Per-machine HEDCS construction on a random k-partition, multigraph union on
// machine 0, greedy maximal matching on the union. Exactly 3 rounds.
// k_override = 0 computes k = max(1, round(m / (s * ln n))).
AlgoResult hedcs_matching(const Hypergraph& g, std::size_t s, HedcsParams params,
                          std::uint64_t seed, std::size_t k_override = 0);

}  // namespace hgm
