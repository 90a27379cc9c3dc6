#pragma once

#include <cstdint>

#include "hgm/matching.hpp"

namespace hgm {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

// Exact maximum matching by branch and bound: branch on the vertex with the
// fewest usable incident edges, either taking one of its edges or discarding
// the vertex. Nodes are pruned with |current| + floor(usable / d) and, when
// that fails, a per-component floor(|C_i| / d) bound; the incumbent comes
// from randomized greedy restarts plus a short local search. Throws
// BudgetExceeded when the node expansion budget runs out before optimality
// is certified.
Matching maximum_matching_exact(const Hypergraph& g,
                                std::uint64_t budget = kDefaultOracleBudget);

// Size-only convenience (μ(G)).
std::size_t mu_exact(const Hypergraph& g, std::uint64_t budget = kDefaultOracleBudget);

}  // namespace hgm
