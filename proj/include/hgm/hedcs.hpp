#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hgm/hypergraph.hpp"

namespace hgm {

// Degree-sum bounds of a hyperedge degree constrained subgraph.
struct HedcsParams {
    long long beta = 0;
    long long beta_minus = 0;

    // lambda with beta_minus = (1 - lambda) * beta.
    double lambda() const {
        return beta == 0 ? 0.0 : 1.0 - static_cast<double>(beta_minus) / static_cast<double>(beta);
    }
    bool valid() const { return beta >= beta_minus && beta_minus >= 0; }
    bool construction_gap(std::size_t d) const {
        return beta - beta_minus >= static_cast<long long>(d) - 1;
    }
};

enum class HedcsProperty { P1, P2 };

struct HedcsViolation {
    EdgeId edge;
    HedcsProperty property;
};

struct HedcsReport {
    bool pass = true;
    std::vector<HedcsViolation> violations;
};

// Subgraph certified (or to be certified) against P1/P2 on its host.
class HedcsSubgraph {
public:
    HedcsSubgraph(const Hypergraph& host, std::vector<EdgeId> members, HedcsParams params);

    const Hypergraph& host() const { return *host_; }
    const std::vector<EdgeId>& members() const { return members_; }
    const std::vector<std::size_t>& degree_profile() const { return degrees_; }
    const HedcsParams& params() const { return params_; }
    std::size_t size() const { return members_.size(); }

private:
    const Hypergraph* host_;
    std::vector<EdgeId> members_;
    std::vector<std::size_t> degrees_;
    HedcsParams params_;
};

// Checks P1 over member edges and P2 over all non-member host edges.
HedcsReport verify_hedcs(const Hypergraph& g, std::span<const EdgeId> members,
                         HedcsParams params);

// Same check restricted to a sub-universe of host edges (members must be a
// subset of the universe).
HedcsReport verify_hedcs(const Hypergraph& g, std::span<const EdgeId> members,
                         HedcsParams params, std::span<const EdgeId> universe);

struct HedcsConstructStats {
    std::uint64_t fixes = 0;
    std::uint64_t passes = 0;
};

// Invoked after each fix with the edge, the property it violated and the
// potential (scaled by d) before and after the fix.
using FixObserver =
    std::function<void(EdgeId, HedcsProperty, long long phi_before_scaled, long long phi_after_scaled)>;

// Fix procedure: start from H = G and repeatedly repair violations until a
// clean pass. Requires beta - beta_minus >= d - 1 (throws ParameterGap
// otherwise). Scan order is reshuffled per pass from order_seed.
HedcsSubgraph construct_hedcs(const Hypergraph& g, HedcsParams params, std::uint64_t order_seed,
                              HedcsConstructStats* stats = nullptr,
                              const FixObserver& observer = nullptr);

// Termination potential, scaled by d so it stays integral:
//   d * Phi = (2*beta - (d-1)) * sum_v deg(v) - d * sum_{e in H} sum_{u in e} deg(u)
long long potential_scaled(const Hypergraph& g, std::span<const EdgeId> members, long long beta);

// Upper bound on the number of fix steps: ceil((2/d) * n * beta^2) + 1.
std::uint64_t fix_step_bound(std::size_t n, std::size_t d, long long beta);

// max_v |d_A(v) - d_B(v)|; throws HostMismatch unless A and B share a host.
std::size_t degree_distribution_distance(const HedcsSubgraph& a, const HedcsSubgraph& b);

// Independent Bernoulli(p) over ids 0..count-1; deterministic per seed.
std::vector<EdgeId> sample_edge_ids(std::size_t count, double p, std::uint64_t seed);

// Keeps each member edge independently with probability p.
std::vector<EdgeId> sample_edges(const HedcsSubgraph& h, double p, std::uint64_t seed);

}  // namespace hgm
