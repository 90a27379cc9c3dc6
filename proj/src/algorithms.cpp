#include "hgm/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hgm/exact.hpp"
#include "hgm/rng.hpp"

namespace hgm {

namespace {

// Part sizes an exact per-machine solve is attempted on.
constexpr std::size_t kExactPartLimit = 2000;
constexpr std::size_t kMaxSamplingIterations = 200;

Hypergraph subgraph_from_ids(const Hypergraph& g, std::span<const EdgeId> ids) {
    std::vector<Vertex> flat;
    flat.reserve(ids.size() * g.cardinality());
    for (EdgeId e : ids) {
        auto edge = g.edge(e);
        flat.insert(flat.end(), edge.begin(), edge.end());
    }
    return Hypergraph::from_canonical(g.num_vertices(), g.cardinality(), std::move(flat),
                                      g.is_multigraph());
}

// Matching of the part, expressed in host edge ids.
std::vector<EdgeId> part_matching(const Hypergraph& g, const std::vector<EdgeId>& part,
                                  PartMatcher matcher) {
    if (matcher == PartMatcher::Exact && part.size() <= kExactPartLimit) {
        Hypergraph sub = subgraph_from_ids(g, part);
        Matching local = maximum_matching_exact(sub);
        std::vector<EdgeId> out;
        out.reserve(local.size());
        for (EdgeId e : local.edges()) out.push_back(part[e]);
        return out;
    }
    std::vector<char> covered(g.num_vertices(), 0);
    std::vector<EdgeId> out;
    for (EdgeId e : part) {
        bool free = true;
        for (Vertex v : g.edge(e)) {
            if (covered[v]) {
                free = false;
                break;
            }
        }
        if (!free) continue;
        for (Vertex v : g.edge(e)) covered[v] = 1;
        out.push_back(e);
    }
    return out;
}

std::size_t default_budget(const Hypergraph& g, std::size_t k) {
    return std::max<std::size_t>(1, 2 * g.num_edges() / std::max<std::size_t>(1, k));
}

}  // namespace

AlgoResult greedy_coreset(const Hypergraph& g, std::size_t k, PartMatcher matcher,
                          std::uint64_t seed, std::size_t s) {
    if (k == 0) k = 1;
    if (s == 0) s = default_budget(g, k);
    MpcEngine engine({k, s, seed});
    KPartition partition = random_k_partition(g, k, seed);

    std::vector<MachineState> machines(k);
    for (std::size_t i = 0; i < k; ++i) machines[i].edges = std::move(partition.parts[i]);

    // Round 1: distribution. Machines just hold their parts.
    engine.run_round(machines, [](std::size_t, MachineState&, std::uint64_t) {
        return std::vector<Message>{};
    });

    // Round 2: each machine reduces its part to a local matching (the
    // coreset) and ships it to machine 0.
    engine.run_round(machines, [&](std::size_t i, MachineState& state, std::uint64_t) {
        std::vector<EdgeId> coreset = part_matching(g, state.edges, matcher);
        state.edges = std::move(coreset);
        std::vector<Message> out;
        if (i != 0) {
            out.push_back({0, std::move(state.edges)});
            state.edges.clear();
        }
        return out;
    });

    // Round 3: machine 0 merges the coresets in machine order, keeping every
    // edge that stays disjoint from the accumulated matching.
    Matching merged;
    engine.run_round(machines, [&](std::size_t i, MachineState& state, std::uint64_t) {
        if (i == 0) merged = greedy_maximal_matching(g, state.edges);
        return std::vector<Message>{};
    });

    AlgoResult result;
    result.matching = std::move(merged);
    result.trace = engine.take_trace();
    result.k_used = k;
    return result;
}

AlgoResult iterated_sampling(const Hypergraph& g, std::size_t s, std::uint64_t seed,
                             std::size_t max_attempts) {
    if (s == 0) s = 1;
    const std::size_t d = g.cardinality();
    const std::size_t m = g.num_edges();

    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        const std::uint64_t attempt_seed = mix_seed(seed, 0x697361ULL, attempt);
        RoundTrace trace;
        trace.attempts = attempt + 1;
        std::vector<char> covered(g.num_vertices(), 0);
        std::vector<EdgeId> matched;
        std::vector<EdgeId> residual(m);
        std::iota(residual.begin(), residual.end(), 0);

        bool failed = false;
        std::size_t iterations = 0;
        while (true) {
            if (iterations >= kMaxSamplingIterations) {
                failed = true;
                break;
            }
            const double p =
                std::min(1.0, static_cast<double>(s) /
                                  (5.0 * static_cast<double>(residual.size()) *
                                   static_cast<double>(d)));
            auto picks = sample_edge_ids(residual.size(), p, mix_seed(attempt_seed, iterations));
            std::vector<EdgeId> sampled;
            sampled.reserve(picks.size());
            for (EdgeId idx : picks) sampled.push_back(residual[idx]);
            ++iterations;

            // Sample round: machine 0 holds the sample plus the accumulated
            // matching.
            RoundRecord sample_round;
            sample_round.round = trace.rounds.size();
            sample_round.machines.resize(1);
            sample_round.machines[0].received = sampled.size();
            sample_round.machines[0].edges_held = sampled.size() + matched.size();
            sample_round.peak_load = sample_round.machines[0].edges_held;
            if (sample_round.machines[0].edges_held > s) {
                sample_round.machines[0].violation = true;
                ++trace.violations;
                trace.rounds.push_back(std::move(sample_round));
                failed = true;  // sample overflow: retry with a fresh seed
                break;
            }
            trace.rounds.push_back(std::move(sample_round));

            for (EdgeId e : sampled) {
                bool free = true;
                for (Vertex v : g.edge(e)) {
                    if (covered[v]) {
                        free = false;
                        break;
                    }
                }
                if (!free) continue;
                for (Vertex v : g.edge(e)) covered[v] = 1;
                matched.push_back(e);
            }

            // Residual round: rebuild the subgraph induced on unmatched
            // vertices (broadcast of the unmatched-vertex list is free).
            residual = filter_uncovered_edges(g, residual, covered);
            RoundRecord residual_round;
            residual_round.round = trace.rounds.size();
            residual_round.machines.resize(1);
            residual_round.machines[0].edges_held = residual.size() + matched.size();
            residual_round.peak_load = residual_round.machines[0].edges_held;
            trace.rounds.push_back(std::move(residual_round));

            if (residual.size() + matched.size() <= s) break;
        }
        if (failed) continue;

        // Final solve on the residual graph, central machine.
        RoundRecord final_round;
        final_round.round = trace.rounds.size();
        final_round.machines.resize(1);
        final_round.machines[0].edges_held = residual.size() + matched.size();
        final_round.peak_load = final_round.machines[0].edges_held;
        trace.rounds.push_back(std::move(final_round));
        for (EdgeId e : residual) {
            bool free = true;
            for (Vertex v : g.edge(e)) {
                if (covered[v]) {
                    free = false;
                    break;
                }
            }
            if (!free) continue;
            for (Vertex v : g.edge(e)) covered[v] = 1;
            matched.push_back(e);
        }

        AlgoResult result;
        result.matching = Matching(std::move(matched));
        result.trace = std::move(trace);
        result.iterations = iterations;
        return result;
    }
    throw AttemptsExhausted("iterated sampling failed in all " + std::to_string(max_attempts) +
                            " attempts");
}

AlgoResult hedcs_matching(const Hypergraph& g, std::size_t s, HedcsParams params,
                          std::uint64_t seed, std::size_t k_override) {
    if (!params.construction_gap(g.cardinality()))
        throw ParameterGap("hedcs_matching requires beta - beta_minus >= d - 1");
    const std::size_t m = g.num_edges();
    std::size_t k = k_override;
    std::size_t engine_budget = s;
    if (k == 0) {
        const double ln_n = std::log(std::max<double>(2.0, static_cast<double>(g.num_vertices())));
        k = static_cast<std::size_t>(
            std::llround(static_cast<double>(m) / (static_cast<double>(s) * ln_n)));
        k = std::clamp<std::size_t>(k, 1, std::max<std::size_t>(1, m));
        // k = m/(s ln n) means each machine's input share is s ln n edges, so
        // a budget of s cannot hold the input. Use the standard experimental
        // cap of twice the input share instead.
        engine_budget = std::max(s, 2 * std::max<std::size_t>(1, m / k));
    }
    if (s == 0) s = engine_budget = default_budget(g, k);

    MpcEngine engine({k, engine_budget, seed});
    KPartition partition = random_k_partition(g, k, seed);
    std::vector<MachineState> machines(k);
    for (std::size_t i = 0; i < k; ++i) machines[i].edges = std::move(partition.parts[i]);

    engine.run_round(machines, [](std::size_t, MachineState&, std::uint64_t) {
        return std::vector<Message>{};
    });

    // Round 2: every machine builds an HEDCS of its part and ships the
    // certificate edges to machine 0.
    engine.run_round(machines, [&](std::size_t i, MachineState& state, std::uint64_t mseed) {
        Hypergraph part = subgraph_from_ids(g, state.edges);
        HedcsSubgraph local = construct_hedcs(part, params, mseed);
        std::vector<EdgeId> members;
        members.reserve(local.size());
        for (EdgeId e : local.members()) members.push_back(state.edges[e]);
        state.edges = std::move(members);
        std::vector<Message> out;
        if (i != 0) {
            out.push_back({0, std::move(state.edges)});
            state.edges.clear();
        }
        return out;
    });

    // Round 3: machine 0 solves the multigraph union C greedily.
    Matching merged;
    std::vector<EdgeId> union_members;
    engine.run_round(machines, [&](std::size_t i, MachineState& state, std::uint64_t) {
        if (i == 0) {
            union_members = state.edges;
            merged = greedy_maximal_matching(g, state.edges);
        }
        return std::vector<Message>{};
    });

    HedcsUnionStats stats;
    stats.machine_params = params;
    stats.members = std::move(union_members);
    auto union_deg = degree_profile(g, stats.members);
    std::vector<char> in_union(m, 0);
    for (EdgeId e : stats.members) in_union[e] = 1;
    for (std::size_t e = 0; e < m; ++e) {
        long long ds = 0;
        for (Vertex v : g.edge(static_cast<EdgeId>(e))) ds += static_cast<long long>(union_deg[v]);
        if (in_union[e]) {
            stats.max_member_degree_sum = std::max(stats.max_member_degree_sum, ds);
        } else {
            if (stats.min_nonmember_degree_sum < 0 || ds < stats.min_nonmember_degree_sum)
                stats.min_nonmember_degree_sum = ds;
        }
    }

    AlgoResult result;
    result.matching = std::move(merged);
    result.trace = engine.take_trace();
    result.k_used = k;
    result.hedcs = std::move(stats);
    return result;
}

}  // namespace hgm
