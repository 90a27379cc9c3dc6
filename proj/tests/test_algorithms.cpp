#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "hgm/algorithms.hpp"
#include "hgm/errors.hpp"
#include "hgm/exact.hpp"
#include "hgm/generators.hpp"
#include "hgm/rng.hpp"

using namespace hgm;

TEST_CASE("greedy_coreset with k = 1 matches a single-machine greedy") {
    auto g = random_uniform_hypergraph(20, 120, 3, 1);
    auto res = greedy_coreset(g, 1, PartMatcher::GreedyMaximal, 5);
    auto direct = greedy_maximal_matching(g);
    CHECK(res.matching.edges() == direct.edges());
    CHECK(res.k_used == 1);
}

TEST_CASE("greedy_coreset output is a valid matching over 3 rounds") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = random_uniform_hypergraph(30, 300, 3, mix_seed(100, seed));
        auto res = greedy_coreset(g, 5, PartMatcher::GreedyMaximal, seed);
        CHECK(res.matching.valid_for(g));
        CHECK(res.trace.num_rounds() == 3);
        CHECK(res.trace.violations == 0);
    }
}

TEST_CASE("greedy_coreset recovers a planted perfect matching landing on one machine") {
    // 4 disjoint triples on n=12 plus noise; find a partition seed that puts
    // all four planted edges on the same machine, then the exact per-machine
    // matcher must surface the whole planted matching through the merge.
    std::vector<std::vector<Vertex>> edges = {
        {0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11},
        {0, 3, 6}, {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {3, 7, 11}};
    auto g = Hypergraph::build(12, 3, edges);
    std::uint64_t found = 0;
    bool ok = false;
    for (std::uint64_t seed = 0; seed < 4000 && !ok; ++seed) {
        auto p = random_k_partition(g, 3, seed);
        for (const auto& part : p.parts) {
            std::set<EdgeId> in(part.begin(), part.end());
            if (in.count(0) && in.count(1) && in.count(2) && in.count(3)) {
                found = seed;
                ok = true;
                break;
            }
        }
    }
    REQUIRE(ok);
    auto res = greedy_coreset(g, 3, PartMatcher::Exact, found, 20);
    CHECK(res.matching.size() == 4);  // ratio 100% of n/d
}

TEST_CASE("iterated_sampling yields a maximal matching") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = random_uniform_hypergraph(30, 300, 3, mix_seed(200, seed));
        auto res = iterated_sampling(g, 120, seed);
        CHECK(res.matching.valid_for(g));
        CHECK(is_maximal(g, res.matching));
        CHECK(res.trace.num_rounds() == 2 * res.iterations + 1);
    }
}

TEST_CASE("iterated_sampling short-circuits when G fits in memory") {
    auto g = random_uniform_hypergraph(15, 40, 3, 3);
    auto res = iterated_sampling(g, 100, 1);  // s >= m: p clamps to 1
    CHECK(res.iterations <= 2);
    CHECK(is_maximal(g, res.matching));
    CHECK(res.trace.attempts == 1);
}

TEST_CASE("iterated_sampling p-clamp keeps the whole residual") {
    // s much larger than 5*m*d forces p = 1: everything is sampled at once
    // and the first residual already fits.
    auto g = random_uniform_hypergraph(20, 50, 3, 9);
    auto res = iterated_sampling(g, 1000, 2);
    CHECK(res.iterations == 1);
    CHECK(is_maximal(g, res.matching));
}

TEST_CASE("iterated_sampling gives up after max attempts") {
    // s = 1 cannot hold matching + residual for this instance; every attempt
    // exhausts the iteration cap.
    auto g = random_uniform_hypergraph(30, 300, 3, 4);
    CHECK_THROWS_AS(iterated_sampling(g, 1, 7, 2), AttemptsExhausted);
}

TEST_CASE("hedcs_matching with k = 1 solves greedily on one HEDCS of G") {
    auto g = random_uniform_hypergraph(20, 150, 3, 8);
    auto res = hedcs_matching(g, 300, {5, 3}, 6, 1);
    REQUIRE(res.hedcs.has_value());
    CHECK(res.k_used == 1);
    // C must itself verify as an HEDCS of G with the machine parameters
    CHECK(verify_hedcs(g, res.hedcs->members, {5, 3}).pass);
    // the matching is exactly the greedy solve on C's member list
    auto direct = greedy_maximal_matching(g, res.hedcs->members);
    CHECK(res.matching.edges() == direct.edges());
}

TEST_CASE("hedcs_matching validity, rounds, and union envelope") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = random_uniform_hypergraph(30, 300, 3, mix_seed(300, seed));
        auto res = hedcs_matching(g, 120, {7, 4}, seed, 5);
        CHECK(res.matching.valid_for(g));
        CHECK(res.trace.num_rounds() == 3);
        REQUIRE(res.hedcs.has_value());
        const auto& stats = *res.hedcs;
        // all matched edges are members of C; all members are host edges
        std::set<EdgeId> members(stats.members.begin(), stats.members.end());
        for (EdgeId e : res.matching.edges()) CHECK(members.count(e));
        CHECK(stats.max_member_degree_sum <= static_cast<long long>(5 * 7));  // k * beta scale
        // measured envelope is consistent with its own recomputation
        auto deg = degree_profile(g, stats.members);
        long long max_member = 0;
        for (EdgeId e : stats.members) {
            long long ds = 0;
            for (Vertex v : g.edge(e)) ds += static_cast<long long>(deg[v]);
            max_member = std::max(max_member, ds);
        }
        CHECK(max_member == stats.max_member_degree_sum);
    }
}

TEST_CASE("hedcs_matching refuses an insufficient gap") {
    auto g = random_uniform_hypergraph(10, 30, 3, 1);
    CHECK_THROWS_AS(hedcs_matching(g, 30, {5, 4}, 1, 2), ParameterGap);
}

TEST_CASE("hedcs_matching derives k from m/(s ln n) when not overridden") {
    SUBCASE("small m clamps to one machine") {
        auto g = random_uniform_hypergraph(20, 100, 3, 12);
        auto res = hedcs_matching(g, 200, {5, 2}, 3);
        CHECK(res.k_used == 1);
    }
    SUBCASE("large m derives multiple machines") {
        auto g = random_uniform_hypergraph(100, 3200, 3, 12);
        auto res = hedcs_matching(g, 200, {5, 2}, 3);
        const double expected = 3200.0 / (200.0 * std::log(100.0));
        CHECK(res.k_used == static_cast<std::size_t>(std::llround(expected)));
        CHECK(res.matching.valid_for(g));
    }
}

TEST_CASE("matched edges always exist in the host graph") {
    auto g = random_uniform_hypergraph(30, 400, 3, 21);
    auto gr = greedy_coreset(g, 5, PartMatcher::GreedyMaximal, 1);
    auto is = iterated_sampling(g, 160, 1);
    auto he = hedcs_matching(g, 160, {7, 4}, 1, 5);
    for (const auto* res : {&gr, &is, &he})
        for (EdgeId e : res->matching.edges()) CHECK(e < g.num_edges());
}

TEST_CASE("algorithms are deterministic per seed") {
    auto g = random_uniform_hypergraph(30, 300, 3, 33);
    CHECK(greedy_coreset(g, 5, PartMatcher::GreedyMaximal, 9).matching.edges() ==
          greedy_coreset(g, 5, PartMatcher::GreedyMaximal, 9).matching.edges());
    CHECK(iterated_sampling(g, 120, 9).matching.edges() ==
          iterated_sampling(g, 120, 9).matching.edges());
    CHECK(hedcs_matching(g, 120, {7, 4}, 9, 5).matching.edges() ==
          hedcs_matching(g, 120, {7, 4}, 9, 5).matching.edges());
}
