#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "hgm/errors.hpp"
#include "hgm/exact.hpp"
#include "hgm/generators.hpp"
#include "hgm/hypergraph.hpp"
#include "hgm/matching.hpp"
#include "hgm/rng.hpp"

using namespace hgm;

namespace {

Hypergraph make(std::size_t n, std::size_t d, std::vector<std::vector<Vertex>> edges,
                bool multigraph = false) {
    return Hypergraph::build(n, d, edges, multigraph);
}

}  // namespace

TEST_CASE("build canonicalizes edges") {
    auto g = make(3, 3, {{2, 0, 1}});
    REQUIRE(g.num_edges() == 1);
    auto e = g.edge(0);
    CHECK(e[0] == 0);
    CHECK(e[1] == 1);
    CHECK(e[2] == 2);
}

TEST_CASE("build rejects malformed edges") {
    CHECK_THROWS_AS(make(4, 3, {{0, 1, 2}, {0, 1, 2}}), DuplicateEdge);
    CHECK_THROWS_AS(make(4, 3, {{0, 1, 1}}), WrongCardinality);
    CHECK_THROWS_AS(make(4, 3, {{0, 1}}), WrongCardinality);
    CHECK_THROWS_AS(make(4, 3, {{0, 1, 4}}), VertexOutOfRange);
}

TEST_CASE("multigraph flag permits parallel edges") {
    auto g = make(4, 3, {{0, 1, 2}, {2, 1, 0}}, true);
    CHECK(g.num_edges() == 2);
    CHECK(g.is_multigraph());
}

TEST_CASE("edge order of first appearance is preserved") {
    auto g = make(6, 3, {{3, 4, 5}, {0, 1, 2}});
    CHECK(g.edge(0)[0] == 3);
    CHECK(g.edge(1)[0] == 0);
}

TEST_CASE("degree profile sums to d*m") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        auto g = random_uniform_hypergraph(20, 60, 3, seed);
        auto deg = g.degrees();
        std::size_t total = std::accumulate(deg.begin(), deg.end(), std::size_t{0});
        CHECK(total == 3 * g.num_edges());
    }
}

TEST_CASE("greedy maximal matching, hand instances") {
    SUBCASE("single edge") {
        auto g = make(3, 3, {{0, 1, 2}});
        auto m = greedy_maximal_matching(g);
        CHECK(m.size() == 1);
        CHECK(is_maximal(g, m));
    }
    SUBCASE("chain keeps first and third") {
        auto g = make(8, 3, {{0, 1, 2}, {2, 3, 4}, {5, 6, 7}});
        auto m = greedy_maximal_matching(g);
        REQUIRE(m.size() == 2);
        CHECK(m.edges()[0] == 0);
        CHECK(m.edges()[1] == 2);
        CHECK(is_maximal(g, m));
    }
    SUBCASE("star collapses to one edge, matching the optimum") {
        auto g = make(7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});
        auto m = greedy_maximal_matching(g);
        CHECK(m.size() == 1);
        CHECK(mu_exact(g) == 1);
    }
}

TEST_CASE("greedy output is maximal on random instances") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_uniform_hypergraph(25, 80, 3, mix_seed(77, seed));
        std::vector<EdgeId> order(g.num_edges());
        std::iota(order.begin(), order.end(), 0);
        auto rng = make_rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
        auto m = greedy_maximal_matching(g, order);
        CHECK(m.valid_for(g));
        CHECK(is_maximal(g, m));
    }
}

TEST_CASE("exact oracle, hand instances") {
    SUBCASE("single edge") {
        auto g = make(3, 3, {{0, 1, 2}});
        CHECK(mu_exact(g) == 1);
    }
    SUBCASE("empty edge set") {
        auto g = make(5, 3, {});
        CHECK(mu_exact(g) == 0);
    }
    SUBCASE("planted perfect cover among distractors") {
        // 3 disjoint triples on n=9 plus overlapping noise; optimum is n/d.
        auto g = make(9, 3, {{0, 1, 2},
                             {3, 4, 5},
                             {6, 7, 8},
                             {0, 3, 6},
                             {1, 4, 7},
                             {2, 5, 8},
                             {0, 4, 8},
                             {2, 4, 6}});
        auto m = maximum_matching_exact(g);
        CHECK(m.size() == 3);
        CHECK(m.valid_for(g));
    }
}

TEST_CASE("exact oracle dominates greedy under any order") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = random_uniform_hypergraph(18, 60, 3, mix_seed(31, seed));
        std::size_t mu = mu_exact(g);
        std::vector<EdgeId> order(g.num_edges());
        std::iota(order.begin(), order.end(), 0);
        for (int shuffle = 0; shuffle < 5; ++shuffle) {
            auto rng = make_rng(mix_seed(seed, shuffle));
            std::shuffle(order.begin(), order.end(), rng);
            auto m = greedy_maximal_matching(g, order);
            CHECK(m.size() <= mu);
            // d-approximation of any maximal matching
            CHECK(3 * m.size() >= mu);
        }
    }
}

TEST_CASE("exact oracle budget is enforced") {
    // budget 0 forbids any node expansion; a graph whose optimum the root
    // bound cannot certify must throw rather than return the incumbent.
    auto g = random_uniform_hypergraph(30, 300, 3, 5);
    CHECK_THROWS_AS(maximum_matching_exact(g, 0), BudgetExceeded);
}

TEST_CASE("induced unmatched subgraph") {
    auto g = make(7, 3, {{0, 1, 2}, {3, 4, 5}, {0, 3, 6}});
    SUBCASE("empty matching keeps everything") {
        auto sub = induced_unmatched_subgraph(g, Matching{});
        CHECK(sub.num_edges() == g.num_edges());
        CHECK(sub.num_vertices() == g.num_vertices());
    }
    SUBCASE("matched vertices drop incident edges") {
        Matching m({0});
        auto sub = induced_unmatched_subgraph(g, m);
        REQUIRE(sub.num_edges() == 1);
        CHECK(sub.edge(0)[0] == 3);
        CHECK(sub.edge(0)[1] == 4);
        CHECK(sub.edge(0)[2] == 5);
    }
    SUBCASE("full cover leaves no edges") {
        auto big = make(6, 3, {{0, 1, 2}, {3, 4, 5}, {0, 3, 4}});
        Matching m({0, 1});
        CHECK(induced_unmatched_subgraph(big, m).num_edges() == 0);
    }
}

TEST_CASE("induced subgraph never intersects the matching") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = random_uniform_hypergraph(20, 70, 3, mix_seed(13, seed));
        std::vector<EdgeId> order(g.num_edges());
        std::iota(order.begin(), order.end(), 0);
        auto rng = make_rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
        Matching m({order[0]});
        auto covered = m.covered_vertices(g);
        auto sub = induced_unmatched_subgraph(g, m);
        for (std::size_t e = 0; e < sub.num_edges(); ++e)
            for (Vertex v : sub.edge(static_cast<EdgeId>(e))) CHECK(!covered[v]);
    }
}

TEST_CASE("is_maximal") {
    SUBCASE("empty graph, empty matching") {
        auto g = make(3, 3, {});
        CHECK(is_maximal(g, Matching{}));
    }
    SUBCASE("extendable matching is not maximal") {
        auto g = make(6, 3, {{0, 1, 2}, {3, 4, 5}});
        CHECK(!is_maximal(g, Matching({0})));
        CHECK(is_maximal(g, Matching({0, 1})));
    }
}

TEST_CASE("matching validity checks") {
    auto g = make(6, 3, {{0, 1, 2}, {3, 4, 5}, {0, 3, 4}});
    CHECK(Matching({0, 1}).valid_for(g));
    CHECK(!Matching({1, 2}).valid_for(g));  // share vertex 3
    CHECK(!Matching({7}).valid_for(g));     // out of range
}

TEST_CASE("filter_uncovered_edges agrees with a direct scan") {
    auto g = random_uniform_hypergraph(15, 50, 3, 9);
    auto m = greedy_maximal_matching(g);
    auto covered = m.covered_vertices(g);
    std::vector<EdgeId> all(g.num_edges());
    std::iota(all.begin(), all.end(), 0);
    auto kept = filter_uncovered_edges(g, all, covered);
    std::set<EdgeId> kept_set(kept.begin(), kept.end());
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        bool free = true;
        for (Vertex v : g.edge(static_cast<EdgeId>(e)))
            if (covered[v]) free = false;
        CHECK(kept_set.count(static_cast<EdgeId>(e)) == (free ? 1u : 0u));
    }
}
