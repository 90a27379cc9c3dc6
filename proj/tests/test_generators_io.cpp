#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "hgm/errors.hpp"
#include "hgm/generators.hpp"
#include "hgm/io.hpp"
#include "hgm/rng.hpp"

using namespace hgm;

namespace {

// O(n^3) reference enumeration for d=3 geometric instances.
Hypergraph brute_force_geometric(const std::vector<Point2>& pts, double r) {
    auto close = [&](std::size_t a, std::size_t b) {
        const double dx = pts[a][0] - pts[b][0];
        const double dy = pts[a][1] - pts[b][1];
        return dx * dx + dy * dy < r * r;
    };
    std::vector<std::vector<Vertex>> edges;
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            for (std::size_t c = b + 1; c < pts.size(); ++c)
                if (close(a, b) && close(a, c) && close(b, c))
                    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b),
                                     static_cast<Vertex>(c)});
    return Hypergraph::build(pts.size(), 3, edges);
}

}  // namespace

TEST_CASE("uniform generator basics") {
    SUBCASE("forced unique triple") {
        auto g = random_uniform_hypergraph(3, 1, 3, 42);
        REQUIRE(g.num_edges() == 1);
        CHECK(g.edge(0)[0] == 0);
        CHECK(g.edge(0)[1] == 1);
        CHECK(g.edge(0)[2] == 2);
    }
    SUBCASE("edges are distinct") {
        auto g = random_uniform_hypergraph(15, 200, 3, 7);
        std::set<std::vector<Vertex>> seen;
        for (std::size_t e = 0; e < g.num_edges(); ++e) {
            auto edge = g.edge(static_cast<EdgeId>(e));
            CHECK(seen.insert({edge.begin(), edge.end()}).second);
        }
    }
    SUBCASE("m beyond C(n,d) is rejected") {
        CHECK_THROWS_AS(random_uniform_hypergraph(5, 11, 3, 1), TooManyEdges);
        CHECK_NOTHROW(random_uniform_hypergraph(5, 10, 3, 1));
    }
    SUBCASE("deterministic per seed") {
        CHECK(random_uniform_hypergraph(20, 100, 3, 5) ==
              random_uniform_hypergraph(20, 100, 3, 5));
    }
}

TEST_CASE("uniform generator degree statistics") {
    // Sum of degrees is d*m exactly; the per-vertex mean over instances
    // concentrates on m*d/n = 40.
    double total = 0;
    const int trials = 50;
    for (int t = 0; t < trials; ++t) {
        auto g = random_uniform_hypergraph(15, 200, 3, mix_seed(500, t));
        auto deg = g.degrees();
        CHECK(std::accumulate(deg.begin(), deg.end(), std::size_t{0}) == 600);
        total += static_cast<double>(deg[t % 15]);
    }
    CHECK(total / trials == doctest::Approx(40.0).epsilon(0.15));
}

TEST_CASE("geometric generator") {
    SUBCASE("three points forced into one tight cluster") {
        // seed search for a configuration with all three pairwise distances < r
        for (std::uint64_t seed = 0;; ++seed) {
            auto pts = geometric_points(3, seed);
            auto g = geometric_from_points(pts, 0.3, 3);
            auto brute = brute_force_geometric(pts, 0.3);
            REQUIRE(g == brute);
            if (g.num_edges() == 1) break;
            REQUIRE(seed < 1000);
        }
    }
    SUBCASE("grid enumeration equals brute force") {
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            std::size_t n = 20 + 15 * (seed % 5);
            auto pts = geometric_points(n, mix_seed(600, seed));
            double r = 0.08 + 0.04 * static_cast<double>(seed % 4);
            CHECK(geometric_from_points(pts, r, 3) == brute_force_geometric(pts, r));
        }
    }
    SUBCASE("edge ceiling is enforced") {
        GeometricConfig cfg{100, 0.5, 3, 1, 50};
        CHECK_THROWS_AS(random_geometric_hypergraph(cfg), EdgeExplosion);
    }
    SUBCASE("deterministic per seed") {
        GeometricConfig cfg{60, 0.2, 3, 9};
        CHECK(random_geometric_hypergraph(cfg) == random_geometric_hypergraph(cfg));
    }
}

TEST_CASE("co-citation hypergraph construction") {
    SUBCASE("empty input") {
        auto c = build_cocitation_hypergraph({});
        CHECK(c.n == 0);
        CHECK(c.edges.empty());
    }
    SUBCASE("star: articles 1..5 all cite 0") {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> cites;
        for (std::uint32_t i = 1; i <= 5; ++i) cites.push_back({i, 0});
        auto c = build_cocitation_hypergraph(cites);
        CHECK(c.n == 6);
        REQUIRE(c.edges.size() == 6);
        // centroid 0 edge joins everyone; each other centroid joins {i, 0}
        CHECK(c.edges[0] == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
        for (Vertex i = 1; i <= 5; ++i) CHECK(c.edges[i] == std::vector<Vertex>{0, i});
    }
    SUBCASE("input line order does not matter") {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> cites = {
            {4, 2}, {1, 2}, {3, 1}, {9, 4}, {2, 9}};
        auto a = build_cocitation_hypergraph(cites);
        std::reverse(cites.begin(), cites.end());
        auto b = build_cocitation_hypergraph(cites);
        CHECK(a.n == b.n);
        CHECK(a.edges == b.edges);
    }
}

TEST_CASE("make_uniform") {
    CandidateHypergraph cand;
    cand.n = 8;
    cand.edges = {{0, 1, 2}, {3, 4}, {0, 1, 2, 3}, {5, 6, 7}, {0, 1, 2}};
    SUBCASE("filter keeps exactly the d-sized candidates") {
        auto red = make_uniform(cand, 3, UniformMode::Filter);
        CHECK(red.candidates_total == 5);
        CHECK(red.candidates_kept == 3);  // two triples + duplicate
        CHECK(red.duplicates_dropped == 1);
        CHECK(red.hypergraph.num_edges() == 2);
        CHECK(red.hypergraph.num_vertices() == 8);
    }
    SUBCASE("pad promotes small candidates with fresh dummy vertices") {
        auto red = make_uniform(cand, 3, UniformMode::Pad);
        CHECK(red.candidates_kept == 4);  // the 4-set is still dropped
        CHECK(red.hypergraph.num_edges() == 3);
        CHECK(red.hypergraph.num_vertices() > 8);  // dummy vertex added for {3,4}
        CHECK(red.hypergraph.cardinality() == 3);
    }
}

TEST_CASE("edge list round trip") {
    auto g = random_uniform_hypergraph(25, 120, 3, 77);
    std::stringstream buf;
    write_edge_list(buf, g);
    auto h = read_edge_list(buf);
    CHECK(g == h);
}

TEST_CASE("edge list parse errors carry line numbers") {
    SUBCASE("declared m exceeds actual lines") {
        std::istringstream in("3 2 3\n0 1 2\n");
        try {
            read_edge_list(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);  // input ended after line 2 with one edge missing
        }
    }
    SUBCASE("bad token") {
        std::istringstream in("3 1 3\n0 x 2\n");
        CHECK_THROWS_AS(read_edge_list(in), ParseError);
    }
    SUBCASE("comments are ignored") {
        std::istringstream in("# header comment\n3 1 3\n# mid comment\n0 1 2\n");
        CHECK(read_edge_list(in).num_edges() == 1);
    }
}

TEST_CASE("citation input parsing") {
    std::istringstream in("# comment\n1 2\n3 4\n");
    auto cites = read_citations(in);
    REQUIRE(cites.size() == 2);
    CHECK(cites[0] == std::make_pair(1u, 2u));
    CHECK(cites[1] == std::make_pair(3u, 4u));
}

TEST_CASE("hedcs dump round trip") {
    auto g = random_uniform_hypergraph(20, 80, 3, 5);
    HedcsParams params{7, 4};
    std::vector<EdgeId> members{0, 3, 9};
    std::stringstream buf;
    write_hedcs_dump(buf, g, params, members);
    auto dump = read_hedcs_dump(buf);
    CHECK(dump.host == g);
    CHECK(dump.params.beta == 7);
    CHECK(dump.params.beta_minus == 4);
    CHECK(dump.members == members);
}
