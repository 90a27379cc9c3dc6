#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "hgm/hypergraph.hpp"

namespace hgm {

// m distinct edges, each a uniform random d-subset of 0..n-1; duplicates are
// resampled. Throws TooManyEdges when m > C(n, d).
Hypergraph random_uniform_hypergraph(std::size_t n, std::size_t m, std::size_t d,
                                     std::uint64_t seed);

struct GeometricConfig {
    std::size_t n = 0;
    double r = 0.1;  // pairwise distance threshold, in (0,1)
    std::size_t d = 3;
    std::uint64_t seed = 0;
    std::size_t max_edges = 10'000'000;
};

using Point2 = std::array<double, 2>;

// n points uniform on [0,1)^2, deterministic per seed.
std::vector<Point2> geometric_points(std::size_t n, std::uint64_t seed);

// All d-sets of points with all pairwise distances < r, enumerated with a
// spatial grid of cell size r. Throws EdgeExplosion past max_edges.
Hypergraph geometric_from_points(const std::vector<Point2>& points, double r, std::size_t d,
                                 std::size_t max_edges = 10'000'000);

Hypergraph random_geometric_hypergraph(const GeometricConfig& cfg);

// Variable-cardinality candidate edges, before the d-uniform reduction.
struct CandidateHypergraph {
    std::size_t n = 0;
    std::vector<std::vector<Vertex>> edges;  // each sorted ascending, size >= 2
};

// One candidate hyperedge per article: {centroid} union its in/out citation
// neighbors; candidates with fewer than 2 vertices are dropped. Article ids
// are remapped to dense indices by sorted id, so the result is independent of
// input line order.
CandidateHypergraph build_cocitation_hypergraph(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& citations);

enum class UniformMode {
    Filter,  // keep only candidates of cardinality exactly d
    Pad,     // keep candidates of cardinality <= d, padding with fresh dummy vertices
};

struct UniformReduction {
    Hypergraph hypergraph;
    std::size_t candidates_total = 0;
    std::size_t candidates_kept = 0;  // before deduplication
    std::size_t duplicates_dropped = 0;
};

UniformReduction make_uniform(const CandidateHypergraph& candidates, std::size_t d,
                              UniformMode mode);

}  // namespace hgm
