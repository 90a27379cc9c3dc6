#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hgm/errors.hpp"

namespace hgm {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

// Immutable d-uniform hypergraph. Vertices are dense indices 0..n-1; each
// edge is stored as d ascending vertex indices in one flat array.
class Hypergraph {
public:
    Hypergraph() = default;

    // Validates and canonicalizes raw edges (sorts each edge ascending).
    // Throws WrongCardinality, VertexOutOfRange, DuplicateEdge.
    static Hypergraph build(std::size_t n, std::size_t d,
                            const std::vector<std::vector<Vertex>>& raw_edges,
                            bool multigraph = false);

    // Trusted constructor for generators: edges must already be canonical.
    static Hypergraph from_canonical(std::size_t n, std::size_t d,
                                     std::vector<Vertex> flat_edges,
                                     bool multigraph = false);

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return flat_.size() / (d_ ? d_ : 1); }
    std::size_t cardinality() const { return d_; }
    bool is_multigraph() const { return multigraph_; }

    std::span<const Vertex> edge(EdgeId e) const {
        return {flat_.data() + static_cast<std::size_t>(e) * d_, d_};
    }

    const std::vector<Vertex>& flat_edges() const { return flat_; }

    // Per-vertex degree counts over the full edge set.
    std::vector<std::size_t> degrees() const;

    // Per-vertex incident edge lists.
    std::vector<std::vector<EdgeId>> incidence() const;

    bool operator==(const Hypergraph& other) const {
        return n_ == other.n_ && d_ == other.d_ && flat_ == other.flat_;
    }

private:
    Hypergraph(std::size_t n, std::size_t d, std::vector<Vertex> flat, bool multigraph)
        : n_(n), d_(d), flat_(std::move(flat)), multigraph_(multigraph) {}

    std::size_t n_ = 0;
    std::size_t d_ = 2;
    std::vector<Vertex> flat_;
    bool multigraph_ = false;
};

// Degrees restricted to a subset of edges of g.
std::vector<std::size_t> degree_profile(const Hypergraph& g, std::span<const EdgeId> edges);

}  // namespace hgm
