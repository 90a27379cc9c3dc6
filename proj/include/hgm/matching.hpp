#pragma once

#include <span>
#include <vector>

#include "hgm/hypergraph.hpp"

namespace hgm {

// A set of pairwise vertex-disjoint edge indices into a host hypergraph.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<EdgeId> edges) : edges_(std::move(edges)) {}

    const std::vector<EdgeId>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    void add(EdgeId e) { edges_.push_back(e); }

    // True iff all indices are in range and the edges are pairwise disjoint.
    bool valid_for(const Hypergraph& g) const;

    // Vertices covered by the matching, as a bitmap of size n.
    std::vector<char> covered_vertices(const Hypergraph& g) const;

private:
    std::vector<EdgeId> edges_;
};

// Scans edges in the given order and keeps each edge whose vertices are all
// still free. Deterministic given the order; result is maximal in g.
Matching greedy_maximal_matching(const Hypergraph& g, std::span<const EdgeId> order);

// Natural input order 0..m-1.
Matching greedy_maximal_matching(const Hypergraph& g);

// True iff no edge of g is vertex-disjoint from m.
bool is_maximal(const Hypergraph& g, const Matching& m);

// Subgraph of g keeping exactly the edges all of whose vertices are
// unmatched by m. Vertex indexing is preserved.
Hypergraph induced_unmatched_subgraph(const Hypergraph& g, const Matching& m);

// Edge ids of `candidates` whose vertices are all unmatched per `covered`.
std::vector<EdgeId> filter_uncovered_edges(const Hypergraph& g,
                                           std::span<const EdgeId> candidates,
                                           const std::vector<char>& covered);

}  // namespace hgm
