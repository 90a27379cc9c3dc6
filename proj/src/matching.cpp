#include "hgm/matching.hpp"

#include <numeric>

namespace hgm {

bool Matching::valid_for(const Hypergraph& g) const {
    std::vector<char> covered(g.num_vertices(), 0);
    const std::size_t m = g.num_edges();
    for (EdgeId e : edges_) {
        if (e >= m) return false;
        for (Vertex v : g.edge(e)) {
            if (covered[v]) return false;
            covered[v] = 1;
        }
    }
    return true;
}

std::vector<char> Matching::covered_vertices(const Hypergraph& g) const {
    std::vector<char> covered(g.num_vertices(), 0);
    for (EdgeId e : edges_)
        for (Vertex v : g.edge(e)) covered[v] = 1;
    return covered;
}

Matching greedy_maximal_matching(const Hypergraph& g, std::span<const EdgeId> order) {
    std::vector<char> covered(g.num_vertices(), 0);
    Matching m;
    for (EdgeId e : order) {
        bool free = true;
        for (Vertex v : g.edge(e)) {
            if (covered[v]) {
                free = false;
                break;
            }
        }
        if (!free) continue;
        for (Vertex v : g.edge(e)) covered[v] = 1;
        m.add(e);
    }
    return m;
}

Matching greedy_maximal_matching(const Hypergraph& g) {
    std::vector<EdgeId> order(g.num_edges());
    std::iota(order.begin(), order.end(), 0);
    return greedy_maximal_matching(g, order);
}

bool is_maximal(const Hypergraph& g, const Matching& m) {
    auto covered = m.covered_vertices(g);
    const std::size_t num = g.num_edges();
    for (std::size_t e = 0; e < num; ++e) {
        bool disjoint = true;
        for (Vertex v : g.edge(static_cast<EdgeId>(e))) {
            if (covered[v]) {
                disjoint = false;
                break;
            }
        }
        if (disjoint) return false;
    }
    return true;
}

std::vector<EdgeId> filter_uncovered_edges(const Hypergraph& g,
                                           std::span<const EdgeId> candidates,
                                           const std::vector<char>& covered) {
    std::vector<EdgeId> out;
    for (EdgeId e : candidates) {
        bool free = true;
        for (Vertex v : g.edge(e)) {
            if (covered[v]) {
                free = false;
                break;
            }
        }
        if (free) out.push_back(e);
    }
    return out;
}

Hypergraph induced_unmatched_subgraph(const Hypergraph& g, const Matching& m) {
    auto covered = m.covered_vertices(g);
    const std::size_t d = g.cardinality();
    std::vector<Vertex> flat;
    const std::size_t num = g.num_edges();
    for (std::size_t e = 0; e < num; ++e) {
        auto edge = g.edge(static_cast<EdgeId>(e));
        bool free = true;
        for (Vertex v : edge) {
            if (covered[v]) {
                free = false;
                break;
            }
        }
        if (free) flat.insert(flat.end(), edge.begin(), edge.end());
    }
    return Hypergraph::from_canonical(g.num_vertices(), d, std::move(flat), g.is_multigraph());
}

}  // namespace hgm
