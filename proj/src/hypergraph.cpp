#include "hgm/hypergraph.hpp"

#include <algorithm>
#include <unordered_set>

namespace hgm {

namespace {

struct EdgeKeyHash {
    std::size_t operator()(const std::vector<Vertex>& e) const {
        std::size_t h = 1469598103934665603ULL;
        for (Vertex v : e) {
            h ^= v;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

}  // namespace

Hypergraph Hypergraph::build(std::size_t n, std::size_t d,
                             const std::vector<std::vector<Vertex>>& raw_edges,
                             bool multigraph) {
    if (d < 2) throw WrongCardinality("edge cardinality d must be >= 2");
    std::vector<Vertex> flat;
    flat.reserve(raw_edges.size() * d);
    std::unordered_set<std::vector<Vertex>, EdgeKeyHash> seen;
    std::vector<Vertex> canon;
    for (std::size_t i = 0; i < raw_edges.size(); ++i) {
        const auto& raw = raw_edges[i];
        if (raw.size() != d)
            throw WrongCardinality("edge " + std::to_string(i) + " has " +
                                   std::to_string(raw.size()) + " vertices, expected " +
                                   std::to_string(d));
        canon.assign(raw.begin(), raw.end());
        std::sort(canon.begin(), canon.end());
        for (std::size_t j = 0; j < d; ++j) {
            if (canon[j] >= n)
                throw VertexOutOfRange("edge " + std::to_string(i) + " references vertex " +
                                       std::to_string(canon[j]) + " >= n = " +
                                       std::to_string(n));
            if (j > 0 && canon[j] == canon[j - 1])
                throw WrongCardinality("edge " + std::to_string(i) + " repeats vertex " +
                                       std::to_string(canon[j]));
        }
        if (!multigraph && !seen.insert(canon).second)
            throw DuplicateEdge("edge " + std::to_string(i) + " duplicates an earlier edge");
        flat.insert(flat.end(), canon.begin(), canon.end());
    }
    return Hypergraph(n, d, std::move(flat), multigraph);
}

Hypergraph Hypergraph::from_canonical(std::size_t n, std::size_t d,
                                      std::vector<Vertex> flat_edges, bool multigraph) {
    return Hypergraph(n, d, std::move(flat_edges), multigraph);
}

std::vector<std::size_t> Hypergraph::degrees() const {
    std::vector<std::size_t> deg(n_, 0);
    for (Vertex v : flat_) ++deg[v];
    return deg;
}

std::vector<std::vector<EdgeId>> Hypergraph::incidence() const {
    std::vector<std::vector<EdgeId>> inc(n_);
    const std::size_t m = num_edges();
    for (std::size_t e = 0; e < m; ++e)
        for (Vertex v : edge(static_cast<EdgeId>(e))) inc[v].push_back(static_cast<EdgeId>(e));
    return inc;
}

std::vector<std::size_t> degree_profile(const Hypergraph& g, std::span<const EdgeId> edges) {
    std::vector<std::size_t> deg(g.num_vertices(), 0);
    for (EdgeId e : edges)
        for (Vertex v : g.edge(e)) ++deg[v];
    return deg;
}

}  // namespace hgm
