#include "hgm/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "hgm/rng.hpp"

namespace hgm {

namespace {

// C(n, d) saturating at cap.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t d, std::uint64_t cap) {
    if (d > n) return 0;
    long double acc = 1.0L;
    for (std::uint64_t i = 1; i <= d; ++i) {
        acc = acc * static_cast<long double>(n - d + i) / static_cast<long double>(i);
        if (acc > static_cast<long double>(cap)) return cap;
    }
    return static_cast<std::uint64_t>(acc);
}

struct FlatEdgeHash {
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

Hypergraph random_uniform_hypergraph(std::size_t n, std::size_t m, std::size_t d,
                                     std::uint64_t seed) {
    if (d < 2 || d > n) throw WrongCardinality("need 2 <= d <= n");
    const std::uint64_t cap = binomial_capped(n, d, UINT64_MAX >> 1);
    if (m > cap)
        throw TooManyEdges("m = " + std::to_string(m) + " exceeds C(n,d) = " +
                           std::to_string(cap));

    auto rng = make_rng(seed);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    std::unordered_set<std::vector<Vertex>, FlatEdgeHash> seen;
    std::vector<Vertex> flat;
    flat.reserve(m * d);
    std::vector<Vertex> edge;
    while (seen.size() < m) {
        edge.clear();
        while (edge.size() < d) {
            Vertex v = pick(rng);
            if (std::find(edge.begin(), edge.end(), v) == edge.end()) edge.push_back(v);
        }
        std::sort(edge.begin(), edge.end());
        if (seen.insert(edge).second) flat.insert(flat.end(), edge.begin(), edge.end());
    }
    return Hypergraph::from_canonical(n, d, std::move(flat));
}

std::vector<Point2> geometric_points(std::size_t n, std::uint64_t seed) {
    auto rng = make_rng(seed);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    std::vector<Point2> points(n);
    for (auto& p : points) {
        p[0] = coord(rng);
        p[1] = coord(rng);
    }
    return points;
}

namespace {

bool close(const Point2& a, const Point2& b, double r) {
    const double dx = a[0] - b[0];
    const double dy = a[1] - b[1];
    return dx * dx + dy * dy < r * r;
}

void extend_clique(const std::vector<std::vector<Vertex>>& adj, std::vector<Vertex>& clique,
                   const std::vector<Vertex>& candidates, std::size_t d,
                   std::vector<Vertex>& flat, std::size_t max_edges) {
    if (clique.size() == d) {
        if (flat.size() / d >= max_edges)
            throw EdgeExplosion("geometric edge count exceeded the configured ceiling");
        flat.insert(flat.end(), clique.begin(), clique.end());
        return;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Vertex v = candidates[i];
        // Candidates adjacent to v, above v, preserving sort order.
        std::vector<Vertex> next;
        const auto& av = adj[v];
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (std::binary_search(av.begin(), av.end(), candidates[j]))
                next.push_back(candidates[j]);
        clique.push_back(v);
        extend_clique(adj, clique, next, d, flat, max_edges);
        clique.pop_back();
    }
}

}  // namespace

Hypergraph geometric_from_points(const std::vector<Point2>& points, double r, std::size_t d,
                                 std::size_t max_edges) {
    if (r <= 0.0 || r >= 1.0) throw Error("geometric threshold r must be in (0,1)");
    const std::size_t n = points.size();

    // Grid buckets of cell size r: all pairs at distance < r sit in the same
    // or adjacent cells.
    const std::size_t cells = static_cast<std::size_t>(std::floor(1.0 / r)) + 1;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Vertex>> grid;
    auto cell_of = [&](const Point2& p) {
        return std::make_pair(static_cast<std::size_t>(p[0] / r),
                              static_cast<std::size_t>(p[1] / r));
    };
    for (std::size_t i = 0; i < n; ++i) grid[cell_of(points[i])].push_back(static_cast<Vertex>(i));

    std::vector<std::vector<Vertex>> adj(n);
    for (const auto& [cell, bucket] : grid) {
        for (std::size_t dx = 0; dx <= 2; ++dx) {
            for (std::size_t dy = 0; dy <= 2; ++dy) {
                if (cell.first + dx < 1 || cell.second + dy < 1) continue;
                const std::pair<std::size_t, std::size_t> other{cell.first + dx - 1,
                                                                cell.second + dy - 1};
                if (other.first >= cells || other.second >= cells) continue;
                auto it = grid.find(other);
                if (it == grid.end()) continue;
                for (Vertex a : bucket)
                    for (Vertex b : it->second)
                        if (a < b && close(points[a], points[b], r)) {
                            adj[a].push_back(b);
                            adj[b].push_back(a);
                        }
            }
        }
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    std::vector<Vertex> flat;
    std::vector<Vertex> clique;
    for (std::size_t v = 0; v < n; ++v) {
        // Start cliques at their lowest vertex; candidates are neighbors above v.
        std::vector<Vertex> candidates;
        for (Vertex u : adj[v])
            if (u > v) candidates.push_back(u);
        clique.assign(1, static_cast<Vertex>(v));
        extend_clique(adj, clique, candidates, d, flat, max_edges);
    }
    return Hypergraph::from_canonical(n, d, std::move(flat));
}

Hypergraph random_geometric_hypergraph(const GeometricConfig& cfg) {
    return geometric_from_points(geometric_points(cfg.n, cfg.seed), cfg.r, cfg.d, cfg.max_edges);
}

CandidateHypergraph build_cocitation_hypergraph(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& citations) {
    // Dense remap by sorted article id keeps the construction independent of
    // input line order.
    std::set<std::uint32_t> ids;
    for (const auto& [src, dst] : citations) {
        ids.insert(src);
        ids.insert(dst);
    }
    std::map<std::uint32_t, Vertex> index;
    Vertex next = 0;
    for (std::uint32_t id : ids) index[id] = next++;

    CandidateHypergraph out;
    out.n = ids.size();
    std::vector<std::set<Vertex>> neighbors(out.n);
    for (const auto& [src, dst] : citations) {
        const Vertex a = index[src];
        const Vertex b = index[dst];
        if (a == b) continue;
        neighbors[a].insert(b);
        neighbors[b].insert(a);
    }
    for (Vertex centroid = 0; centroid < out.n; ++centroid) {
        if (neighbors[centroid].empty()) continue;
        std::vector<Vertex> edge(neighbors[centroid].begin(), neighbors[centroid].end());
        edge.push_back(centroid);
        std::sort(edge.begin(), edge.end());
        out.edges.push_back(std::move(edge));
    }
    return out;
}

UniformReduction make_uniform(const CandidateHypergraph& candidates, std::size_t d,
                              UniformMode mode) {
    UniformReduction out;
    out.candidates_total = candidates.edges.size();
    std::size_t n = candidates.n;
    std::unordered_set<std::vector<Vertex>, FlatEdgeHash> seen;
    std::vector<Vertex> flat;
    for (const auto& edge : candidates.edges) {
        if (edge.size() > d || (mode == UniformMode::Filter && edge.size() != d)) continue;
        ++out.candidates_kept;
        std::vector<Vertex> padded = edge;
        while (padded.size() < d) padded.push_back(static_cast<Vertex>(n++));  // fresh dummies
        if (!seen.insert(padded).second) {
            ++out.duplicates_dropped;
            continue;
        }
        flat.insert(flat.end(), padded.begin(), padded.end());
    }
    out.hypergraph = Hypergraph::from_canonical(n, d, std::move(flat));
    return out;
}

}  // namespace hgm
