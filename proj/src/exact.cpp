#include "hgm/exact.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "hgm/rng.hpp"

namespace hgm {

namespace {

constexpr std::size_t kIncumbentRestarts = 32;
constexpr std::size_t kIncumbentLocalSearch = 20000;

// Branch and bound over edge choices. A vertex is active while it is
// uncovered and not yet branched away; an edge is usable while all its
// vertices are active. The bound counts only active vertices that still lie
// on a usable edge, so covering a cluster removes its stranded neighbors
// from the bound too.
struct Search {
    const Hypergraph& g;
    std::size_t d;
    std::vector<std::vector<EdgeId>> inc;
    std::vector<char> active;          // per vertex
    std::vector<std::uint32_t> blocked;  // per edge: # inactive vertices
    std::vector<std::uint32_t> usable_deg;  // per vertex: # incident usable edges
    std::size_t usable_count = 0;      // active vertices with usable_deg > 0
    std::vector<EdgeId> current;
    std::vector<EdgeId> best;
    std::uint64_t budget;
    std::uint64_t expanded = 0;
    std::vector<std::uint32_t> stamp;
    std::uint32_t stamp_gen = 0;
    std::vector<Vertex> queue;

    Search(const Hypergraph& graph, std::uint64_t budget)
        : g(graph),
          d(graph.cardinality()),
          inc(graph.incidence()),
          active(graph.num_vertices(), 1),
          blocked(graph.num_edges(), 0),
          usable_deg(graph.num_vertices(), 0),
          budget(budget),
          stamp(graph.num_vertices(), 0) {
        queue.reserve(graph.num_vertices());
        for (std::size_t v = 0; v < g.num_vertices(); ++v) {
            usable_deg[v] = static_cast<std::uint32_t>(inc[v].size());
            if (usable_deg[v] > 0) ++usable_count;
        }
    }

    void deactivate(Vertex v) {
        if (usable_deg[v] > 0) --usable_count;
        active[v] = 0;
        for (EdgeId e : inc[v]) {
            if (++blocked[e] != 1) continue;
            for (Vertex u : g.edge(e))
                if (--usable_deg[u] == 0 && active[u]) --usable_count;
        }
    }

    void reactivate(Vertex v) {
        for (auto it = inc[v].rbegin(); it != inc[v].rend(); ++it) {
            const EdgeId e = *it;
            if (--blocked[e] != 0) continue;
            for (Vertex u : g.edge(e))
                if (usable_deg[u]++ == 0 && active[u]) ++usable_count;
        }
        active[v] = 1;
        if (usable_deg[v] > 0) ++usable_count;
    }

    // Sum of floor(|C|/d) over connected components of the usable subgraph.
    // Tighter than usable_count/d once the graph fragments: each component
    // forfeits its size mod d.
    std::size_t component_bound() {
        ++stamp_gen;
        std::size_t bound = 0;
        for (std::size_t root = 0; root < g.num_vertices(); ++root) {
            if (!active[root] || usable_deg[root] == 0 || stamp[root] == stamp_gen) continue;
            queue.clear();
            queue.push_back(static_cast<Vertex>(root));
            stamp[root] = stamp_gen;
            std::size_t size = 0;
            while (!queue.empty()) {
                const Vertex v = queue.back();
                queue.pop_back();
                ++size;
                for (EdgeId e : inc[v]) {
                    if (blocked[e] != 0) continue;
                    for (Vertex u : g.edge(e)) {
                        if (stamp[u] != stamp_gen) {
                            stamp[u] = stamp_gen;
                            queue.push_back(u);
                        }
                    }
                }
            }
            bound += size / d;
        }
        return bound;
    }

    void dfs() {
        if (++expanded > budget) throw BudgetExceeded("exact oracle exceeded node budget");
        if (current.size() + usable_count / d <= best.size()) return;
        if (usable_count == 0) {
            if (current.size() > best.size()) best = current;
            return;
        }
        if (current.size() + component_bound() <= best.size()) return;

        // Fail-first: branch on the active vertex with the fewest usable edges.
        Vertex pivot = 0;
        std::uint32_t pivot_deg = UINT32_MAX;
        for (std::size_t v = 0; v < g.num_vertices(); ++v) {
            if (active[v] && usable_deg[v] > 0 && usable_deg[v] < pivot_deg) {
                pivot = static_cast<Vertex>(v);
                pivot_deg = usable_deg[v];
                if (pivot_deg == 1) break;
            }
        }

        std::vector<EdgeId> choices;
        choices.reserve(pivot_deg);
        for (EdgeId e : inc[pivot])
            if (blocked[e] == 0) choices.push_back(e);

        for (EdgeId e : choices) {
            auto edge = g.edge(e);
            for (Vertex u : edge) deactivate(u);
            current.push_back(e);
            dfs();
            current.pop_back();
            for (auto it = edge.rbegin(); it != edge.rend(); ++it) reactivate(*it);
        }

        // No chosen edge contains the pivot.
        deactivate(pivot);
        dfs();
        reactivate(pivot);
    }
};

std::vector<EdgeId> incumbent(const Hypergraph& g) {
    std::vector<EdgeId> order(g.num_edges());
    std::iota(order.begin(), order.end(), 0);
    std::vector<EdgeId> best = greedy_maximal_matching(g, order).edges();
    auto rng = make_rng(0x6f7261636cULL);
    for (std::size_t r = 0; r < kIncumbentRestarts; ++r) {
        std::shuffle(order.begin(), order.end(), rng);
        auto candidate = greedy_maximal_matching(g, order).edges();
        if (candidate.size() > best.size()) best = std::move(candidate);
    }
    // Ruin-and-recreate: drop one or two matched edges, then greedy-extend in
    // a fresh random order. Accepting equal sizes lets the search drift across
    // plateaus, which is what usually turns a stuck greedy answer into the
    // true optimum before branch and bound even starts.
    std::vector<EdgeId> cur = best;
    std::vector<char> used(g.num_vertices(), 0);
    for (std::size_t it = 0; it < kIncumbentLocalSearch; ++it) {
        std::vector<EdgeId> trial = cur;
        std::shuffle(trial.begin(), trial.end(), rng);
        const std::size_t drop = 1 + static_cast<std::size_t>(rng() % 2);
        trial.resize(trial.size() > drop ? trial.size() - drop : 0);
        std::fill(used.begin(), used.end(), 0);
        for (EdgeId e : trial)
            for (Vertex v : g.edge(e)) used[v] = 1;
        std::shuffle(order.begin(), order.end(), rng);
        for (EdgeId e : order) {
            auto edge = g.edge(e);
            if (std::any_of(edge.begin(), edge.end(), [&](Vertex v) { return used[v]; })) continue;
            trial.push_back(e);
            for (Vertex v : edge) used[v] = 1;
        }
        if (trial.size() >= cur.size()) cur = std::move(trial);
        if (cur.size() > best.size()) best = cur;
    }
    return best;
}

}  // namespace

Matching maximum_matching_exact(const Hypergraph& g, std::uint64_t budget) {
    Search search(g, budget);
    search.best = incumbent(g);
    search.dfs();
    return Matching(std::move(search.best));
}

std::size_t mu_exact(const Hypergraph& g, std::uint64_t budget) {
    return maximum_matching_exact(g, budget).size();
}

}  // namespace hgm
