#include "hgm/hedcs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "hgm/rng.hpp"

namespace hgm {

HedcsSubgraph::HedcsSubgraph(const Hypergraph& host, std::vector<EdgeId> members,
                             HedcsParams params)
    : host_(&host), members_(std::move(members)), params_(params) {
    std::sort(members_.begin(), members_.end());
    degrees_ = hgm::degree_profile(host, members_);
}

namespace {

long long degree_sum(const Hypergraph& g, EdgeId e, const std::vector<std::size_t>& deg) {
    long long s = 0;
    for (Vertex v : g.edge(e)) s += static_cast<long long>(deg[v]);
    return s;
}

}  // namespace

HedcsReport verify_hedcs(const Hypergraph& g, std::span<const EdgeId> members,
                         HedcsParams params) {
    std::vector<EdgeId> universe(g.num_edges());
    std::iota(universe.begin(), universe.end(), 0);
    return verify_hedcs(g, members, params, universe);
}

HedcsReport verify_hedcs(const Hypergraph& g, std::span<const EdgeId> members,
                         HedcsParams params, std::span<const EdgeId> universe) {
    auto deg = degree_profile(g, members);
    std::vector<char> is_member(g.num_edges(), 0);
    for (EdgeId e : members) is_member[e] = 1;
    HedcsReport report;
    for (EdgeId e : universe) {
        const long long s = degree_sum(g, e, deg);
        if (is_member[e]) {
            if (s > params.beta) report.violations.push_back({e, HedcsProperty::P1});
        } else {
            if (s < params.beta_minus) report.violations.push_back({e, HedcsProperty::P2});
        }
    }
    report.pass = report.violations.empty();
    return report;
}

long long potential_scaled(const Hypergraph& g, std::span<const EdgeId> members,
                           long long beta) {
    const long long d = static_cast<long long>(g.cardinality());
    auto deg = degree_profile(g, members);
    long long sum_deg = 0;
    for (std::size_t v = 0; v < deg.size(); ++v) sum_deg += static_cast<long long>(deg[v]);
    long long inner = 0;
    for (EdgeId e : members) inner += degree_sum(g, e, deg);
    return (2 * beta - (d - 1)) * sum_deg - d * inner;
}

std::uint64_t fix_step_bound(std::size_t n, std::size_t d, long long beta) {
    const double bound = 2.0 * static_cast<double>(n) * static_cast<double>(beta) *
                         static_cast<double>(beta) / static_cast<double>(d);
    return static_cast<std::uint64_t>(std::ceil(bound)) + 1;
}

HedcsSubgraph construct_hedcs(const Hypergraph& g, HedcsParams params, std::uint64_t order_seed,
                              HedcsConstructStats* stats, const FixObserver& observer) {
    if (!params.valid())
        throw ParameterGap("invalid HEDCS bounds: beta < beta_minus or beta_minus < 0");
    if (!params.construction_gap(g.cardinality()))
        throw ParameterGap("construction requires beta - beta_minus >= d - 1");

    const std::size_t m = g.num_edges();
    std::vector<char> member(m, 1);  // H starts equal to G
    std::vector<std::size_t> deg = g.degrees();

    std::vector<EdgeId> order(m);
    std::iota(order.begin(), order.end(), 0);

    const std::uint64_t max_fixes = fix_step_bound(g.num_vertices(), g.cardinality(), params.beta);
    HedcsConstructStats local;
    HedcsConstructStats& st = stats ? *stats : local;
    st = {};

    auto current_members = [&] {
        std::vector<EdgeId> ids;
        for (std::size_t e = 0; e < m; ++e)
            if (member[e]) ids.push_back(static_cast<EdgeId>(e));
        return ids;
    };

    bool dirty = true;
    while (dirty) {
        dirty = false;
        auto rng = make_rng(mix_seed(order_seed, st.passes));
        std::shuffle(order.begin(), order.end(), rng);
        ++st.passes;
        for (EdgeId e : order) {
            const long long s = degree_sum(g, e, deg);
            HedcsProperty violated;
            if (member[e] && s > params.beta) {
                violated = HedcsProperty::P1;
            } else if (!member[e] && s < params.beta_minus) {
                violated = HedcsProperty::P2;
            } else {
                continue;
            }
            long long phi_before = 0;
            if (observer) phi_before = potential_scaled(g, current_members(), params.beta);
            if (violated == HedcsProperty::P1) {
                member[e] = 0;
                for (Vertex v : g.edge(e)) --deg[v];
            } else {
                member[e] = 1;
                for (Vertex v : g.edge(e)) ++deg[v];
            }
            ++st.fixes;
            if (observer)
                observer(e, violated, phi_before,
                         potential_scaled(g, current_members(), params.beta));
            if (st.fixes > max_fixes)
                throw Error("HEDCS fix procedure exceeded its potential bound");
            dirty = true;
        }
    }

    return HedcsSubgraph(g, current_members(), params);
}

std::size_t degree_distribution_distance(const HedcsSubgraph& a, const HedcsSubgraph& b) {
    if (&a.host() != &b.host() || !(a.host() == b.host()))
        throw HostMismatch("degree distribution distance requires a shared host");
    const auto& da = a.degree_profile();
    const auto& db = b.degree_profile();
    std::size_t worst = 0;
    for (std::size_t v = 0; v < da.size(); ++v) {
        const std::size_t gap = da[v] > db[v] ? da[v] - db[v] : db[v] - da[v];
        worst = std::max(worst, gap);
    }
    return worst;
}

std::vector<EdgeId> sample_edge_ids(std::size_t count, double p, std::uint64_t seed) {
    std::vector<EdgeId> kept;
    if (p >= 1.0) {
        kept.resize(count);
        std::iota(kept.begin(), kept.end(), 0);
        return kept;
    }
    auto rng = make_rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (std::size_t i = 0; i < count; ++i)
        if (coin(rng) < p) kept.push_back(static_cast<EdgeId>(i));
    return kept;
}

std::vector<EdgeId> sample_edges(const HedcsSubgraph& h, double p, std::uint64_t seed) {
    const auto& members = h.members();
    std::vector<EdgeId> kept;
    if (p >= 1.0) return members;
    auto rng = make_rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (EdgeId e : members)
        if (coin(rng) < p) kept.push_back(e);
    return kept;
}

}  // namespace hgm
