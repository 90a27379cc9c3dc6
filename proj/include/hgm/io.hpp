#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hgm/hedcs.hpp"
#include "hgm/hypergraph.hpp"

namespace hgm {

// Edge-list text format: header `n m d`, then m lines of d space-separated
// vertex indices. Lines starting with '#' are ignored.
Hypergraph read_edge_list(std::istream& in, bool multigraph = false);
Hypergraph read_edge_list_file(const std::string& path, bool multigraph = false);
void write_edge_list(std::ostream& out, const Hypergraph& g);
void write_edge_list_file(const std::string& path, const Hypergraph& g);

// Citation input: lines `src dst`; '#' comments ignored.
std::vector<std::pair<std::uint32_t, std::uint32_t>> read_citations(std::istream& in);
std::vector<std::pair<std::uint32_t, std::uint32_t>> read_citations_file(
    const std::string& path);

// HEDCS dump: host edge list, then one line `beta beta_minus`, then one line
// of member edge indices.
struct HedcsDump {
    Hypergraph host;
    HedcsParams params;
    std::vector<EdgeId> members;
};

void write_hedcs_dump(std::ostream& out, const Hypergraph& host, HedcsParams params,
                      std::span<const EdgeId> members);
HedcsDump read_hedcs_dump(std::istream& in);

}  // namespace hgm
