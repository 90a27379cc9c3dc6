#include "hgm/io.hpp"

#include <fstream>
#include <sstream>

namespace hgm {

namespace {

// Next non-comment, non-blank line; returns false at EOF.
bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        return true;
    }
    return false;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return in;
}

}  // namespace

namespace {

Hypergraph read_edge_list_impl(std::istream& in, bool multigraph, bool allow_trailing,
                               std::size_t& lineno) {
    std::string line;
    if (!next_line(in, line, lineno)) throw ParseError("missing header", lineno);
    std::istringstream header(line);
    std::size_t n = 0, m = 0, d = 0;
    if (!(header >> n >> m >> d)) throw ParseError("malformed header, expected `n m d`", lineno);

    std::vector<std::vector<Vertex>> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!next_line(in, line, lineno))
            throw ParseError("expected " + std::to_string(m) + " edges, got " +
                                 std::to_string(i),
                             lineno);
        std::istringstream row(line);
        std::vector<Vertex> edge;
        Vertex v;
        while (row >> v) edge.push_back(v);
        if (edge.size() != d)
            throw ParseError("edge has " + std::to_string(edge.size()) +
                                 " vertices, expected " + std::to_string(d),
                             lineno);
        edges.push_back(std::move(edge));
    }
    if (!allow_trailing && next_line(in, line, lineno))
        throw ParseError("trailing data after " + std::to_string(m) + " edges", lineno);
    return Hypergraph::build(n, d, edges, multigraph);
}

}  // namespace

Hypergraph read_edge_list(std::istream& in, bool multigraph) {
    std::size_t lineno = 0;
    return read_edge_list_impl(in, multigraph, false, lineno);
}

Hypergraph read_edge_list_file(const std::string& path, bool multigraph) {
    auto in = open_or_throw(path);
    return read_edge_list(in, multigraph);
}

void write_edge_list(std::ostream& out, const Hypergraph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << ' ' << g.cardinality() << '\n';
    const std::size_t m = g.num_edges();
    for (std::size_t e = 0; e < m; ++e) {
        auto edge = g.edge(static_cast<EdgeId>(e));
        for (std::size_t j = 0; j < edge.size(); ++j)
            out << edge[j] << (j + 1 == edge.size() ? '\n' : ' ');
    }
}

void write_edge_list_file(const std::string& path, const Hypergraph& g) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    write_edge_list(out, g);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> read_citations(std::istream& in) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> links;
    std::string line;
    std::size_t lineno = 0;
    while (next_line(in, line, lineno)) {
        std::istringstream row(line);
        std::uint32_t src, dst;
        if (!(row >> src >> dst)) throw ParseError("expected `src dst`", lineno);
        links.emplace_back(src, dst);
    }
    return links;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> read_citations_file(
    const std::string& path) {
    auto in = open_or_throw(path);
    return read_citations(in);
}

void write_hedcs_dump(std::ostream& out, const Hypergraph& host, HedcsParams params,
                      std::span<const EdgeId> members) {
    write_edge_list(out, host);
    out << params.beta << ' ' << params.beta_minus << '\n';
    for (std::size_t i = 0; i < members.size(); ++i)
        out << members[i] << (i + 1 == members.size() ? '\n' : ' ');
    if (members.empty()) out << '\n';
}

HedcsDump read_hedcs_dump(std::istream& in) {
    HedcsDump dump;
    std::size_t lineno = 0;
    dump.host = read_edge_list_impl(in, false, true, lineno);
    std::string line;
    if (!next_line(in, line, lineno)) throw ParseError("missing `beta beta_minus` line", lineno);
    std::istringstream params(line);
    if (!(params >> dump.params.beta >> dump.params.beta_minus))
        throw ParseError("malformed `beta beta_minus` line", lineno);
    if (next_line(in, line, lineno)) {
        std::istringstream ids(line);
        EdgeId e;
        while (ids >> e) {
            if (e >= dump.host.num_edges())
                throw ParseError("member edge index out of range", lineno);
            dump.members.push_back(e);
        }
    }
    return dump;
}

}  // namespace hgm
