#include "ccmc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ccmc {

namespace {

Graph build_from_dense_edges(int n, std::vector<std::pair<int, int>> edges) {
    Graph g;
    g.n = n;
    g.adjacency.assign(static_cast<std::size_t>(n), {});
    for (auto& [u, v] : edges) {
        if (u == v)
            continue;
        if (u > v)
            std::swap(u, v);
        g.adjacency[static_cast<std::size_t>(u)].push_back(v);
    }
    // Dedup the half-edges, then mirror them.
    for (int u = 0; u < n; ++u) {
        auto& adj = g.adjacency[static_cast<std::size_t>(u)];
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    std::vector<std::pair<int, int>> mirrored;
    for (int u = 0; u < n; ++u)
        for (int v : g.adjacency[static_cast<std::size_t>(u)]) {
            mirrored.emplace_back(v, u);
            ++g.edge_count;
        }
    for (auto [v, u] : mirrored)
        g.adjacency[static_cast<std::size_t>(v)].push_back(u);
    for (auto& adj : g.adjacency)
        std::sort(adj.begin(), adj.end());
    g.degrees.resize(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        g.degrees[static_cast<std::size_t>(u)] =
            static_cast<int>(g.adjacency[static_cast<std::size_t>(u)].size());
    return g;
}

} // namespace

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open graph file: " + path);

    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw_edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ls(line);
        std::uint64_t a = 0, b = 0;
        if (!(ls >> a >> b)) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": malformed edge line: " + line);
        }
        std::string rest;
        if (ls >> rest) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": trailing token on edge line: " + line);
        }
        raw_edges.emplace_back(a, b);
    }
    if (in.bad())
        throw std::runtime_error("I/O error while reading " + path);
    if (raw_edges.empty())
        throw std::runtime_error("empty edge set in " + path);

    std::vector<std::uint64_t> ids;
    ids.reserve(raw_edges.size() * 2);
    for (auto [a, b] : raw_edges) {
        ids.push_back(a);
        ids.push_back(b);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    std::unordered_map<std::uint64_t, int> remap;
    remap.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
        remap.emplace(ids[i], static_cast<int>(i));

    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw_edges.size());
    for (auto [a, b] : raw_edges)
        edges.emplace_back(remap[a], remap[b]);

    Graph g = build_from_dense_edges(static_cast<int>(ids.size()), std::move(edges));
    g.original_ids = std::move(ids);
    return g;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    for (auto [u, v] : edges)
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
    Graph g = build_from_dense_edges(n, edges);
    g.original_ids.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        g.original_ids[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(i);
    return g;
}

int coverage(const Graph& graph, const BitVector& selection) {
    if (static_cast<int>(selection.size()) != graph.n)
        throw std::invalid_argument("selection length does not match vertex count");
    std::vector<std::uint8_t> covered(selection.size(), 0);
    for (int v = 0; v < graph.n; ++v) {
        if (!selection[static_cast<std::size_t>(v)])
            continue;
        covered[static_cast<std::size_t>(v)] = 1;
        for (int u : graph.adjacency[static_cast<std::size_t>(v)])
            covered[static_cast<std::size_t>(u)] = 1;
    }
    int total = 0;
    for (std::uint8_t c : covered)
        total += c;
    return total;
}

CoverageState make_coverage_state(const Graph& graph, const BitVector& selection) {
    if (static_cast<int>(selection.size()) != graph.n)
        throw std::invalid_argument("selection length does not match vertex count");
    CoverageState state;
    state.cover_count.assign(selection.size(), 0);
    for (int v = 0; v < graph.n; ++v) {
        if (!selection[static_cast<std::size_t>(v)])
            continue;
        ++state.cover_count[static_cast<std::size_t>(v)];
        for (int u : graph.adjacency[static_cast<std::size_t>(v)])
            ++state.cover_count[static_cast<std::size_t>(u)];
    }
    for (std::uint16_t c : state.cover_count)
        state.covered_total += (c > 0);
    return state;
}

void coverage_apply_flips(CoverageState& state, const Graph& graph,
                          const std::vector<Flip>& flips) {
    auto bump = [&state](int vertex, bool up) {
        auto& c = state.cover_count[static_cast<std::size_t>(vertex)];
        if (up) {
            if (c == 0)
                ++state.covered_total;
            ++c;
        } else {
            if (c == 0)
                throw std::logic_error("cover counter underflow: state inconsistent");
            --c;
            if (c == 0)
                --state.covered_total;
        }
    };
    for (const Flip& f : flips) {
        bump(f.index, f.value);
        for (int u : graph.adjacency[static_cast<std::size_t>(f.index)])
            bump(u, f.value);
    }
}

} // namespace ccmc
