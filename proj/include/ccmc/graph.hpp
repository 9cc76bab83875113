#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ccmc {

using BitVector = std::vector<std::uint8_t>;

struct Flip {
    int index;
    bool value; // new bit value
};

// Undirected graph with dense vertex indices. Immutable after construction.
struct Graph {
    int n = 0;
    std::size_t edge_count = 0;
    std::vector<std::vector<int>> adjacency; // sorted, no self-loops, no duplicates
    std::vector<int> degrees;
    std::vector<std::uint64_t> original_ids; // dense index -> id in the input file
};

// Reads a SNAP-style edge list: '#' comment lines, otherwise two
// whitespace-separated non-negative integer node ids per line. Node ids are
// remapped to 0..n-1 in ascending order of original id; duplicate edges are
// collapsed and self-loops dropped.
Graph load_graph(const std::string& path);

// Builds a graph from raw index pairs (same cleanup rules as load_graph).
Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// N(V'): number of vertices that are selected or adjacent to a selected one.
int coverage(const Graph& graph, const BitVector& selection);

// Per-vertex cover counters for incremental coverage maintenance.
struct CoverageState {
    std::vector<std::uint16_t> cover_count;
    int covered_total = 0;
};

CoverageState make_coverage_state(const Graph& graph, const BitVector& selection);

// Applies bit flips to the counters. `flips` must describe actual changes
// relative to the selection the state was built for.
void coverage_apply_flips(CoverageState& state, const Graph& graph,
                          const std::vector<Flip>& flips);

} // namespace ccmc
