#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace spread {

// Immutable undirected simple graph in CSR form. Vertices are dense ids
// 0..n-1; original input ids (which may be sparse) are kept in a side
// table for reporting. Adjacency lists are sorted and duplicate-free,
// and every edge appears in both endpoint lists.
struct Graph {
  int n = 0;
  long long m = 0;  // undirected edges, each counted once
  std::vector<long long> offset;        // size n+1
  std::vector<int> nbr;                 // size 2m
  std::vector<std::uint64_t> original_id;  // size n

  int degree(int v) const { return static_cast<int>(offset[v + 1] - offset[v]); }

  std::span<const int> neighbors(int v) const {
    return {nbr.data() + offset[v], nbr.data() + offset[v + 1]};
  }
};

// Builds a graph from an explicit vertex count and edge list. Duplicate
// edges (in either orientation) collapse to one; self-loops and
// out-of-range endpoints are input errors.
Graph build_graph(int n, std::vector<std::pair<int, int>> edges);

// Reads a whitespace-separated edge list ("u v" per line, '#' comments,
// LF or CRLF). Ids are arbitrary nonnegative integers and get remapped
// densely in first-appearance order; both orientations of an edge merge.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

// Writes the graph back out as an edge list over original ids.
// Isolated vertices have no incident edges and are not representable.
void emit_edge_list(const Graph& g, std::ostream& out);

int degree(const Graph& g, int v);
std::span<const int> neighbors(const Graph& g, int v);

}  // namespace spread
