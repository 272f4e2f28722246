#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "spread/graph.hpp"

namespace spread::testutil {

// Every connected graph on n labeled vertices, one representative per
// isomorphism class (canonical form: minimal edge mask over all vertex
// permutations). Practical for n <= 6.
inline std::vector<Graph> connected_graphs_up_to_iso(int n) {
  std::vector<std::pair<int, int>> all_pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);

  std::vector<int> perm(n);
  std::vector<unsigned> seen_keys;
  std::vector<Graph> out;

  for (unsigned mask = 0; mask < (1u << all_pairs.size()); ++mask) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < all_pairs.size(); ++i)
      if (mask >> i & 1) {
        auto [u, v] = all_pairs[i];
        adj[u][v] = adj[v][u] = 1;
        edges.push_back(all_pairs[i]);
      }

    Graph g = build_graph(n, edges);
    std::vector<char> vis(n, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v))
        if (!vis[u]) {
          vis[u] = 1;
          ++count;
          stack.push_back(u);
        }
    }
    if (count != n) continue;

    unsigned best = ~0u;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      unsigned key = 0;
      for (size_t i = 0; i < all_pairs.size(); ++i) {
        auto [u, v] = all_pairs[i];
        if (adj[perm[u]][perm[v]]) key |= 1u << i;
      }
      best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (std::find(seen_keys.begin(), seen_keys.end(), best) == seen_keys.end()) {
      seen_keys.push_back(best);
      out.push_back(std::move(g));
    }
  }
  return out;
}

// Advances t through all maps with 1 <= t(v) <= d(v); returns false
// after the last one.
inline bool next_threshold_map(const Graph& g, std::vector<int>& t) {
  int v = 0;
  while (v < g.n && t[v] == g.degree(v)) t[v++] = 1;
  if (v == g.n) return false;
  ++t[v];
  return true;
}

}  // namespace spread::testutil
