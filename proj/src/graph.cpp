#include "spread/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace spread {

Graph build_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("build_graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("build_graph: edge endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
      throw std::invalid_argument("build_graph: self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n = n;
  g.m = static_cast<long long>(edges.size());
  g.offset.assign(n + 1, 0);
  for (auto [u, v] : edges) {
    ++g.offset[u + 1];
    ++g.offset[v + 1];
  }
  for (int v = 0; v < n; ++v) g.offset[v + 1] += g.offset[v];
  g.nbr.resize(2 * g.m);
  std::vector<long long> cursor(g.offset.begin(), g.offset.end() - 1);
  for (auto [u, v] : edges) {
    g.nbr[cursor[u]++] = v;
    g.nbr[cursor[v]++] = u;
  }
  // Edges were sorted by (min,max), so each row ends up sorted already;
  // sort anyway to keep the invariant independent of fill order.
  for (int v = 0; v < n; ++v)
    std::sort(g.nbr.begin() + g.offset[v], g.nbr.begin() + g.offset[v + 1]);
  g.original_id.resize(n);
  for (int v = 0; v < n; ++v) g.original_id[v] = static_cast<std::uint64_t>(v);
  return g;
}

namespace {

bool parse_u64(const std::string& tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  std::uint64_t val = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
    std::uint64_t d = static_cast<std::uint64_t>(c - '0');
    if (val > (UINT64_MAX - d) / 10) return false;
    val = val * 10 + d;
  }
  out = val;
  return true;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
  std::unordered_map<std::uint64_t, int> dense;
  std::vector<std::uint64_t> originals;
  std::vector<std::pair<int, int>> edges;

  auto remap = [&](std::uint64_t raw) {
    auto it = dense.find(raw);
    if (it != dense.end()) return it->second;
    int id = static_cast<int>(originals.size());
    dense.emplace(raw, id);
    originals.push_back(raw);
    return id;
  };

  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t i = 0;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size() || line[i] == '#') continue;

    std::istringstream ls(line);
    std::string a, b, extra;
    ls >> a >> b;
    if (b.empty())
      throw std::runtime_error("edge list line " + std::to_string(line_no) +
                               ": expected two ids");
    if (ls >> extra)
      throw std::runtime_error("edge list line " + std::to_string(line_no) +
                               ": trailing token '" + extra + "'");
    std::uint64_t ru, rv;
    if (!parse_u64(a, ru))
      throw std::runtime_error("edge list line " + std::to_string(line_no) +
                               ": bad id '" + a + "'");
    if (!parse_u64(b, rv))
      throw std::runtime_error("edge list line " + std::to_string(line_no) +
                               ": bad id '" + b + "'");
    if (ru == rv)
      throw std::runtime_error("edge list line " + std::to_string(line_no) +
                               ": self-loop on id " + a);
    int du = remap(ru);  // first-appearance order: u before v
    int dv = remap(rv);
    edges.emplace_back(du, dv);
  }
  if (originals.empty()) throw std::runtime_error("edge list: no edges found");

  Graph g = build_graph(static_cast<int>(originals.size()), std::move(edges));
  g.original_id = std::move(originals);
  return g;
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);
  return load_edge_list(in);
}

void emit_edge_list(const Graph& g, std::ostream& out) {
  out << "# nodes " << g.n << " edges " << g.m << "\n";
  for (int v = 0; v < g.n; ++v)
    for (int u : g.neighbors(v))
      if (v < u) out << g.original_id[v] << ' ' << g.original_id[u] << '\n';
}

int degree(const Graph& g, int v) { return g.degree(v); }

std::span<const int> neighbors(const Graph& g, int v) { return g.neighbors(v); }

}  // namespace spread
