#pragma once

// Shared test fixtures and independent oracles.  The oracles deliberately
// avoid the library's search machinery: paths are enumerated by a plain
// recursive walk, graph6 is re-encoded with separate bit twiddling, and
// cover existence is decided by a structurally different backtracking.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tutte/graph.hpp"
#include "tutte/random.hpp"

namespace testsupport {

using tutte::Graph;
using tutte::VertexSet;

// Every (a,b)-path by unoptimized recursion over neighbor lists.
inline void naive_ab_paths_rec(const Graph& g, int b, std::vector<int>& cur,
                               std::vector<bool>& used,
                               std::vector<std::vector<int>>& out) {
  int at = cur.back();
  if (at == b) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v < g.order(); ++v) {
    if (used[v] || !g.adjacent(at, v)) continue;
    used[v] = true;
    cur.push_back(v);
    naive_ab_paths_rec(g, b, cur, used, out);
    cur.pop_back();
    used[v] = false;
  }
}

inline std::vector<std::vector<int>> naive_ab_paths(const Graph& g, int a,
                                                    int b) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur{a};
  std::vector<bool> used(g.order(), false);
  used[a] = true;
  naive_ab_paths_rec(g, b, cur, used, out);
  return out;
}

// Independent graph6 encoder: builds the bit string explicitly.
inline std::string reference_graph6(const Graph& g) {
  std::string out;
  int n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  std::vector<int> bits;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row)
      bits.push_back(g.adjacent(row, col) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (int j = 0; j < 6; ++j) v = v * 2 + bits[i + j];
    out.push_back(static_cast<char>(63 + v));
  }
  return out;
}

// Cover existence decided independently: candidate cliques enumerated over
// all subsets, branching on the last uncovered edge, largest cliques first.
inline bool naive_cover_exists(const Graph& g, int rank) {
  const int n = g.order();
  std::vector<std::uint64_t> cliques;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    if (std::popcount(m) < 2) continue;
    if (g.is_clique(VertexSet(m))) cliques.push_back(m);
  }
  std::sort(cliques.begin(), cliques.end(),
            [](std::uint64_t a, std::uint64_t b) {
              int pa = std::popcount(a), pb = std::popcount(b);
              return pa != pb ? pa > pb : a < b;
            });
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v)) edges.emplace_back(u, v);
  std::vector<int> cover_count(edges.size(), 0);
  std::vector<int> load(n, 0);
  std::function<bool()> rec = [&]() -> bool {
    int ei = -1;
    for (int i = static_cast<int>(edges.size()) - 1; i >= 0; --i)
      if (!cover_count[i]) {
        ei = i;
        break;
      }
    if (ei < 0) return true;
    auto [u, v] = edges[ei];
    for (std::uint64_t k : cliques) {
      if (!((k >> u) & 1u) || !((k >> v) & 1u)) continue;
      bool fits = true;
      for (int w = 0; w < n; ++w)
        if (((k >> w) & 1u) && load[w] >= rank) fits = false;
      if (!fits) continue;
      for (int w = 0; w < n; ++w)
        if ((k >> w) & 1u) ++load[w];
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (((k >> edges[i].first) & 1u) && ((k >> edges[i].second) & 1u))
          ++cover_count[i];
      if (rec()) return true;
      for (int w = 0; w < n; ++w)
        if ((k >> w) & 1u) --load[w];
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (((k >> edges[i].first) & 1u) && ((k >> edges[i].second) & 1u))
          --cover_count[i];
    }
    return false;
  };
  return rec();
}

// Random simple graph for roundtrip properties.
inline Graph random_graph(tutte::Rng& rng, int n, int density_permille) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.below(1000) < density_permille) g.add_edge(u, v);
  return g;
}

// Wheel: hub is the last vertex, rim is a cycle on 0..rim-1.
inline Graph wheel(int rim) {
  Graph g = Graph::cycle(rim);
  Graph w(rim + 1);
  for (int u = 0; u < rim; ++u) {
    for (int v = u + 1; v < rim; ++v)
      if (g.adjacent(u, v)) w.add_edge(u, v);
    w.add_edge(u, rim);
  }
  return w;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (int u = 0; u < a.order(); ++u)
    for (int v = u + 1; v < a.order(); ++v)
      if (a.adjacent(u, v)) g.add_edge(u, v);
  for (int u = 0; u < b.order(); ++u)
    for (int v = u + 1; v < b.order(); ++v)
      if (b.adjacent(u, v)) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

}  // namespace testsupport
