#include "tutte/graph.hpp"

namespace tutte {

VertexSet neighborhood(const Graph& g, int x, bool closed) {
  g.check_vertex(x);
  return VertexSet(closed ? g.closed_neighbors(x) : g.neighbors(x));
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  g.check_set(s);
  InducedSubgraph out;
  out.original = s.to_vector();
  out.graph = Graph(static_cast<int>(out.original.size()));
  for (std::size_t i = 0; i < out.original.size(); ++i)
    for (std::size_t j = i + 1; j < out.original.size(); ++j)
      if (g.adjacent(out.original[i], out.original[j]))
        out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

Graph local_completion(const Graph& g, int x) {
  g.check_vertex(x);
  Graph h = g;
  std::vector<int> nbrs = VertexSet(g.neighbors(x)).to_vector();
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      h.add_edge(nbrs[i], nbrs[j]);
  return h;
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
  g.check_set(within);
  std::vector<VertexSet> out;
  std::uint64_t left = within.bits;
  while (left) {
    std::uint64_t comp = std::uint64_t{1} << std::countr_zero(left);
    // Grow by bit-parallel frontier expansion.
    for (;;) {
      std::uint64_t frontier = comp;
      std::uint64_t grown = comp;
      for_each_vertex(frontier, [&](int v) { grown |= g.neighbors(v) & within.bits; });
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(VertexSet(comp));
    left &= ~comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  return components_within(g, VertexSet(g.vertex_mask()));
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return components(g).size() == 1;
}

nlohmann::json to_json(const VertexSet& s) { return s.to_vector(); }

}  // namespace tutte
