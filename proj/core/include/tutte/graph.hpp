#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tutte/errors.hpp"

namespace tutte {

inline constexpr int kMaxVertices = 64;

// Subset of the vertex range 0..63 as a bitmask.
struct VertexSet {
  std::uint64_t bits = 0;

  VertexSet() = default;
  explicit VertexSet(std::uint64_t b) : bits(b) {}

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  bool contains(int v) const { return (bits >> v) & 1u; }
  void add(int v) { bits |= std::uint64_t{1} << v; }
  void remove(int v) { bits &= ~(std::uint64_t{1} << v); }
  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool is_subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t m = bits; m;) {
      out.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    return out;
  }

  friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
};

template <class F>
inline void for_each_vertex(std::uint64_t mask, F&& f) {
  while (mask) {
    f(std::countr_zero(mask));
    mask &= mask - 1;
  }
}

// Simple undirected graph on vertices 0..n-1, n <= 64.  Adjacency is one
// bitmask row per vertex; the relation is kept symmetric and irreflexive.
// Values are immutable in spirit: operations build new graphs.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw InputError("vertex count out of range: " + std::to_string(n));
  }

  int order() const { return n_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1u;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("loops are not allowed");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
  }

  // Neighbor row as a raw bitmask.
  std::uint64_t neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  std::uint64_t closed_neighbors(int v) const {
    return neighbors(v) | (std::uint64_t{1} << v);
  }

  int degree(int v) const { return std::popcount(neighbors(v)); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
  }

  std::uint64_t vertex_mask() const {
    return n_ == kMaxVertices ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << n_) - 1;
  }

  bool is_complete() const {
    for (int v = 0; v < n_; ++v)
      if (adj_[v] != (vertex_mask() & ~(std::uint64_t{1} << v))) return false;
    return true;
  }

  // Is the given vertex set pairwise adjacent?
  bool is_clique(VertexSet s) const {
    check_set(s);
    std::uint64_t rest = s.bits;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if ((rest & ~adj_[v]) != 0) return false;
    }
    return true;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw InputError("vertex out of range: " + std::to_string(v));
  }

  void check_set(VertexSet s) const {
    if ((s.bits & ~vertex_mask()) != 0)
      throw InputError("vertex set exceeds graph order");
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

  // Builders used throughout tests and derivations.
  static Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }

  static Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
  }

  static Graph cycle(int n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
  }

  // Star with the center at vertex 0.
  static Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
  }

  // Square of the n-cycle: vertices at cycle distance <= 2 are adjacent.
  static Graph cycle_square(int n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) {
      g.add_edge(v, (v + 1) % n);
      g.add_edge(v, (v + 2) % n);
    }
    return g;
  }

 private:
  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

// N(x), or N[x] when closed is set.
VertexSet neighborhood(const Graph& g, int x, bool closed = false);

struct InducedSubgraph {
  Graph graph;
  // original[i] = label in the host graph of the i-th vertex here.
  std::vector<int> original;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

Graph local_completion(const Graph& g, int x);

// Connected components, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
// Components of the subgraph induced by `within`.
std::vector<VertexSet> components_within(const Graph& g, VertexSet within);

bool is_connected(const Graph& g);

nlohmann::json to_json(const VertexSet& s);

}  // namespace tutte
