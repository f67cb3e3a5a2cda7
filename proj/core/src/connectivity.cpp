#include "tutte/connectivity.hpp"

#include <algorithm>

namespace tutte {

namespace {

bool connected_mask(const Graph& g, std::uint64_t mask) {
  if (mask == 0) return true;
  std::uint64_t comp = std::uint64_t{1} << std::countr_zero(mask);
  for (;;) {
    std::uint64_t grown = comp;
    for_each_vertex(comp, [&](int v) { grown |= g.neighbors(v) & mask; });
    if (grown == comp) break;
    comp = grown;
  }
  return comp == mask;
}

// Enumerate k-subsets of the listed vertices in lexicographic order.
template <class F>
void for_each_subset(const std::vector<int>& verts, int k, F&& f) {
  const int n = static_cast<int>(verts.size());
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::uint64_t mask = 0;
    for (int i : idx) mask |= std::uint64_t{1} << verts[i];
    f(mask);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

bool is_complete_within(const Graph& g, VertexSet within) {
  g.check_set(within);
  bool ok = true;
  for_each_vertex(within.bits, [&](int v) {
    if ((within.bits & ~g.closed_neighbors(v)) != 0) ok = false;
  });
  return ok;
}

int vertex_connectivity_within(const Graph& g, VertexSet within) {
  g.check_set(within);
  const int n = VertexSet(within).size();
  if (n <= 1) return 0;
  if (is_complete_within(g, within)) return n - 1;
  if (!connected_mask(g, within.bits)) return 0;
  std::vector<int> verts = within.to_vector();
  for (int k = 1; k <= n - 2; ++k) {
    bool found = false;
    for_each_subset(verts, k, [&](std::uint64_t cut) {
      if (!found && !connected_mask(g, within.bits & ~cut)) found = true;
    });
    if (found) return k;
  }
  return n - 1;  // unreachable for non-complete graphs
}

int vertex_connectivity(const Graph& g) {
  return vertex_connectivity_within(g, VertexSet(g.vertex_mask()));
}

bool is_k_connected_within(const Graph& g, VertexSet within, int k) {
  return vertex_connectivity_within(g, within) >= k;
}

bool is_k_connected(const Graph& g, int k) {
  return vertex_connectivity(g) >= k;
}

std::vector<VertexSet> minimum_vertex_cuts(const Graph& g, int size) {
  if (g.is_complete())
    throw InputError("complete graph has no vertex cut");
  if (!is_connected(g)) throw InputError("input graph must be connected");
  std::vector<int> verts(g.order());
  for (int v = 0; v < g.order(); ++v) verts[v] = v;
  std::vector<VertexSet> cuts;
  for_each_subset(verts, size, [&](std::uint64_t cut) {
    std::uint64_t rest = g.vertex_mask() & ~cut;
    if (std::popcount(rest) >= 2 && !connected_mask(g, rest))
      cuts.push_back(VertexSet(cut));
  });
  return cuts;
}

bool is_cut_within(const Graph& g, VertexSet within, VertexSet cut) {
  g.check_set(within);
  if (!cut.is_subset_of(within)) return false;
  std::uint64_t rest = within.bits & ~cut.bits;
  if (std::popcount(rest) < 2) return false;
  return !connected_mask(g, rest);
}

}  // namespace tutte
