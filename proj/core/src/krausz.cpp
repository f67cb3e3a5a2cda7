#include "tutte/krausz.hpp"

#include <algorithm>

namespace tutte {

namespace {

struct EdgeList {
  std::vector<std::pair<int, int>> edges;  // (u, v) with u < v, lexicographic
  int index(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i].first == u && edges[i].second == v) return static_cast<int>(i);
    return -1;
  }
};

EdgeList collect_edges(const Graph& g) {
  EdgeList el;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) el.edges.emplace_back(u, v);
  return el;
}

// All complete vertex sets of size >= 2, ascending by bitmask.
std::vector<std::uint64_t> all_cliques(const Graph& g, Budget& budget) {
  std::vector<std::uint64_t> out;
  // grow(v..): every clique extending `cur` using vertices >= v.
  std::vector<std::pair<int, std::uint64_t>> stack;  // (next vertex, current set)
  stack.emplace_back(0, 0);
  while (!stack.empty()) {
    auto [start, cur] = stack.back();
    stack.pop_back();
    for (int v = start; v < g.order(); ++v) {
      if ((cur & ~g.neighbors(v)) != 0) continue;
      std::uint64_t ext = cur | (std::uint64_t{1} << v);
      budget.charge();
      if (std::popcount(ext) >= 2) out.push_back(ext);
      stack.emplace_back(v + 1, ext);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct CoverSearch {
  const Graph& g;
  int rank;
  Budget& budget;
  EdgeList el;
  std::vector<std::uint64_t> cliques;
  // candidate cliques per edge index, in ascending mask order
  std::vector<std::vector<int>> per_edge;
  std::vector<int> covered_by;  // edge -> how many chosen cliques contain it
  std::vector<int> load;        // vertex -> chosen clique count
  std::vector<int> chosen;
  bool found = false;

  CoverSearch(const Graph& graph, int r, Budget& b)
      : g(graph), rank(r), budget(b) {
    el = collect_edges(graph);
    cliques = all_cliques(graph, budget);
    per_edge.resize(el.edges.size());
    for (std::size_t ci = 0; ci < cliques.size(); ++ci) {
      std::uint64_t k = cliques[ci];
      for (std::size_t ei = 0; ei < el.edges.size(); ++ei) {
        auto [u, v] = el.edges[ei];
        if (((k >> u) & 1u) && ((k >> v) & 1u)) per_edge[ei].push_back(static_cast<int>(ci));
      }
    }
    covered_by.assign(el.edges.size(), 0);
    load.assign(graph.order(), 0);
  }

  int first_uncovered() const {
    for (std::size_t i = 0; i < covered_by.size(); ++i)
      if (covered_by[i] == 0) return static_cast<int>(i);
    return -1;
  }

  bool dead_end() const {
    // An uncovered edge with an exhausted endpoint can never be covered.
    for (std::size_t i = 0; i < covered_by.size(); ++i)
      if (covered_by[i] == 0 &&
          (load[el.edges[i].first] >= rank || load[el.edges[i].second] >= rank))
        return true;
    return false;
  }

  void apply(int ci, int delta) {
    std::uint64_t k = cliques[ci];
    for_each_vertex(k, [&](int v) { load[v] += delta; });
    for (std::size_t ei = 0; ei < el.edges.size(); ++ei) {
      auto [u, v] = el.edges[ei];
      if (((k >> u) & 1u) && ((k >> v) & 1u)) covered_by[ei] += delta;
    }
  }

  void search() {
    budget.charge();
    int ei = first_uncovered();
    if (ei < 0) {
      found = true;
      return;
    }
    if (dead_end()) return;
    for (int ci : per_edge[ei]) {
      std::uint64_t k = cliques[ci];
      bool fits = true;
      for_each_vertex(k, [&](int v) {
        if (load[v] >= rank) fits = false;
      });
      if (!fits) continue;
      chosen.push_back(ci);
      apply(ci, +1);
      search();
      if (found) return;
      apply(ci, -1);
      chosen.pop_back();
    }
  }
};

}  // namespace

bool verify_cover(const Graph& g, const CliqueSystem& ks, int rank,
                  nlohmann::json* violation) {
  auto report = [&](const std::string& kind, nlohmann::json detail) {
    if (violation) {
      (*violation)["kind"] = kind;
      (*violation)["detail"] = std::move(detail);
    }
    return false;
  };
  for (std::size_t i = 0; i < ks.cliques.size(); ++i) {
    const VertexSet& k = ks.cliques[i];
    g.check_set(k);
    if (k.empty()) return report("empty-clique", {{"index", i}});
    if (!g.is_clique(k))
      return report("not-a-clique", {{"index", i}, {"set", k.to_vector()}});
  }
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) continue;
      bool covered = false;
      for (const VertexSet& k : ks.cliques)
        if (k.contains(u) && k.contains(v)) {
          covered = true;
          break;
        }
      if (!covered) return report("edge-uncovered", {{"edge", {u, v}}});
    }
  for (int v = 0; v < g.order(); ++v) {
    int count = 0;
    for (const VertexSet& k : ks.cliques)
      if (k.contains(v)) ++count;
    if (count > rank)
      return report("vertex-overloaded", {{"vertex", v}, {"count", count}});
  }
  return true;
}

CoverSearchResult find_krausz_cover(const Graph& g, int rank, Budget& budget) {
  if (rank < 1) throw InputError("cover rank must be positive");
  CoverSearchResult res;
  try {
    CoverSearch search(g, rank, budget);
    search.search();
    if (search.found) {
      res.outcome = SearchOutcome::Found;
      for (int ci : search.chosen)
        res.system.cliques.push_back(VertexSet(search.cliques[ci]));
    } else {
      res.outcome = SearchOutcome::Absent;
    }
  } catch (const BudgetExceededError&) {
    res.outcome = SearchOutcome::Indeterminate;
  }
  return res;
}

Hypergraph hypergraph_from_cover(const Graph& g, const CliqueSystem& ks) {
  nlohmann::json violation;
  // Membership bound is irrelevant here; completeness and cliqueness are not.
  if (!verify_cover(g, ks, static_cast<int>(ks.cliques.size()) + 1, &violation))
    throw InputError("clique system does not cover the graph: " +
                     violation.dump());
  Hypergraph h;
  h.ground_size = static_cast<int>(ks.cliques.size());
  h.edges.resize(g.order());
  for (int v = 0; v < g.order(); ++v) {
    for (std::size_t i = 0; i < ks.cliques.size(); ++i)
      if (ks.cliques[i].contains(v)) h.edges[v].push_back(static_cast<int>(i));
    if (h.edges[v].empty()) h.edges[v].push_back(h.ground_size++);
  }
  return h;
}

Graph line_graph_of_hypergraph(const Hypergraph& h) {
  if (h.edges.size() > static_cast<std::size_t>(kMaxVertices))
    throw InputError("hypergraph has more than 64 edges");
  for (const auto& e : h.edges) {
    if (e.empty()) throw InputError("hypergraph edges must be nonempty");
    for (int p : e)
      if (p < 0 || p >= h.ground_size)
        throw InputError("hypergraph edge point out of range");
  }
  Graph g(static_cast<int>(h.edges.size()));
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j) {
      bool meet = false;
      for (int p : h.edges[i]) {
        if (std::find(h.edges[j].begin(), h.edges[j].end(), p) != h.edges[j].end()) {
          meet = true;
          break;
        }
      }
      if (meet) g.add_edge(i, j);
    }
  return g;
}

namespace {

void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p,
                   std::uint64_t x, std::vector<VertexSet>& out) {
  if (p == 0 && x == 0) {
    out.push_back(VertexSet(r));
    return;
  }
  std::uint64_t iter = p;
  while (iter) {
    int v = std::countr_zero(iter);
    iter &= iter - 1;
    std::uint64_t nb = g.neighbors(v);
    bron_kerbosch(g, r | (std::uint64_t{1} << v), p & nb, x & nb, out);
    p &= ~(std::uint64_t{1} << v);
    x |= std::uint64_t{1} << v;
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques_containing(const Graph& g, int v) {
  g.check_vertex(v);
  std::vector<VertexSet> out;
  bron_kerbosch(g, std::uint64_t{1} << v, g.neighbors(v), 0, out);
  return out;
}

bool is_maximal_clique_within(const Graph& g, VertexSet scope, VertexSet s) {
  if (s.empty() || !s.is_subset_of(scope) || !g.is_clique(s)) return false;
  std::uint64_t candidates = scope.bits & ~s.bits;
  bool extendable = false;
  for_each_vertex(candidates, [&](int u) {
    if ((s.bits & ~g.neighbors(u)) == 0) extendable = true;
  });
  return !extendable;
}

nlohmann::json to_json(const CliqueSystem& ks) {
  nlohmann::json out = nlohmann::json::array();
  for (const VertexSet& k : ks.cliques) out.push_back(k.to_vector());
  return out;
}

nlohmann::json to_json(const Hypergraph& h) {
  return {{"ground_size", h.ground_size}, {"edges", h.edges}};
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  Hypergraph h;
  h.ground_size = j.at("ground_size").get<int>();
  h.edges = j.at("edges").get<std::vector<std::vector<int>>>();
  return h;
}

}  // namespace tutte
