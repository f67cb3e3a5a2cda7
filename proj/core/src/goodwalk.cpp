#include "tutte/goodwalk.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "tutte/canonical.hpp"
#include "tutte/graph6.hpp"
#include "tutte/recognition.hpp"

namespace tutte {

namespace {

// Adjacency pattern of a k=4 good walk on positions 0..5: consecutive
// entries plus distance-2 chords.
bool walk_orderable(const Graph& g) {
  if (g.order() != 6) return false;
  std::array<int, 6> perm{};
  std::array<bool, 6> used{};
  std::function<bool(int)> rec = [&](int d) -> bool {
    if (d == 6) return true;
    for (int v = 0; v < 6; ++v) {
      if (used[v]) continue;
      if (d >= 1 && !g.adjacent(perm[d - 1], v)) continue;
      if (d >= 2 && !g.adjacent(perm[d - 2], v)) continue;
      perm[d] = v;
      used[v] = true;
      if (rec(d + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return rec(0);
}

struct WalkSeeds {
  Graph first, second;          // the two seed graphs, fewer edges first
  std::string canon1, canon2;   // graph6 of their canonical forms
};

const WalkSeeds& seeds() {
  static const WalkSeeds s = [] {
    const ForbiddenFamily& fam = forbidden_family();
    std::vector<Graph> picked;
    for (const Graph& g : fam.graphs)
      if (g.order() == 6 && walk_orderable(g) && is_2_closed(g))
        picked.push_back(g);
    if (picked.size() != 2)
      throw InternalInconsistencyError(
          "expected exactly two walk seed graphs, found " +
              std::to_string(picked.size()),
          provenance_json(fam));
    for (const Graph& g : picked)
      if (!is_claw_free(g))
        throw InternalInconsistencyError("walk seed graph contains a claw",
                                         {{"graph6", write_graph6(g)}});
    WalkSeeds out{picked[0], picked[1], write_graph6(canonical_form(picked[0])),
                  write_graph6(canonical_form(picked[1]))};
    return out;
  }();
  return s;
}

bool induces_seed(const Graph& g, VertexSet s) {
  const WalkSeeds& w = seeds();
  Graph sub = induced_subgraph(g, s).graph;
  int m = sub.edge_count();
  if (m != w.first.edge_count() && m != w.second.edge_count()) return false;
  std::string canon = write_graph6(canonical_form(sub));
  return canon == w.canon1 || canon == w.canon2;
}

// A window is the set of six consecutive walk entries; entries must be
// distinct and induce one of the seed graphs.
bool window_ok(const Graph& g, std::span<const int> win) {
  VertexSet s;
  for (int v : win) s.add(v);
  if (s.size() != 6) return false;
  return induces_seed(g, s);
}

std::vector<int> oriented(std::vector<int> seq) {
  std::vector<int> rev(seq.rbegin(), seq.rend());
  return rev < seq ? rev : seq;
}

struct WalkCollector {
  const Graph& g;
  Budget& budget;
  std::set<std::vector<int>> out;

  bool can_extend_right(const std::vector<int>& seq, int w) const {
    const int len = static_cast<int>(seq.size());
    if (!g.adjacent(seq[len - 1], w)) return false;
    if (!g.adjacent(seq[len - 2], w)) return false;
    std::array<int, 6> win = {seq[len - 5], seq[len - 4], seq[len - 3],
                              seq[len - 2], seq[len - 1], w};
    return window_ok(g, win);
  }

  bool can_extend_left(const std::vector<int>& seq, int w) const {
    if (!g.adjacent(seq[0], w)) return false;
    if (!g.adjacent(seq[1], w)) return false;
    std::array<int, 6> win = {w, seq[0], seq[1], seq[2], seq[3], seq[4]};
    return window_ok(g, win);
  }

  void guard_length(const std::vector<int>& seq) const {
    if (static_cast<int>(seq.size()) > g.order() + 2)
      throw CounterexampleError(
          "good walk grew past every possible interior length",
          {{"graph6", write_graph6(g)}, {"walk", seq}});
  }

  // All right-maximal extensions of seq, then all left-maximal extensions
  // of each.  Left and right conditions touch disjoint ends, so the two
  // phases commute.
  void extend_right(std::vector<int> seq) {
    budget.charge();
    guard_length(seq);
    bool extended = false;
    for (int w = 0; w < g.order(); ++w)
      if (can_extend_right(seq, w)) {
        extended = true;
        std::vector<int> next = seq;
        next.push_back(w);
        extend_right(std::move(next));
      }
    if (!extended) extend_left(std::move(seq));
  }

  void extend_left(std::vector<int> seq) {
    budget.charge();
    guard_length(seq);
    bool extended = false;
    for (int w = 0; w < g.order(); ++w)
      if (can_extend_left(seq, w)) {
        extended = true;
        std::vector<int> next;
        next.reserve(seq.size() + 1);
        next.push_back(w);
        next.insert(next.end(), seq.begin(), seq.end());
        extend_left(std::move(next));
      }
    if (!extended) out.insert(oriented(seq));
  }
};

template <class F>
void for_each_subset_of_size(int n, int k, F&& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(std::span<const int>(idx));
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

std::pair<Graph, Graph> goodwalk_graphs() {
  const WalkSeeds& s = seeds();
  return {s.first, s.second};
}

std::vector<GoodWalk> find_good_walks(const Graph& g, Budget& budget) {
  if (!is_claw_free(g)) throw InputError("good walks require a claw-free graph");
  if (!is_2_closed(g)) throw InputError("good walks require a 2-closed graph");
  if (g.order() < 6) return {};
  // Every good walk in the square of a cycle extends around the cycle, so
  // such components carry no maximal walk at all.
  VertexSet wrapping;
  for (const VertexSet& comp : components(g)) {
    if (comp.size() < 6) continue;
    if (square_of_cycle_order(induced_subgraph(g, comp).graph))
      wrapping = wrapping | comp;
  }

  WalkCollector collector{g, budget, {}};
  for_each_subset_of_size(g.order(), 6, [&](std::span<const int> pick) {
    budget.charge();
    VertexSet s;
    for (int v : pick) s.add(v);
    if ((s.bits & wrapping.bits) != 0) return;
    if (!induces_seed(g, s)) return;
    // Each ordering of the copy satisfying the walk pattern is a k=4 seed.
    std::vector<int> verts = s.to_vector();
    std::array<int, 6> perm{};
    std::array<bool, 6> used{};
    std::function<void(int)> rec = [&](int d) {
      if (d == 6) {
        collector.extend_right(std::vector<int>(perm.begin(), perm.end()));
        return;
      }
      for (int i = 0; i < 6; ++i) {
        if (used[i]) continue;
        int v = verts[i];
        if (d >= 1 && !g.adjacent(perm[d - 1], v)) continue;
        if (d >= 2 && !g.adjacent(perm[d - 2], v)) continue;
        perm[d] = v;
        used[i] = true;
        rec(d + 1);
        used[i] = false;
      }
    };
    rec(0);
  });

  std::vector<GoodWalk> out;
  for (const std::vector<int>& seq : collector.out) out.push_back({seq});
  return out;
}

InteriorPathSet extract_interior_paths(const Graph& g,
                                       std::span<const GoodWalk> walks) {
  if (square_of_cycle_order(g))
    throw InputError("interior paths are undefined for squares of cycles");
  InteriorPathSet out;
  std::map<std::uint64_t, std::vector<int>> by_set;
  for (const GoodWalk& w : walks) {
    if (w.k() < 4) throw InputError("good walk too short");
    std::vector<int> interior(w.seq.begin() + 1, w.seq.end() - 1);
    VertexSet s;
    for (int v : interior) s.add(v);
    if (s.size() != static_cast<int>(interior.size()))
      throw CounterexampleError("good walk interior repeats a vertex",
                                {{"graph6", write_graph6(g)}, {"walk", w.seq}});
    if (interior.front() > interior.back())
      std::reverse(interior.begin(), interior.end());
    auto [it, fresh] = by_set.emplace(s.bits, interior);
    if (!fresh && it->second != interior)
      throw CounterexampleError(
          "two maximal good walks share interior vertices but not the path",
          {{"graph6", write_graph6(g)},
           {"path_a", it->second},
           {"path_b", interior}});
  }
  for (auto& [bits, path] : by_set) {
    for (const auto& [obits, opath] : by_set) {
      if (bits == obits) continue;
      if (bits & obits)
        throw CounterexampleError(
            "distinct maximal good walk interiors overlap",
            {{"graph6", write_graph6(g)}, {"path_a", path}, {"path_b", opath}});
    }
    out.paths.push_back(path);
  }
  std::sort(out.paths.begin(), out.paths.end());
  return out;
}

std::pair<VertexSet, VertexSet> end_cliques(const Graph& g,
                                            std::span<const int> path) {
  const int k = static_cast<int>(path.size());
  if (k < 4) throw InputError("interior path needs at least four vertices");
  auto minus = [](std::uint64_t bits, std::initializer_list<int> drop) {
    for (int v : drop) bits &= ~(std::uint64_t{1} << v);
    return VertexSet(bits);
  };
  VertexSet left = minus(g.closed_neighbors(path[0]), {path[2]});
  VertexSet left_alt = minus(g.closed_neighbors(path[1]), {path[2], path[3]});
  VertexSet right = minus(g.closed_neighbors(path[k - 1]), {path[k - 3]});
  VertexSet right_alt =
      minus(g.closed_neighbors(path[k - 2]), {path[k - 3], path[k - 4]});
  nlohmann::json ctx = {{"graph6", write_graph6(g)},
                        {"path", std::vector<int>(path.begin(), path.end())}};
  if (!(left == left_alt) || !(right == right_alt))
    throw CounterexampleError("end clique neighborhood equality failed", ctx);
  if (!g.is_clique(left) || !g.is_clique(right))
    throw CounterexampleError("end set does not induce a clique", ctx);
  return {left, right};
}

namespace {

void append_unique(std::vector<VertexSet>& sys, VertexSet k) {
  for (const VertexSet& c : sys)
    if (c == k) return;
  sys.push_back(k);
}

// Cover of one connected component, in the component's local labels.
std::vector<VertexSet> cover_component(const Graph& g, Budget& budget,
                                       nlohmann::json* audit) {
  std::vector<VertexSet> sys;
  if (audit) (*audit)["order"] = g.order();
  if (g.is_complete()) {
    if (audit) (*audit)["kind"] = "complete";
    sys.push_back(VertexSet(g.vertex_mask()));
    return sys;
  }
  if (auto cyc = square_of_cycle_order(g)) {
    if (audit) (*audit)["kind"] = "cycle-square";
    const std::vector<int>& order = *cyc;
    const int n = g.order();
    for (int i = 0; i < n; ++i)
      append_unique(sys, VertexSet::of({order[i], order[(i + 1) % n],
                                        order[(i + 2) % n]}));
    return sys;
  }

  if (audit) (*audit)["kind"] = "walks";
  std::vector<GoodWalk> walks = find_good_walks(g, budget);
  // Interior vertices of long walks have all four neighbors on the walk.
  for (const GoodWalk& w : walks) {
    if (w.k() < 5) continue;
    for (int i = 3; i <= w.k() - 2; ++i)
      if (g.degree(w.seq[i]) != 4)
        throw CounterexampleError(
            "interior walk vertex does not have degree 4",
            {{"graph6", write_graph6(g)}, {"walk", w.seq}, {"position", i}});
  }
  InteriorPathSet paths = extract_interior_paths(g, walks);
  if (audit) {
    nlohmann::json jw = nlohmann::json::array();
    for (const GoodWalk& w : walks) jw.push_back(w.seq);
    (*audit)["walks"] = jw;
    (*audit)["interior_paths"] = paths.paths;
  }

  VertexSet deleted;
  for (const std::vector<int>& p : paths.paths)
    for (std::size_t i = 1; i + 1 < p.size(); ++i) deleted.add(p[i]);
  InducedSubgraph rest =
      induced_subgraph(g, VertexSet(g.vertex_mask() & ~deleted.bits));
  if (!is_line_graph_of_multigraph(rest.graph, budget))
    throw CounterexampleError(
        "graph minus walk interiors is not a line graph of a multigraph",
        {{"graph6", write_graph6(g)},
         {"rest_graph6", write_graph6(rest.graph)}});
  CoverSearchResult km = find_krausz_cover(rest.graph, 2, budget);
  if (km.outcome == SearchOutcome::Indeterminate) throw BudgetExceededError();
  if (km.outcome != SearchOutcome::Found)
    throw CounterexampleError(
        "no rank-2 cover for the graph minus walk interiors",
        {{"graph6", write_graph6(g)},
         {"rest_graph6", write_graph6(rest.graph)}});

  std::vector<VertexSet> km_lifted;
  for (const VertexSet& k : km.system.cliques) {
    VertexSet lifted;
    for (int v : k.to_vector()) lifted.add(rest.original[v]);
    km_lifted.push_back(lifted);
  }

  VertexSet endpoints;
  for (const std::vector<int>& p : paths.paths) {
    endpoints.add(p.front());
    endpoints.add(p.back());
  }
  std::vector<VertexSet> kr;
  for (const std::vector<int>& p : paths.paths) {
    auto [left, right] = end_cliques(g, p);
    append_unique(kr, left);
    append_unique(kr, right);
  }

  std::vector<VertexSet> k0;
  for (const VertexSet& k : km_lifted)
    if ((k.bits & endpoints.bits) == 0) append_unique(k0, k);
  for (const VertexSet& k : kr) append_unique(k0, k);

  sys = k0;
  for (const std::vector<int>& p : paths.paths)
    for (std::size_t i = 0; i + 2 < p.size(); ++i)
      append_unique(sys, VertexSet::of({p[i], p[static_cast<int>(i) + 1],
                                        p[static_cast<int>(i) + 2]}));

  if (audit) {
    (*audit)["rest_graph6"] = write_graph6(rest.graph);
    (*audit)["rest_vertices"] = rest.original;
    nlohmann::json jkm = nlohmann::json::array();
    for (const VertexSet& k : km_lifted) jkm.push_back(k.to_vector());
    (*audit)["k_m"] = jkm;
    nlohmann::json jkr = nlohmann::json::array();
    for (const VertexSet& k : kr) jkr.push_back(k.to_vector());
    (*audit)["k_r"] = jkr;
    nlohmann::json jk0 = nlohmann::json::array();
    for (const VertexSet& k : k0) jk0.push_back(k.to_vector());
    (*audit)["k_0"] = jk0;
  }
  return sys;
}

}  // namespace

CliqueSystem cover_2closed(const Graph& g, Budget& budget,
                           nlohmann::json* audit) {
  std::array<int, 4> claw;
  if (!is_claw_free(g, &claw))
    throw InputError("cover requires a claw-free graph");
  int witness = -1;
  if (!is_2_closed(g, &witness))
    throw InputError("cover requires a 2-closed graph (vertex " +
                     std::to_string(witness) + " is completable)");

  CliqueSystem sys;
  nlohmann::json parts = nlohmann::json::array();
  for (const VertexSet& comp : components(g)) {
    if (comp.size() == 1) continue;
    InducedSubgraph sub = induced_subgraph(g, comp);
    nlohmann::json part;
    std::vector<VertexSet> local = cover_component(sub.graph, budget,
                                                   audit ? &part : nullptr);
    for (const VertexSet& k : local) {
      VertexSet lifted;
      for (int v : k.to_vector()) lifted.add(sub.original[v]);
      sys.cliques.push_back(lifted);
    }
    if (audit) {
      part["vertices"] = comp.to_vector();
      parts.push_back(std::move(part));
    }
  }

  nlohmann::json violation;
  if (!verify_cover(g, sys, 3, &violation))
    throw CounterexampleError("constructed system is not a rank-3 cover",
                              {{"graph6", write_graph6(g)},
                               {"violation", violation},
                               {"cover", to_json(sys)}});
  // A vertex lying in three cliques must have exactly those as its maximal
  // cliques.
  for (int v = 0; v < g.order(); ++v) {
    std::vector<VertexSet> mine;
    for (const VertexSet& k : sys.cliques)
      if (k.contains(v)) append_unique(mine, k);
    if (mine.size() != 3) continue;
    std::vector<VertexSet> maximal = maximal_cliques_containing(g, v);
    bool same = maximal.size() == 3;
    for (const VertexSet& k : mine)
      if (same && std::find(maximal.begin(), maximal.end(), k) == maximal.end())
        same = false;
    if (!same)
      throw CounterexampleError(
          "three-clique vertex has other maximal cliques",
          {{"graph6", write_graph6(g)},
           {"vertex", v},
           {"cover", to_json(sys)}});
  }

  if (audit) {
    (*audit)["components"] = std::move(parts);
    (*audit)["cover"] = to_json(sys);
  }
  return sys;
}

}  // namespace tutte
