#include "tutte/canonical.hpp"

#include <unordered_set>

#include "tutte/graph6.hpp"

namespace tutte {

namespace {

// Backtracking search for the permutation maximizing the sequence of
// "adjacency bits to already-placed vertices" codes.  The code of the
// vertex placed at position d is a d-bit number (bit i set iff adjacent to
// the vertex at position i), and sequences compare lexicographically.
struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<std::uint64_t> best;   // best code sequence found so far
  std::vector<int> best_perm;        // position -> original vertex
  std::vector<int> perm;
  std::vector<std::uint64_t> code;
  std::uint64_t used = 0;
  bool have_best = false;
  long generation = 0;

  explicit CanonSearch(const Graph& graph)
      : g(graph), n(graph.order()), best(n), best_perm(n), perm(n), code(n) {}

  void run() {
    if (n == 0) return;
    descend(0, true);
  }

  // Invariant while a best exists: tight means the code prefix equals the
  // best prefix; otherwise it is strictly greater.  Whenever a descendant
  // installs a new best, this frame lies on its path, so its prefix equals
  // the new best prefix and tight flips back on.
  void descend(int depth, bool tight) {
    if (depth == n) {
      best = code;
      best_perm = perm;
      have_best = true;
      ++generation;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u) continue;
      std::uint64_t c = 0;
      for (int i = 0; i < depth; ++i)
        c |= static_cast<std::uint64_t>(g.adjacent(v, perm[i])) << i;
      bool child_tight = true;
      if (have_best) {
        if (tight) {
          if (c < best[depth]) continue;
          child_tight = (c == best[depth]);
        } else {
          child_tight = false;
        }
      }
      perm[depth] = v;
      code[depth] = c;
      used |= std::uint64_t{1} << v;
      const long gen_before = generation;
      descend(depth + 1, child_tight);
      used &= ~(std::uint64_t{1} << v);
      if (generation != gen_before) tight = true;
    }
  }
};

}  // namespace

Graph canonical_form(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return g;
  CanonSearch search(g);
  search.run();
  Graph out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(search.best_perm[i], search.best_perm[j])) out.add_edge(i, j);
  return out;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

void enumerate_graphs(int n_max, const std::function<bool(const Graph&)>& keep,
                      const std::function<void(const Graph&)>& emit) {
  if (n_max < 1) return;
  std::vector<Graph> level;
  {
    Graph one(1);
    if (keep(one)) {
      emit(one);
      level.push_back(one);
    }
  }
  for (int n = 2; n <= n_max; ++n) {
    std::vector<Graph> next;
    std::unordered_set<std::string> seen;
    for (const Graph& parent : level) {
      const std::uint64_t masks = std::uint64_t{1} << (n - 1);
      for (std::uint64_t m = 0; m < masks; ++m) {
        Graph child(n);
        for (int u = 0; u < n - 1; ++u)
          for (int v = u + 1; v < n - 1; ++v)
            if (parent.adjacent(u, v)) child.add_edge(u, v);
        for (int u = 0; u < n - 1; ++u)
          if ((m >> u) & 1u) child.add_edge(u, n - 1);
        if (!keep(child)) continue;
        Graph canon = canonical_form(child);
        std::string key = write_graph6(canon);
        if (seen.insert(std::move(key)).second) {
          emit(canon);
          next.push_back(canon);
        }
      }
    }
    level = std::move(next);
  }
}

}  // namespace tutte
