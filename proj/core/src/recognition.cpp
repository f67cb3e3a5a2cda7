#include "tutte/recognition.hpp"

#include <algorithm>
#include <mutex>

#include "tutte/canonical.hpp"
#include "tutte/connectivity.hpp"
#include "tutte/graph6.hpp"
#include "tutte/krausz.hpp"

namespace tutte {

bool is_claw_free(const Graph& g, std::array<int, 4>* witness) {
  for (int x = 0; x < g.order(); ++x) {
    std::vector<int> nbrs = VertexSet(g.neighbors(x)).to_vector();
    const int d = static_cast<int>(nbrs.size());
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        if (g.adjacent(nbrs[i], nbrs[j])) continue;
        for (int k = j + 1; k < d; ++k) {
          if (g.adjacent(nbrs[i], nbrs[k]) || g.adjacent(nbrs[j], nbrs[k]))
            continue;
          if (witness) *witness = {x, nbrs[i], nbrs[j], nbrs[k]};
          return false;
        }
      }
  }
  return true;
}

namespace {

// Backtracking injection search; `emit` gets each full mapping and returns
// false to stop.  Mapping preserves adjacency and non-adjacency exactly.
void induced_copy_search(const Graph& g, const Graph& h,
                         const std::function<bool(const std::vector<int>&)>& emit) {
  const int m = h.order();
  const int n = g.order();
  if (m > n) return;
  std::vector<int> map(m, -1);
  std::uint64_t used = 0;
  bool stop = false;

  std::function<void(int)> place = [&](int i) {
    if (stop) return;
    if (i == m) {
      if (!emit(map)) stop = true;
      return;
    }
    for (int v = 0; v < n && !stop; ++v) {
      if ((used >> v) & 1u) continue;
      if (g.degree(v) < h.degree(i)) continue;
      bool ok = true;
      for (int j = 0; j < i; ++j) {
        if (h.adjacent(i, j) != g.adjacent(v, map[j])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[i] = v;
      used |= std::uint64_t{1} << v;
      place(i + 1);
      used &= ~(std::uint64_t{1} << v);
      map[i] = -1;
    }
  };
  place(0);
}

}  // namespace

std::optional<std::vector<int>> find_induced_copy(const Graph& g, const Graph& h) {
  std::optional<std::vector<int>> out;
  induced_copy_search(g, h, [&](const std::vector<int>& map) {
    out = map;
    return false;
  });
  return out;
}

bool has_induced_copy(const Graph& g, const Graph& h) {
  return find_induced_copy(g, h).has_value();
}

std::vector<VertexSet> induced_copy_sets(const Graph& g, const Graph& h) {
  std::vector<VertexSet> out;
  induced_copy_search(g, h, [&](const std::vector<int>& map) {
    VertexSet s;
    for (int v : map) s.add(v);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    return true;
  });
  return out;
}

namespace {

constexpr int kFamilyBound = 7;
// Graph classes per order, the standard count sequence for n = 1..7.
constexpr std::array<int, 8> kClassesPerOrder = {0, 1, 2, 4, 11, 34, 156, 1044};

bool rank2_coverable(const Graph& g, Budget& budget) {
  CoverSearchResult r = find_krausz_cover(g, 2, budget);
  if (r.outcome == SearchOutcome::Indeterminate) throw BudgetExceededError();
  return r.outcome == SearchOutcome::Found;
}

ForbiddenFamily derive_from_classes(const std::vector<Graph>& classes,
                                    Budget& budget) {
  ForbiddenFamily fam;
  fam.enumeration_max_order = kFamilyBound;
  fam.graphs_per_order.assign(kFamilyBound + 1, 0);
  fam.members_per_order.assign(kFamilyBound + 1, 0);

  for (const Graph& g : classes) fam.graphs_per_order[g.order()]++;
  for (int n = 1; n <= kFamilyBound; ++n)
    if (fam.graphs_per_order[n] != kClassesPerOrder[n])
      throw InputError("enumeration incomplete: got " +
                       std::to_string(fam.graphs_per_order[n]) + " classes of order " +
                       std::to_string(n) + ", expected " +
                       std::to_string(kClassesPerOrder[n]));

  for (const Graph& g : classes) {
    if (rank2_coverable(g, budget)) continue;
    // Minimal iff every one-vertex deletion is coverable (the class is
    // hereditary, so single deletions decide all proper induced subgraphs).
    bool minimal = true;
    for (int v = 0; v < g.order() && minimal; ++v) {
      VertexSet rest(g.vertex_mask() & ~(std::uint64_t{1} << v));
      if (!rank2_coverable(induced_subgraph(g, rest).graph, budget))
        minimal = false;
    }
    if (minimal) {
      fam.graphs.push_back(canonical_form(g));
      fam.members_per_order[g.order()]++;
    }
  }

  std::sort(fam.graphs.begin(), fam.graphs.end(),
            [](const Graph& a, const Graph& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              if (a.edge_count() != b.edge_count())
                return a.edge_count() < b.edge_count();
              return write_graph6(a) < write_graph6(b);
            });

  if (fam.graphs.size() != 7)
    throw InternalInconsistencyError(
        "derived forbidden family has " + std::to_string(fam.graphs.size()) +
        " members, expected 7",
        provenance_json(fam));
  return fam;
}

}  // namespace

ForbiddenFamily derive_forbidden_family(Budget& budget) {
  std::vector<Graph> classes;
  enumerate_graphs(kFamilyBound, [](const Graph&) { return true; },
                   [&](const Graph& g) { classes.push_back(g); });
  return derive_from_classes(classes, budget);
}

ForbiddenFamily derive_forbidden_family_from(const std::vector<Graph>& candidates,
                                             Budget& budget) {
  // Deduplicate up to isomorphism; validation against the known counts
  // happens in derive_from_classes.
  std::vector<Graph> classes;
  std::vector<std::string> seen;
  for (const Graph& g : candidates) {
    if (g.order() > kFamilyBound)
      throw InputError("candidate graph larger than the enumeration bound");
    Graph canon = canonical_form(g);
    std::string key = write_graph6(canon);
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(std::move(key));
      classes.push_back(canon);
    }
  }
  return derive_from_classes(classes, budget);
}

const ForbiddenFamily& forbidden_family() {
  static const ForbiddenFamily fam = [] {
    Budget budget(Budget::kDefaultLimit * 10);
    return derive_forbidden_family(budget);
  }();
  return fam;
}

nlohmann::json provenance_json(const ForbiddenFamily& fam) {
  nlohmann::json members = nlohmann::json::array();
  for (const Graph& g : fam.graphs) members.push_back(write_graph6(g));
  return {{"enumeration_max_order", fam.enumeration_max_order},
          {"graphs_per_order", fam.graphs_per_order},
          {"members_per_order", fam.members_per_order},
          {"members_graph6", members},
          {"ordering", "members sorted by (order, edge count, graph6); the"
                       " source numbering of the seven graphs is not fixed"}};
}

bool is_line_graph_of_multigraph(const Graph& g, Budget& budget) {
  const ForbiddenFamily& fam = forbidden_family();
  bool family_free = true;
  for (const Graph& f : fam.graphs)
    if (has_induced_copy(g, f)) {
      family_free = false;
      break;
    }
  bool coverable = rank2_coverable(g, budget);
  if (family_free != coverable)
    throw InternalInconsistencyError(
        "line-graph characterizations disagree",
        {{"graph6", write_graph6(g)},
         {"family_free", family_free},
         {"rank2_coverable", coverable}});
  return coverable;
}

std::optional<std::vector<int>> square_of_cycle_order(const Graph& g) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  if (!is_connected(g)) return std::nullopt;
  Graph target = Graph::cycle_square(n);
  if (g.edge_count() != target.edge_count()) return std::nullopt;
  // Same-order induced copy is an isomorphism; the image lists vertices of
  // g in cycle order.
  return find_induced_copy(g, target);
}

std::optional<int> is_square_of_cycle(const Graph& g) {
  if (square_of_cycle_order(g)) return g.order();
  return std::nullopt;
}

bool is_k_closed(const Graph& g, int k, int* witness) {
  for (int x = 0; x < g.order(); ++x) {
    VertexSet nb(g.neighbors(x));
    if (is_complete_within(g, nb)) continue;
    if (is_k_connected_within(g, nb, k)) {
      if (witness) *witness = x;
      return false;
    }
  }
  return true;
}

bool is_2_closed(const Graph& g, int* witness) { return is_k_closed(g, 2, witness); }

}  // namespace tutte
