#include "tutte/paths.hpp"

#include <algorithm>

namespace tutte {

namespace {

VertexSet path_set(std::span<const int> p) {
  VertexSet s;
  for (int v : p) s.add(v);
  return s;
}

void check_pair(const Graph& g, int a, int b) {
  g.check_vertex(a);
  g.check_vertex(b);
  if (a == b) throw InputError("path endpoints must differ");
}

}  // namespace

bool is_valid_path(const Graph& g, std::span<const int> p) {
  if (p.empty()) return false;
  VertexSet seen;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= g.order()) return false;
    if (seen.contains(p[i])) return false;
    seen.add(p[i]);
    if (i > 0 && !g.adjacent(p[i - 1], p[i])) return false;
  }
  return true;
}

bool is_valid_cycle(const Graph& g, std::span<const int> c) {
  if (c.size() < 3) return false;
  if (!is_valid_path(g, c)) return false;
  return g.adjacent(c.back(), c.front());
}

bool is_tutte_vertex_set(const Graph& g, VertexSet s, TutteViolation* violation) {
  g.check_set(s);
  const int limit = std::min(3, s.size() - 1);
  std::uint64_t rest = g.vertex_mask() & ~s.bits;
  for (const VertexSet& comp : components_within(g, VertexSet(rest))) {
    std::uint64_t contacts = 0;
    for_each_vertex(comp.bits, [&](int v) { contacts |= g.neighbors(v) & s.bits; });
    if (std::popcount(contacts) > limit) {
      if (violation) *violation = {comp, VertexSet(contacts)};
      return false;
    }
  }
  return true;
}

bool is_tutte_path(const Graph& g, std::span<const int> p, TutteViolation* violation) {
  if (!is_valid_path(g, p)) throw InputError("not a valid path in the graph");
  return is_tutte_vertex_set(g, path_set(p), violation);
}

bool is_tutte_cycle(const Graph& g, std::span<const int> c, TutteViolation* violation) {
  if (!is_valid_cycle(g, c)) throw InputError("not a valid cycle in the graph");
  VertexSet s = path_set(c);
  if (s.size() == g.order()) return true;  // Hamilton cycle
  if (s.size() < 4) return false;
  std::uint64_t rest = g.vertex_mask() & ~s.bits;
  for (const VertexSet& comp : components_within(g, VertexSet(rest))) {
    std::uint64_t contacts = 0;
    for_each_vertex(comp.bits, [&](int v) { contacts |= g.neighbors(v) & s.bits; });
    if (std::popcount(contacts) > 3) {
      if (violation) *violation = {comp, VertexSet(contacts)};
      return false;
    }
  }
  return true;
}

void for_each_ab_path(const Graph& g, int a, int b, Budget& budget,
                      const std::function<bool(std::span<const int>)>& visit) {
  check_pair(g, a, b);
  std::vector<int> stackpath{a};
  std::uint64_t used = std::uint64_t{1} << a;
  bool stop = false;

  std::function<void()> descend = [&]() {
    if (stop) return;
    int at = stackpath.back();
    std::uint64_t cand = g.neighbors(at) & ~used;
    while (cand && !stop) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      budget.charge();
      stackpath.push_back(v);
      if (v == b) {
        if (!visit(stackpath)) stop = true;
      } else {
        used |= std::uint64_t{1} << v;
        descend();
        used &= ~(std::uint64_t{1} << v);
      }
      stackpath.pop_back();
    }
  };
  descend();
}

std::vector<std::vector<int>> all_ab_paths(const Graph& g, int a, int b,
                                           Budget& budget) {
  std::vector<std::vector<int>> out;
  for_each_ab_path(g, a, b, budget, [&](std::span<const int> p) {
    out.emplace_back(p.begin(), p.end());
    return true;
  });
  return out;
}

PathSetIndex::PathSetIndex(const Graph& g, int a, Budget& budget)
    : n_(g.order()), a_(a) {
  g.check_vertex(a);
  if (n_ >= 26 || !budget.can_afford(std::uint64_t{1} << n_))
    throw BudgetExceededError();
  budget.charge(std::uint64_t{1} << n_);
  end_masks_.assign(std::size_t{1} << n_, 0);
  const std::uint64_t abit = std::uint64_t{1} << a;
  end_masks_[abit] = abit;
  const std::uint64_t total = std::uint64_t{1} << n_;
  for (std::uint64_t m = abit; m < total; ++m) {
    if (!(m & abit)) continue;
    std::uint64_t ends = end_masks_[m];
    if (!ends) continue;
    for_each_vertex(ends, [&](int v) {
      std::uint64_t ext = g.neighbors(v) & ~m;
      for_each_vertex(ext, [&](int u) {
        end_masks_[m | (std::uint64_t{1} << u)] |= std::uint64_t{1} << u;
      });
    });
  }
}

bool PathSetIndex::has_path_with_set(int b, VertexSet s) const {
  if (b == a_) return false;
  if ((s.bits >> b) & 1u)
    return (end_masks_[s.bits] >> b) & 1u;
  return false;
}

std::vector<VertexSet> PathSetIndex::sets_to(int b) const {
  std::vector<VertexSet> out;
  const std::uint64_t bbit = std::uint64_t{1} << b;
  for (std::uint64_t m = 0; m < end_masks_.size(); ++m)
    if (end_masks_[m] & bbit) out.push_back(VertexSet(m));
  return out;
}

std::vector<std::uint8_t> PathSetIndex::superset_closure(int b) const {
  const std::uint64_t bbit = std::uint64_t{1} << b;
  std::vector<std::uint8_t> up(end_masks_.size());
  for (std::uint64_t m = 0; m < end_masks_.size(); ++m)
    up[m] = (end_masks_[m] & bbit) ? 1 : 0;
  for (int i = 0; i < n_; ++i) {
    const std::uint64_t ibit = std::uint64_t{1} << i;
    for (std::uint64_t m = end_masks_.size(); m-- > 0;)
      if (!(m & ibit)) up[m] |= up[m | ibit];
  }
  return up;
}

std::vector<VertexSet> PathSetIndex::maximal_sets_to(int b) const {
  std::vector<std::uint8_t> up = superset_closure(b);
  std::vector<VertexSet> out;
  const std::uint64_t bbit = std::uint64_t{1} << b;
  const std::uint64_t full = (n_ == 64) ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << n_) - 1;
  for (std::uint64_t m = 0; m < end_masks_.size(); ++m) {
    if (!(end_masks_[m] & bbit)) continue;
    bool maximal = true;
    std::uint64_t outside = full & ~m;
    while (outside) {
      int i = std::countr_zero(outside);
      outside &= outside - 1;
      if (up[m | (std::uint64_t{1} << i)]) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(VertexSet(m));
  }
  return out;
}

bool PathSetIndex::is_maximal_set(int b, VertexSet s) const {
  if (!has_path_with_set(b, s)) return false;
  std::vector<std::uint8_t> up = superset_closure(b);
  const std::uint64_t full = (n_ == 64) ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << n_) - 1;
  std::uint64_t outside = full & ~s.bits;
  while (outside) {
    int i = std::countr_zero(outside);
    outside &= outside - 1;
    if (up[s.bits | (std::uint64_t{1} << i)]) return false;
  }
  return true;
}

bool is_maximal_ab_path(const Graph& g, std::span<const int> p, Budget& budget) {
  if (!is_valid_path(g, p) || p.size() < 2)
    throw InputError("not a valid path with two endpoints");
  PathSetIndex idx(g, p.front(), budget);
  return idx.is_maximal_set(p.back(), path_set(p));
}

std::optional<std::vector<int>> find_maximal_tutte_path(const Graph& g, int a,
                                                        int b, Budget& budget) {
  check_pair(g, a, b);
  PathSetIndex idx(g, a, budget);
  std::vector<VertexSet> maximal = idx.maximal_sets_to(b);
  if (maximal.empty())
    throw InputError("no path joins the endpoints (different components)");
  std::vector<VertexSet> qualifying;
  for (const VertexSet& s : maximal)
    if (is_tutte_vertex_set(g, s)) qualifying.push_back(s);
  if (qualifying.empty()) return std::nullopt;

  // First DFS-order path whose vertex set qualifies; branches that cannot
  // stay inside a qualifying set are pruned, which preserves the order.
  std::optional<std::vector<int>> result;
  std::vector<int> cur{a};
  std::uint64_t used = std::uint64_t{1} << a;
  auto inside_some = [&](std::uint64_t m) {
    for (const VertexSet& q : qualifying)
      if ((m & ~q.bits) == 0) return true;
    return false;
  };
  std::function<void()> descend = [&]() {
    if (result) return;
    int at = cur.back();
    std::uint64_t cand = g.neighbors(at) & ~used;
    while (cand && !result) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      budget.charge();
      std::uint64_t next_used = used | (std::uint64_t{1} << v);
      if (!inside_some(next_used)) continue;
      cur.push_back(v);
      if (v == b) {
        // An (a,b)-path ends here; it counts iff its set qualifies.
        for (const VertexSet& q : qualifying)
          if (q.bits == next_used) {
            result = cur;
            break;
          }
      } else {
        used = next_used;
        descend();
        used &= ~(std::uint64_t{1} << v);
      }
      cur.pop_back();
    }
  };
  descend();
  return result;
}

bool is_tutte_connected(const Graph& g, Budget& budget,
                        std::pair<int, int>* failing) {
  for (int a = 0; a < g.order(); ++a) {
    std::optional<PathSetIndex> idx;
    for (int b = a + 1; b < g.order(); ++b) {
      if (!idx) idx.emplace(g, a, budget);
      std::vector<VertexSet> maximal = idx->maximal_sets_to(b);
      bool ok = false;
      for (const VertexSet& s : maximal)
        if (is_tutte_vertex_set(g, s)) {
          ok = true;
          break;
        }
      if (!ok) {
        if (failing) *failing = {a, b};
        return false;
      }
    }
  }
  return true;
}

bool has_hamilton_path(const Graph& g, int a, int b, Budget& budget) {
  check_pair(g, a, b);
  PathSetIndex idx(g, a, budget);
  return idx.has_path_with_set(b, VertexSet(g.vertex_mask()));
}

bool has_hamilton_cycle(const Graph& g, Budget& budget) {
  const int n = g.order();
  if (n < 3) return false;
  PathSetIndex idx(g, 0, budget);
  bool found = false;
  for_each_vertex(g.neighbors(0), [&](int v) {
    if (!found && idx.has_path_with_set(v, VertexSet(g.vertex_mask())))
      found = true;
  });
  return found;
}

bool is_hamilton_connected(const Graph& g, Budget& budget) {
  for (int a = 0; a < g.order(); ++a) {
    std::optional<PathSetIndex> idx;
    for (int b = a + 1; b < g.order(); ++b) {
      if (!idx) idx.emplace(g, a, budget);
      if (!idx->has_path_with_set(b, VertexSet(g.vertex_mask()))) return false;
    }
  }
  return true;
}

}  // namespace tutte
