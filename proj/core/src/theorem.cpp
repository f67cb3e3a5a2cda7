#include "tutte/theorem.hpp"

#include <algorithm>
#include <functional>

#include "tutte/connectivity.hpp"
#include "tutte/goodwalk.hpp"
#include "tutte/graph6.hpp"
#include "tutte/paths.hpp"
#include "tutte/recognition.hpp"

namespace tutte {

VxProfile vx_profile(const Graph& g, int x, std::span<const int> path) {
  g.check_vertex(x);
  VertexSet seen;
  for (int v : path) {
    if (v < 0 || v >= g.order()) throw InputError("path vertex out of range");
    if (seen.contains(v)) throw InputError("path repeats a vertex");
    seen.add(v);
  }
  VxProfile out;
  const std::uint64_t closed = g.closed_neighbors(x);
  for (std::size_t i = 0; i < path.size(); ++i) {
    int y = path[i];
    if (y == x || !g.adjacent(x, y)) continue;
    int count = 0;
    if (i > 0 && ((closed >> path[i - 1]) & 1u)) ++count;
    if (i + 1 < path.size() && ((closed >> path[i + 1]) & 1u)) ++count;
    if (count == 0) out.v0.add(y);
    if (count == 1) {
      out.v1.add(y);
      if (!out.a_first) out.a_first = y;
      out.b_last = y;
    }
    if (count == 2) out.v2.add(y);
  }
  return out;
}

namespace {

// Hamilton (a,b)-paths of the subgraph induced by `span` in h, ascending
// neighbor order.  Visitor returns false to stop.
void for_each_spanning_ab_path(
    const Graph& h, VertexSet span, int a, int b, Budget& budget,
    const std::function<bool(std::span<const int>)>& visit) {
  std::vector<int> cur{a};
  std::uint64_t used = std::uint64_t{1} << a;
  bool stop = false;
  std::function<void()> descend = [&]() {
    if (stop) return;
    std::uint64_t cand = h.neighbors(cur.back()) & span.bits & ~used;
    while (cand && !stop) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      budget.charge();
      if (v == b) {
        if (used == (span.bits & ~(std::uint64_t{1} << b))) {
          cur.push_back(v);
          if (!visit(cur)) stop = true;
          cur.pop_back();
        }
        continue;
      }
      cur.push_back(v);
      used |= std::uint64_t{1} << v;
      descend();
      used &= ~(std::uint64_t{1} << v);
      cur.pop_back();
    }
  };
  descend();
}

struct PropertyCheck {
  bool ok = true;
  std::vector<int> failed;
};

// Properties of one realization path (living in the completion), with the
// classes taken in g.
PropertyCheck path_properties(const Graph& g, int x, int a, int b,
                              std::span<const int> path, VertexSet cut_r,
                              const std::vector<VertexSet>& r_components) {
  PropertyCheck out;
  VxProfile prof = vx_profile(g, x, path);
  VertexSet pset;
  for (int v : path) pset.add(v);

  auto fail = [&](int p) {
    out.ok = false;
    out.failed.push_back(p);
  };

  if (!pset.contains(x)) fail(1);

  if (!prof.a_first) {
    fail(2);
  } else {
    int ap = *prof.a_first, bp = *prof.b_last;
    if (ap == bp || ap == a || ap == b || bp == a || bp == b || a == b) fail(2);
    else if (!g.adjacent(ap, bp)) fail(3);
  }

  // Every part of the neighborhood minus the cut holds a vertex outside v0.
  for (const VertexSet& comp : r_components)
    if ((comp.bits & ~prof.v0.bits) == 0) {
      fail(4);
      break;
    }

  // Pairs of v1 vertices separated by the cut: the subpath between them, if
  // it has interior vertices, must contain an interior vertex of N[x]
  // outside v0.
  auto comp_of = [&](int v) -> int {
    for (std::size_t i = 0; i < r_components.size(); ++i)
      if (r_components[i].contains(v)) return static_cast<int>(i);
    return -1;
  };
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < path.size(); ++i) pos[path[i]] = static_cast<int>(i);
  const std::uint64_t closed = g.closed_neighbors(x);
  bool prop5 = true;
  std::vector<int> v1 = prof.v1.to_vector();
  for (std::size_t i = 0; i < v1.size() && prop5; ++i)
    for (std::size_t j = i + 1; j < v1.size() && prop5; ++j) {
      int u = v1[i], w = v1[j];
      if (cut_r.contains(u) || cut_r.contains(w)) continue;
      int cu = comp_of(u), cw = comp_of(w);
      if (cu < 0 || cw < 0 || cu == cw) continue;
      int lo = std::min(pos[u], pos[w]), hi = std::max(pos[u], pos[w]);
      if (hi - lo < 2) continue;  // no interior vertex
      bool witness = false;
      for (int t = lo + 1; t < hi; ++t) {
        int v = path[t];
        if (((closed >> v) & 1u) && !prof.v0.contains(v)) {
          witness = true;
          break;
        }
      }
      if (!witness) prop5 = false;
    }
  if (!prop5) fail(5);
  return out;
}

}  // namespace

nlohmann::json CMaxReport::to_json() const {
  nlohmann::json cls = nlohmann::json::array();
  for (const CMaxClassReport& c : classes)
    cls.push_back({{"set", c.set.to_vector()},
                   {"lhs", c.lhs},
                   {"rhs", c.rhs},
                   {"agree", c.agree},
                   {"failed_properties", c.failed_properties},
                   {"paths_checked", c.paths_checked},
                   {"endpoints_consistent", c.endpoints_consistent},
                   {"endpoint_edges", c.endpoint_edges}});
  return {{"a", a},
          {"b", b},
          {"x", x},
          {"ab_cut", ab_cut},
          {"classes", cls},
          {"equivalence_ok", equivalence_ok},
          {"checked_all_cuts", checked_all_cuts},
          {"choice_sensitive", choice_sensitive}};
}

CMaxReport check_cmaximal(const Graph& g, int a, int b, int x, Budget& budget,
                          bool all_cuts) {
  g.check_vertex(a);
  g.check_vertex(b);
  g.check_vertex(x);
  if (a == b || a == x || b == x)
    throw InputError("the three vertices must be pairwise distinct");
  if (!is_claw_free(g)) throw InputError("graph must be claw-free");
  VertexSet nb(g.neighbors(x));
  if (is_complete_within(g, nb))
    throw InputError("neighborhood of x must be non-complete");
  if (!is_k_connected_within(g, nb, 2))
    throw InputError("neighborhood of x must be 2-connected");

  const Graph gstar = local_completion(g, x);
  InducedSubgraph nbsub = induced_subgraph(g, nb);
  const int kappa = vertex_connectivity(nbsub.graph);
  std::vector<VertexSet> cuts_local = minimum_vertex_cuts(nbsub.graph, kappa);
  std::vector<VertexSet> cuts;  // in host labels
  for (const VertexSet& c : cuts_local) {
    VertexSet lifted;
    for (int v : c.to_vector()) lifted.add(nbsub.original[v]);
    cuts.push_back(lifted);
  }

  CMaxReport report;
  report.a = a;
  report.b = b;
  report.x = x;
  report.checked_all_cuts = all_cuts;
  report.ab_cut =
      is_cut_within(g, nb, VertexSet::of({a, b}));

  PathSetIndex idx_star(gstar, a, budget);
  PathSetIndex idx_g(g, a, budget);
  std::vector<VertexSet> maximal = idx_star.maximal_sets_to(b);

  const std::size_t cut_count = all_cuts ? cuts.size() : 1;
  for (const VertexSet& s : maximal) {
    CMaxClassReport cls;
    cls.set = s;
    cls.lhs = !idx_g.has_path_with_set(b, s);

    std::optional<bool> rhs_once;
    for (std::size_t ci = 0; ci < cut_count; ++ci) {
      VertexSet cut_r = cuts[ci];
      std::vector<VertexSet> r_components =
          components_within(g, VertexSet(nb.bits & ~cut_r.bits));
      bool paths_ok = true;
      int checked = 0;
      std::optional<std::pair<int, int>> first_ends;
      bool ends_same = true;
      bool end_edges = true;
      std::vector<int> failed;
      for_each_spanning_ab_path(
          gstar, s, a, b, budget, [&](std::span<const int> p) {
            ++checked;
            PropertyCheck pc =
                path_properties(g, x, a, b, p, cut_r, r_components);
            if (!pc.ok && failed.empty()) failed = pc.failed;
            if (!pc.ok) paths_ok = false;
            VxProfile prof = vx_profile(g, x, p);
            if (prof.a_first) {
              if (!first_ends) first_ends = {*prof.a_first, *prof.b_last};
              else if (first_ends->first != *prof.a_first ||
                       first_ends->second != *prof.b_last)
                ends_same = false;
              if (!g.adjacent(*prof.a_first, a) || !g.adjacent(*prof.b_last, b))
                end_edges = false;
            } else {
              end_edges = false;
            }
            return true;
          });
      bool rhs = report.ab_cut && paths_ok;
      if (ci == 0) {
        cls.rhs = rhs;
        cls.paths_checked = checked;
        cls.failed_properties = failed;
        if (cls.lhs) {
          cls.endpoints_consistent = ends_same;
          cls.endpoint_edges = end_edges;
        }
      }
      if (!rhs_once) rhs_once = rhs;
      else if (*rhs_once != rhs) report.choice_sensitive = true;
    }

    cls.agree = (cls.lhs == cls.rhs);
    if (!cls.agree || (cls.lhs && (!cls.endpoints_consistent || !cls.endpoint_edges)))
      report.equivalence_ok = false;
    report.classes.push_back(cls);
  }
  return report;
}

std::vector<int> choose_tutte_path_avoiding_v0(const Graph& gT, int x, int a,
                                               int b, Budget& budget) {
  gT.check_vertex(x);
  if (!is_claw_free(gT)) throw InputError("graph must be claw-free");
  const Graph gstar = local_completion(gT, x);
  std::optional<std::vector<int>> start =
      find_maximal_tutte_path(gstar, a, b, budget);
  if (!start)
    throw InputError("completion has no maximal Tutte path for the pair");
  std::vector<int> path = *start;
  VertexSet pset;
  for (int v : path) pset.add(v);

  nlohmann::json ctx = {{"graph6", write_graph6(gT)},
                        {"x", x},
                        {"a", a},
                        {"b", b},
                        {"path", path}};
  // The construction hinges on the set having no realization in gT.
  PathSetIndex idx_g(gT, a, budget);
  if (idx_g.has_path_with_set(b, pset))
    throw CounterexampleError(
        "maximal Tutte path of the completion is realizable before completing",
        ctx);

  const std::uint64_t closed = gT.closed_neighbors(x);
  auto count_v0_interior = [&](const std::vector<int>& p) {
    VxProfile prof = vx_profile(gT, x, p);
    int cnt = 0;
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
      if (prof.v0.contains(p[i])) ++cnt;
    return cnt;
  };

  int pending = count_v0_interior(path);
  while (pending > 0) {
    VxProfile prof = vx_profile(gT, x, path);
    std::size_t ipos = 0;
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
      if (prof.v0.contains(path[i])) {
        ipos = i;
        break;
      }
    const int iv = static_cast<int>(path[ipos]);
    const int p1 = path[ipos - 1], p2 = path[ipos + 1];
    if (!gT.adjacent(p1, p2))
      throw CounterexampleError(
          "path neighbors of a v0 interior vertex are non-adjacent", ctx);
    // First edge of the path with both ends in N[x]; it is never incident
    // to iv because iv's path neighbors lie outside N[x].
    int epos = -1;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (((closed >> path[i]) & 1u) && ((closed >> path[i + 1]) & 1u)) {
        epos = static_cast<int>(i);
        break;
      }
    if (epos < 0)
      throw CounterexampleError(
          "no path edge inside the closed neighborhood of x", ctx);
    const int s = path[epos], t = path[epos + 1];
    std::vector<int> next;
    next.reserve(path.size());
    for (std::size_t i = 0; i < path.size(); ++i)
      if (static_cast<int>(path[i]) != iv) next.push_back(path[i]);
    std::vector<int> rerouted;
    rerouted.reserve(path.size());
    for (std::size_t i = 0; i < next.size(); ++i) {
      rerouted.push_back(next[i]);
      if (i + 1 < next.size() && next[i] == s && next[i + 1] == t)
        rerouted.push_back(iv);
    }
    if (rerouted.size() != path.size() || !is_valid_path(gstar, rerouted))
      throw CounterexampleError("rerouting produced an invalid path", ctx);
    int now = count_v0_interior(rerouted);
    if (now >= pending)
      throw CounterexampleError("rerouting failed to make progress", ctx);
    path = std::move(rerouted);
    pending = now;
  }

  VertexSet after;
  for (int v : path) after.add(v);
  if (!(after == pset) || !is_tutte_vertex_set(gstar, after))
    throw CounterexampleError("rerouted path lost maximality or Tutte", ctx);
  return path;
}

nlohmann::json AbcPartition::to_json() const {
  return {{"x", x},
          {"a", a},
          {"b", b},
          {"a_prime", a_prime},
          {"b_prime", b_prime},
          {"a_plus", a_plus},
          {"A", A.to_vector()},
          {"B", B.to_vector()},
          {"C", C.to_vector()},
          {"C_prime", C_prime.to_vector()}};
}

AbcPartition abc_partition(const Graph& gT, int x, int a, int b,
                           std::span<const int> path, Budget& budget) {
  (void)budget;
  if (path.size() < 2 || path.front() != a || path.back() != b)
    throw InputError("path must join a to b");
  nlohmann::json ctx = {{"graph6", write_graph6(gT)},
                        {"x", x},
                        {"a", a},
                        {"b", b},
                        {"path", std::vector<int>(path.begin(), path.end())}};
  auto reject = [&](const std::string& what, nlohmann::json extra = nullptr) {
    nlohmann::json detail = ctx;
    if (!extra.is_null()) detail["detail"] = std::move(extra);
    throw CounterexampleError(what, detail);
  };

  VxProfile prof = vx_profile(gT, x, path);
  if (!prof.a_first) reject("v1 class of the chosen path is empty");
  AbcPartition part;
  part.x = x;
  part.a = a;
  part.b = b;
  part.a_prime = *prof.a_first;
  part.b_prime = *prof.b_last;
  part.a_plus = path[1];

  // Cut claim: x sees both endpoints and {a,b} splits its neighborhood.
  VertexSet nb(gT.neighbors(x));
  if (!nb.contains(a) || !nb.contains(b))
    reject("x is not adjacent to both chosen endpoints");
  if (!is_cut_within(gT, nb, VertexSet::of({a, b})))
    reject("endpoints do not cut the neighborhood of x");

  std::vector<VertexSet> parts = components_within(
      gT, VertexSet(nb.bits & ~VertexSet::of({a, b}).bits));
  if (parts.size() != 2)
    reject("neighborhood minus the endpoints does not have two components",
           {{"components", static_cast<int>(parts.size())}});
  int prime_side = -1;
  for (int i = 0; i < 2; ++i)
    if (parts[i].contains(part.a_prime)) prime_side = i;
  if (prime_side < 0 || !parts[prime_side].contains(part.b_prime))
    reject("first and last v1 vertices do not share a component");
  part.C_prime = parts[prime_side];
  part.C = parts[1 - prime_side];

  part.A = VertexSet(gT.neighbors(a) & ~gT.closed_neighbors(x));
  part.B = VertexSet(gT.neighbors(b) & ~gT.closed_neighbors(x));

  // Contact claims at the prime vertices and isolation of a_plus.
  const std::uint64_t closed = gT.closed_neighbors(x);
  std::uint64_t blocked =
      closed & ~VertexSet::of({a, b, part.a_prime}).bits;
  if (blocked & gT.neighbors(part.a_plus))
    reject("a vertex of N[x] beyond {a,b,a'} touches the path neighbor of a");
  if ((gT.neighbors(a) & part.C_prime.bits) !=
      VertexSet::of({part.a_prime}).bits)
    reject("contact of a with the prime component is not exactly a'");
  if ((gT.neighbors(b) & part.C_prime.bits) !=
      VertexSet::of({part.b_prime}).bits)
    reject("contact of b with the prime component is not exactly b'");

  // Clique claims.
  auto clique = [&](VertexSet s, const char* name) {
    if (!gT.is_clique(s)) reject(std::string("set does not induce a clique"),
                                 {{"set", s.to_vector()}, {"name", name}});
  };
  VertexSet Ca = part.C;
  Ca.add(a);
  VertexSet Cb = part.C;
  Cb.add(b);
  clique(part.A, "A");
  clique(part.B, "B");
  clique(Ca, "C+a");
  clique(Cb, "C+b");
  clique(part.C_prime, "C'");

  // Separation and the extended cliques.
  std::uint64_t ab_side = part.A.bits | part.B.bits;
  bool touch = false;
  for_each_vertex(part.C.bits,
                  [&](int v) { if (gT.neighbors(v) & ab_side) touch = true; });
  if (touch) reject("a vertex of A or B touches C");
  VertexSet Aaa = part.A;
  Aaa.add(a);
  Aaa.add(part.a_prime);
  VertexSet Bbb = part.B;
  Bbb.add(b);
  Bbb.add(part.b_prime);
  clique(Aaa, "A+a+a'");
  clique(Bbb, "B+b+b'");

  // Common neighborhood identity.
  VertexSet cx = part.C;
  cx.add(x);
  if (cx.bits != (gT.neighbors(a) & gT.neighbors(b)))
    reject("common neighborhood of the endpoints is not C plus x");

  // Pairwise disjointness (A,B follows from the identity, checked anyway).
  std::array<VertexSet, 4> sets = {part.A, part.B, part.C, part.C_prime};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (sets[i].bits & sets[j].bits)
        reject("partition sets overlap", {{"i", i}, {"j", j}});

  // The x-side cliques drawn around the partition.
  VertexSet Cax = Ca, Cbx = Cb, Cpx = part.C_prime;
  Cax.add(x);
  Cbx.add(x);
  Cpx.add(x);
  clique(Cax, "C+a+x");
  clique(Cbx, "C+b+x");
  clique(Cpx, "C'+x");

  // x is the only vertex whose neighborhood is non-complete 2-connected.
  for (int y = 0; y < gT.order(); ++y) {
    if (y == x) continue;
    VertexSet ynb(gT.neighbors(y));
    if (!is_complete_within(gT, ynb) && is_k_connected_within(gT, ynb, 2))
      reject("second vertex with non-complete 2-connected neighborhood",
             {{"y", y}});
  }
  return part;
}

CliqueSystem cover_with_completable_vertex(const Graph& gT, int x, int a,
                                           int b, Budget& budget,
                                           nlohmann::json* report) {
  std::vector<int> path = choose_tutte_path_avoiding_v0(gT, x, a, b, budget);
  AbcPartition part = abc_partition(gT, x, a, b, path, budget);
  if (report) {
    (*report)["partition"] = part.to_json();
    (*report)["path"] = path;
  }

  // Cliques that cover every edge at x.
  std::vector<VertexSet> kx;
  VertexSet Cp = part.C_prime;
  if (gT.adjacent(a, b)) {
    VertexSet Cab = part.C;
    Cab.add(a);
    Cab.add(b);
    kx = {Cab, Cp};
  } else {
    VertexSet Ca = part.C;
    Ca.add(a);
    VertexSet Cb = part.C;
    Cb.add(b);
    kx = {Ca, Cb, Cp};
  }
  VertexSet rest(gT.vertex_mask() & ~(std::uint64_t{1} << x));
  for (const VertexSet& k : kx)
    if (!is_maximal_clique_within(gT, rest, k))
      throw CounterexampleError(
          "branch clique is not maximal outside x",
          {{"graph6", write_graph6(gT)}, {"clique", k.to_vector()}});

  InducedSubgraph reduced = induced_subgraph(gT, rest);
  if (!is_2_closed(reduced.graph))
    throw CounterexampleError("graph minus the branch vertex is not 2-closed",
                              {{"graph6", write_graph6(gT)}, {"x", x}});
  nlohmann::json audit;
  CliqueSystem k0_local =
      cover_2closed(reduced.graph, budget, report ? &audit : nullptr);
  if (report) (*report)["cover_audit"] = std::move(audit);
  std::vector<VertexSet> k0;
  for (const VertexSet& k : k0_local.cliques) {
    VertexSet lifted;
    for (int v : k.to_vector()) lifted.add(reduced.original[v]);
    k0.push_back(lifted);
  }

  // Merge: cliques shared with the branch system absorb x; the others are
  // added with x, except the C+b clique which contributes only the edge bx.
  const std::uint64_t xbit = std::uint64_t{1} << x;
  CliqueSystem sys;
  auto in_kx = [&](VertexSet k) {
    for (const VertexSet& c : kx)
      if (c == k) return true;
    return false;
  };
  for (const VertexSet& k : k0)
    sys.cliques.push_back(in_kx(k) ? VertexSet(k.bits | xbit) : k);
  VertexSet Cb_marker = part.C;
  Cb_marker.add(b);
  for (const VertexSet& k : kx) {
    bool present = false;
    for (const VertexSet& c : k0)
      if (c == k) present = true;
    if (present) continue;
    if (!gT.adjacent(a, b) && k == Cb_marker)
      sys.cliques.push_back(VertexSet::of({b, x}));
    else
      sys.cliques.push_back(VertexSet(k.bits | xbit));
  }
  // Drop duplicates; identity is the vertex set.
  std::vector<VertexSet> dedup;
  for (const VertexSet& k : sys.cliques) {
    bool seen = false;
    for (const VertexSet& c : dedup)
      if (c == k) seen = true;
    if (!seen) dedup.push_back(k);
  }
  sys.cliques = std::move(dedup);

  nlohmann::json violation;
  if (!verify_cover(gT, sys, 3, &violation))
    throw CounterexampleError("closure cover fails rank-3 verification",
                              {{"graph6", write_graph6(gT)},
                               {"violation", violation},
                               {"cover", to_json(sys)}});
  if (report) (*report)["cover"] = to_json(sys);
  return sys;
}

CliqueSystem cover_tutte_closure(const Graph& gT, Budget& budget,
                                 nlohmann::json* report) {
  if (!is_claw_free(gT))
    throw InputError("a Tutte-closure of a claw-free graph must be claw-free");

  auto finish = [&](CliqueSystem sys, const char* mode) {
    nlohmann::json violation;
    if (!verify_cover(gT, sys, 3, &violation))
      throw CounterexampleError("closure cover fails rank-3 verification",
                                {{"graph6", write_graph6(gT)},
                                 {"violation", violation},
                                 {"cover", to_json(sys)}});
    if (report) {
      (*report)["mode"] = mode;
      (*report)["cover"] = to_json(sys);
    }
    return sys;
  };

  if (!is_connected(gT) && gT.order() > 0) {
    CliqueSystem sys;
    for (const VertexSet& comp : components(gT)) {
      if (!is_complete_within(gT, comp))
        throw InputError(
            "disconnected input has a non-complete component; "
            "not a Tutte-closure");
      if (comp.size() >= 2) sys.cliques.push_back(comp);
    }
    return finish(std::move(sys), "disconnected");
  }

  if (is_2_closed(gT)) {
    nlohmann::json audit;
    CliqueSystem sys = cover_2closed(gT, budget, report ? &audit : nullptr);
    if (report) (*report)["cover_audit"] = std::move(audit);
    return finish(std::move(sys), "2closed");
  }

  std::pair<int, int> failing;
  if (is_tutte_connected(gT, budget, &failing))
    throw InputError(
        "input is Tutte-connected but not complete; not a Tutte-closure");

  std::vector<int> branch_vertices;
  for (int x = 0; x < gT.order(); ++x) {
    VertexSet nb(gT.neighbors(x));
    if (!is_complete_within(gT, nb) && is_k_connected_within(gT, nb, 2))
      branch_vertices.push_back(x);
  }
  if (branch_vertices.size() != 1)
    throw CounterexampleError(
        "expected exactly one vertex with a non-complete 2-connected "
        "neighborhood",
        {{"graph6", write_graph6(gT)}, {"vertices", branch_vertices}});

  CliqueSystem sys = cover_with_completable_vertex(
      gT, branch_vertices.front(), failing.first, failing.second, budget,
      report);
  if (report) (*report)["mode"] = "claims";
  return sys;
}

}  // namespace tutte
