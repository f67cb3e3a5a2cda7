#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tutte/graph.hpp"

namespace tutte {

bool is_valid_path(const Graph& g, std::span<const int> p);
bool is_valid_cycle(const Graph& g, std::span<const int> c);

struct TutteViolation {
  VertexSet component;
  VertexSet contacts;  // distinct path vertices adjacent to the component
};

// Every component of g - V(p) has at most min{3, |V(p)|-1} distinct
// neighbors on p.  Depends only on the vertex set of p.
bool is_tutte_path(const Graph& g, std::span<const int> p,
                   TutteViolation* violation = nullptr);

// Set-level form used by the searches.
bool is_tutte_vertex_set(const Graph& g, VertexSet s,
                         TutteViolation* violation = nullptr);

// Hamilton cycle, or >= 4 vertices and every outside component has at most
// three neighbors on the cycle.
bool is_tutte_cycle(const Graph& g, std::span<const int> c,
                    TutteViolation* violation = nullptr);

// Every (a,b)-path exactly once, in DFS order with ascending neighbor
// choice (= lexicographic order of the vertex sequences).  The visitor
// returns false to stop early.
void for_each_ab_path(const Graph& g, int a, int b, Budget& budget,
                      const std::function<bool(std::span<const int>)>& visit);

std::vector<std::vector<int>> all_ab_paths(const Graph& g, int a, int b,
                                           Budget& budget);

// Dynamic program over vertex subsets from a fixed source: for every set S
// containing a, which vertices can end a path from a that visits exactly S.
// Shared by every maximality / Tutte-connectedness decision.
class PathSetIndex {
 public:
  PathSetIndex(const Graph& g, int a, Budget& budget);

  int source() const { return a_; }
  bool has_path_with_set(int b, VertexSet s) const;
  std::vector<VertexSet> sets_to(int b) const;
  // Sets not strictly contained in another (a,b)-path set.
  std::vector<VertexSet> maximal_sets_to(int b) const;
  bool is_maximal_set(int b, VertexSet s) const;

 private:
  int n_;
  int a_;
  std::vector<std::uint64_t> end_masks_;

  std::vector<std::uint8_t> superset_closure(int b) const;
};

bool is_maximal_ab_path(const Graph& g, std::span<const int> p, Budget& budget);

// Deterministic: the first path in DFS order whose vertex set is maximal
// and satisfies the Tutte condition; absent when no maximal set does.
std::optional<std::vector<int>> find_maximal_tutte_path(const Graph& g, int a,
                                                        int b, Budget& budget);

// Every unordered pair is joined by a maximal path that is a Tutte path.
// On failure reports the lexicographically smallest failing pair.
bool is_tutte_connected(const Graph& g, Budget& budget,
                        std::pair<int, int>* failing = nullptr);

bool has_hamilton_path(const Graph& g, int a, int b, Budget& budget);
bool has_hamilton_cycle(const Graph& g, Budget& budget);
bool is_hamilton_connected(const Graph& g, Budget& budget);

}  // namespace tutte
