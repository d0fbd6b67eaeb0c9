// Side conditions on the vertex subsets counted by a domination polynomial.
//
// The unconditioned polynomial counts subsets W of V(G) with N[W] = V(G),
// weighting each by x^|W|.  Conditioned variants restrict or relax that sum;
// they are the quantities exchanged by the vertex-elimination recurrences:
//
//   kNone            N[W] = V                                  (plain)
//   kNonEmpty        N[W] = V and W nonempty
//   kContains        N[W] = V and u in W
//   kExcludes        N[W] = V and u not in W
//   kNotDominated    W avoids N[u] entirely and N[W] covers V - {u}
//                    (u is the only vertex left undominated; in particular
//                    u itself is not in W)
//   kExactOneNeighbor
//                    u not in W, v in W, v is the only neighbor of u in W,
//                    and N[W] covers V - {u}
#pragma once

#include "dompoly/graph.hpp"

namespace dompoly {

enum class ConditionKind {
  kNone,
  kNonEmpty,
  kContains,
  kExcludes,
  kNotDominated,
  kExactOneNeighbor,
};

struct Condition {
  ConditionKind kind = ConditionKind::kNone;
  Vertex u = -1;
  Vertex v = -1;

  static Condition none() { return {}; }
  static Condition non_empty() { return {ConditionKind::kNonEmpty, -1, -1}; }
  static Condition contains(Vertex u) { return {ConditionKind::kContains, u, -1}; }
  static Condition excludes(Vertex u) { return {ConditionKind::kExcludes, u, -1}; }
  static Condition not_dominated(Vertex u) { return {ConditionKind::kNotDominated, u, -1}; }
  static Condition exact_one_neighbor(Vertex u, Vertex v) {
    return {ConditionKind::kExactOneNeighbor, u, v};
  }
};

}  // namespace dompoly
