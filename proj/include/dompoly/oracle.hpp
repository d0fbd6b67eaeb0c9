// Brute-force reference implementations.
//
// Every quantity the engine computes by recurrence is also computable by
// direct enumeration of all 2^n vertex subsets.  These oracles are the
// ground truth the rest of the project is validated against, so they are
// written for obviousness, not speed: one loop over subset masks, one
// explicit predicate per condition.  They refuse graphs with more than 25
// vertices (2^25 subsets) to keep accidental misuse from hanging a test.
#pragma once

#include "dompoly/condition.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly {
namespace oracle {

inline constexpr int kMaxOrder = 25;

// The domination polynomial: sum of x^|W| over subsets W with N[W] = V.
Polynomial brute_force(const Graph& g);

// Conditioned sums; see condition.hpp for the exact predicates.
Polynomial brute_force_conditioned(const Graph& g, const Condition& condition);

// Sum of x^|W| over W avoiding N[u] with N[W] covering V - {u}; equals
// brute_force_conditioned(g, not_dominated(u)).
Polynomial brute_force_p(const Graph& g, Vertex u);

// Sum of x^|W| over W with u not in W, v in W, v the unique W-neighbor of u
// and N[W] covering V - {u}; equals the exact_one_neighbor condition.
Polynomial brute_force_puv(const Graph& g, Vertex u, Vertex v);

// Interface-state polynomial for a vertex subset X: counts W (weighted by
// x^|W - X|) with W intersecting X exactly in A, N[W] intersecting X exactly
// in B, and N[W] covering all of V - X.  Requires A <= B <= X.
Polynomial brute_force_state(const Graph& g, VertexSet x, VertexSet a, VertexSet b);

}  // namespace oracle
}  // namespace dompoly
