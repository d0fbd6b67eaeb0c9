// Local rewriting rules for domination polynomials.
//
// Each function expresses D(G) (or a conditioned variant) through the
// polynomials of strictly simpler graphs, evaluated via the supplied
// Evaluator.  Preconditions are validated and violations raise
// std::invalid_argument; the formulas never silently produce garbage.
//
// Notation used in the comments below: D(G) is the domination polynomial;
// p_u(G) is the Evaluator::p quantity (u left undominated, W avoiding N(u));
// G/u is vertex contraction, G-u deletion, G-N[u] closed-neighborhood
// deletion.
#pragma once

#include <array>
#include <utility>

#include "dompoly/evaluator.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly {
namespace reductions {

// The universal vertex recurrence, valid for every vertex u:
//   D(G) = x*D(G/u) + D(G-u) + x*D(G-N[u]) - (1+x)*p_u(G).
Polynomial vertex_reduction(const Graph& g, Vertex u, const Evaluator& ev);

// Splits D(G) by membership of u in the counted set:
//   D_{u not in W}(G) = D(G-u) - p_u(G)
//   D_{u in W}(G)     = x*D(G-N[u]) + x*(D(G/u) - p_u(G))
// Returns {out-part, in-part}; the two add up to D(G).
std::pair<Polynomial, Polynomial> split_in_out(const Graph& g, Vertex u, const Evaluator& ev);

// The in-part through plain set difference:
//   D_{u in W}(G) = D(G) - D(G-u) + p_u(G).
Polynomial in_part_via_difference(const Graph& g, Vertex u, const Evaluator& ev);

// The universal edge recurrence for an edge e = {u, v}:
//   D(G) = D(G-e) + x/(x-1) * [ D(G-e/u) + D(G-e/v) - D(G/u) - D(G/v)
//          - D(G-N[u]) - D(G-N[v]) + D(G-e-N[u]) + D(G-e-N[v]) ]
// where neighborhoods in the G-e terms are taken in G-e.  The division by
// x-1 is exact.
Polynomial edge_reduction(const Graph& g, Vertex u, Vertex v, const Evaluator& ev);

// For an edge {u, v}: the polynomial counting sets where v is the unique
// W-neighbor of u (u undominated otherwise), obtained from two p-values:
//   p_{u,v}(G) = p_u(G-e) - p_u(G).
Polynomial unique_neighbor_part(const Graph& g, Vertex u, Vertex v, const Evaluator& ev);

// Requires N[v] <= N[u] with u != v (which forces the edge uv).  Then
// p_u(G) = 0 and the vertex recurrence loses its correction term:
//   D(G) = x*D(G/u) + D(G-u) + x*D(G-N[u]).
Polynomial closed_containment_reduction(const Graph& g, Vertex u, Vertex v, const Evaluator& ev);

// Same precondition, rearranged through the membership split at u:
//   D(G) = (1+x)*D(G-u) + x*[ D(G/u) + D(G-N[u]) - D(G-u) ].
// The first addend counts the pairs (S, S+u) over the dominating sets S
// of G-u: adding u never breaks domination, and S alone still dominates u
// because any dominator of v is adjacent to u.  The second addend counts
// the sets that dominate only while u is present.  (A shorter two-term
// form that replaces the bracket with the u-in part of G - (N[v]-{u})
// undercounts: it misses sets containing u together with a vertex of
// N[v]-{u} in which some vertex is dominated by u alone.  Smallest
// failure: the path a-u-b with v = a, where {a, u} goes missing.)
Polynomial closed_containment_alternative(const Graph& g, Vertex u, Vertex v, const Evaluator& ev);

// Same precondition.  Generating function of the dominating sets W of G
// whose intersection with N[v] is exactly {u}.  Deleting N[v]-{u} cannot
// uncover anything such a W dominates (u covers all of N[v]), so the count
// equals the u-in part of D on the reduced graph G - (N[v]-{u}).
Polynomial containment_exclusive_part(const Graph& g, Vertex u, Vertex v, const Evaluator& ev);

// Requires N(u) = N(w) with u != w (open twins; never adjacent):
//   D(G) = x*D(G/u) + D(G-u) - x*D(G-N[u]-w).
Polynomial open_twin_reduction(const Graph& g, Vertex u, Vertex w, const Evaluator& ev);

// Requires N(w) <= N(u) with u != w (never adjacent):
//   D(G) = x*D(G/u) + D(G-u) + x*D(G-N[w]) - x^2*D((G-N[w])/u) - x*D(G-N[w]-u).
Polynomial open_containment_reduction(const Graph& g, Vertex u, Vertex w, const Evaluator& ev);

// Valid for every vertex u, with T(G,u) the graph g with all edges between
// neighbors of u deleted:
//   D(G) = D(G-u) + D(T(G,u)) - D(T(G,u)-u).
Polynomial clearing_reduction(const Graph& g, Vertex u, const Evaluator& ev);

// For an induced 5-vertex path segment u-v-w-y-z whose three interior
// vertices v, w, y all have degree 2 in G:
//   D(G) = x * [ D(G/w) + D(G/w/v) + D(G/w/v/y) ].
Polynomial path_reduction(const Graph& g, const std::array<Vertex, 5>& path, const Evaluator& ev);

// Closed form for the corona product (both factors non-null):
//   D(g o h) = ( x*(1+x)^|V(h)| + D(h) )^|V(g)|.
Polynomial corona_formula(const Graph& g, const Graph& h, const Evaluator& ev);

}  // namespace reductions
}  // namespace dompoly
