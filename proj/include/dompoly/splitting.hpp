// Separator-based decomposition of domination polynomials.
//
// A splitting of G is a pair of graphs that share exactly the vertices of a
// separator X (and possibly some edges inside X, each assigned to exactly
// one side) and whose union is G.  The domination polynomial of G is a
// bilinear function of per-side "state vectors" indexed by pair-states of X:
//
//   pair-state (A, B), A <= B <= X:  A = W intersect X,  B = N[W] intersect X.
//
// Per shared vertex there are three states — (not in W, dominated),
// (not in W, not dominated), (in W, dominated) — so X contributes 3^|X|
// states, and all interface matrices are Kronecker powers of fixed 3x3
// seeds.  Two equivalent bilinear forms are implemented: a direct one over
// state vectors, and one over vectors of ordinary domination polynomials of
// "decorated" graphs (pendant attached for in-W vertices, vertex deleted for
// dominated-from-outside vertices) with the inverse interface matrix in the
// middle.
#pragma once

#include <array>
#include <vector>

#include "dompoly/evaluator.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/matrix.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly {
namespace splitting {

// One pair-state of a separator.
struct PairState {
  VertexSet in_set = 0;     // A: shared vertices inside W
  VertexSet dominated = 0;  // B: shared vertices dominated by W (A <= B)

  bool operator==(const PairState&) const = default;
};

// All 3^|X| pair-states of X in canonical order: vertices are taken in
// ascending id order with the SMALLEST vertex as the fastest-cycling base-3
// digit, and each digit runs through (not in W, dominated), (not in W, not
// dominated), (in W, dominated).
std::vector<PairState> pair_states(VertexSet x);

// Two graphs overlapping exactly in `shared`, edge-disjoint, with no edge
// joining the private parts; their union is the graph being decomposed.
struct Splitting {
  Graph part1;
  Graph part2;
  VertexSet shared = 0;

  Graph merged() const;
};

// Builds a splitting of g with separator `shared`, putting `side1` (a subset
// of V - shared, with no edges to the rest of V - shared) on the first side.
// Edges inside the separator go to the first side when
// shared_edges_on_first, otherwise to the second.
Splitting make_splitting(const Graph& g, VertexSet shared, VertexSet side1,
                         bool shared_edges_on_first = true);

// Default splitting at a separator: g - shared must be disconnected; the
// first side is the component containing the smallest remaining vertex id.
Splitting split_at(const Graph& g, VertexSet shared);

// --- interface matrices ---
// Fixed 3x3 seeds for a single shared vertex (state order as above).
PolyMatrix p_singleton();
PolyMatrix q_singleton();
// d_singleton = p * q * p^T; its (i, j) entry is the domination polynomial
// of the path on max(i + j - 1, 0) vertices.
PolyMatrix d_singleton();

// Kronecker powers over the separator, ascending vertex = fastest digit.
PolyMatrix p_matrix(VertexSet x);
PolyMatrix q_matrix(VertexSet x);
PolyMatrix d_matrix(VertexSet x);
// Exact inverses (Kronecker products of the inverted seeds).
RationalMatrix d_matrix_inverse(VertexSet x);
RationalMatrix pq_matrix_inverse(VertexSet x);

// Closed form of a q_matrix entry: x^|A| when both states carry the same A
// and their dominated sets jointly cover X; zero otherwise.
Polynomial q_entry(VertexSet x, const PairState& row, const PairState& col);

// --- state vectors ---
// Single shared vertex v: (D_{v not in W}, p_v, D_{v in W} / x), computed as
//   ( D(g-v) - p_v(g),  p_v(g),  D(g-N[v]) + D(g/v) - p_v(g) ).
std::array<Polynomial, 3> u_vector(const Graph& g, Vertex v, const Evaluator& ev);

// Single shared vertex v: (D(g-v), D(g), D(g + pendant at v)).
std::array<Polynomial, 3> d_vector(const Graph& g, Vertex v, const Evaluator& ev);

// The decorated graph of a pair-state: attach a pendant to every vertex of A
// (ascending; each takes the smallest free id), then delete B - A.
Graph decorated_graph(const Graph& g, const PairState& state);

// Domination polynomials of all decorated graphs, in pair-state order.
std::vector<Polynomial> d_vector_general(const Graph& g, VertexSet x, const Evaluator& ev);

// State vector by direct enumeration (graph order capped by the oracle).
std::vector<Polynomial> state_vector_oracle(const Graph& g, VertexSet x);

// State vector recovered from the decorated-graph vector by the exact linear
// relation  d = (P Q) u;  every entry of the solution is asserted to be a
// polynomial.
std::vector<Polynomial> state_vector(const Graph& g, VertexSet x, const Evaluator& ev);

// --- gluing formulas ---
// Single shared vertex: D(G) = u1^T Q u2.
Polynomial articulation_split(const Splitting& sp, const Evaluator& ev);
// Single shared vertex: D(G) = d1^T D^{-1} d2 (result asserted polynomial).
Polynomial articulation_split_dvec(const Splitting& sp, const Evaluator& ev);
// Single shared vertex, closed recurrence without interface vectors:
//   D(G) = x*D(G/v) + D(G1-v)*D(G2-v) + x*D(G1-N[v])*D(G2-N[v])
//          - B1*B2/(1+x),
// where Bi = x*D(Gi/v) + D(Gi-v) + x*D(Gi-N[v]) - D(Gi).
Polynomial one_connection_reduction(const Splitting& sp, const Evaluator& ev);

enum class SplitFormula {
  kStateQ,            // u1^T Q_X u2 over state vectors
  kDecoratedInverse,  // d1^T D_X^{-1} d2 over decorated-graph vectors
};

// General gluing along a separator of any size (3^|X| states).  With
// kStateQ, state vectors come from u_vector for |X| = 1, from direct
// enumeration when the side fits the oracle, and from the linear relation
// otherwise.
Polynomial general_split(const Splitting& sp, const Evaluator& ev, SplitFormula formula);

// The nine-term edge identity: for an edge e = {u, v},
//   (1+x)^2 D(G) = x(1+x) [D(G-v) + D(G-u)]
//                + (1-x) [D(G-v+{u,.}) + D(G-u+{v,.})]
//                - (1+x) [D(G-e+{u,.}) + D(G-e+{v,.})]
//                + (1+x)^2 D(G-e) + 2 D(G-e+{u,.}+{v,.}) - 2x D(G-u-v).
// This is the decorated-inverse gluing of G-e with a single edge.
Polynomial edge_split(const Graph& g, Vertex u, Vertex v, const Evaluator& ev);

// The weight vector of that identity: D_X^{-1} d_X(K2) for X both endpoints
// of the K2, in pair-state order.  All denominators are (1+x)^2.
std::vector<RationalFunction> edge_gluing_weights(const Evaluator& ev);

}  // namespace splitting
}  // namespace dompoly
