// Exact domination-polynomial solver.
//
// The solver evaluates D(G) by recursively rewriting the graph with the
// reduction formulas, memoizing on the relabeled structure.  Five strategies
// are exposed; all produce identical polynomials:
//
//   kAuto      component factorization, small-order brute force, irrelevant
//              edge removal, local reductions (closed-neighborhood
//              containment, open twins, degree-2 path segments),
//              articulation splits, and as a last resort the universal
//              vertex recurrence.
//   kBrute     the enumeration oracle (order capped at 25).
//   kVertex    the universal vertex recurrence only (plus component
//              factorization and memoization).
//   kEdge      the universal edge recurrence only; edgeless base case x^n.
//   kSplit     separator gluing whenever an articulation or a separator of
//              size <= 3 exists; falls back to brute force / the vertex
//              recurrence when 2-connected beyond the oracle.
//
// The p-values needed by the vertex recurrence are computed by a dedicated
// memoized branch-and-prune recursion over (graph, vertices still to
// dominate, vertices barred from the set); it never consults D(G), so every
// recursion in the solver is strictly decreasing.
#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>

#include "dompoly/condition.hpp"
#include "dompoly/evaluator.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly {

enum class Strategy { kAuto, kBrute, kVertex, kEdge, kSplit };

enum class SplitMode {
  kArticulationQ,     // state-vector gluing at single shared vertices
  kGeneralQ,          // state-vector gluing via the general machinery
  kGeneralDecorated,  // decorated-graph gluing with the inverse matrix
};

struct SolverOptions {
  Strategy strategy = Strategy::kAuto;
  SplitMode split_mode = SplitMode::kArticulationQ;
  // kAuto hands graphs of at most this order to the oracle.
  int oracle_cutoff = 12;
  // kSplit searches separators up to this size when no articulation exists.
  int max_separator = 3;
  // kAuto removes irrelevant edges before anything else.
  bool remove_irrelevant_edges = true;
};

struct SolverStats {
  std::uint64_t memo_hits = 0;
  std::uint64_t memo_misses = 0;
  std::uint64_t oracle_calls = 0;
  std::uint64_t recursion_nodes = 0;
  std::uint64_t p_nodes = 0;
};

class Solver {
 public:
  explicit Solver(SolverOptions options = {});

  // The domination polynomial of g.
  Polynomial compute(const Graph& g);

  // The polynomial counting subsets of V - {u} that avoid N(u) and dominate
  // V - {u} (the correction term of the vertex recurrence).
  Polynomial p(const Graph& g, Vertex u);

  // Conditioned domination polynomials (see condition.hpp), all derived
  // from compute() and p() by exact identities.
  Polynomial conditioned(const Graph& g, const Condition& condition);

  // An Evaluator backed by this solver, for use with the reduction and
  // splitting formulas.
  Evaluator evaluator();

  const SolverOptions& options() const { return options_; }
  const SolverStats& stats() const { return stats_; }

 private:
  Polynomial compute_connected(const Graph& g);
  Polynomial auto_connected(const Graph& g);
  Polynomial vertex_connected(const Graph& g);
  Polynomial edge_connected(const Graph& g);
  Polynomial split_connected(const Graph& g);
  Polynomial split_with_mode(const Graph& g, VertexSet separator);

  // Branch-and-prune engine behind p(): sum of x^|W| over W subsets of
  // V(h) - forbidden with N[W] covering `target`.
  Polynomial partial_domination(const Graph& h, VertexSet target, VertexSet forbidden);

  Vertex max_degree_vertex(const Graph& g) const;

  SolverOptions options_;
  SolverStats stats_;
  std::mutex memo_mutex_;
  std::unordered_map<std::string, Polynomial> memo_;
  std::unordered_map<std::string, Polynomial> p_memo_;
};

}  // namespace dompoly
