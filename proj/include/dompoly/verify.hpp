#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dompoly/evaluator.hpp"
#include "dompoly/graph.hpp"

namespace dompoly::verify {

// Evaluator backed by direct subset enumeration, independent of the solver.
Evaluator oracle_evaluator();

// Identifiers of the identity families checked by the suite, in report
// order.  These names are part of the command-line contract.
const std::vector<std::string>& check_ids();

struct CheckReport {
  struct Entry {
    std::string id;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> failure_notes;  // first few failing contexts
  };

  CheckReport();

  Entry& entry(const std::string& id);
  void record(const std::string& id, bool ok, const std::string& context);
  bool all_passed() const;
  std::uint64_t total_checks() const;
  std::uint64_t total_failures() const;

  std::vector<Entry> entries;  // one per id, in check_ids() order
};

// Runs every applicable identity on g against direct enumeration and
// accumulates the outcomes into `report`:
//   t:red            vertex recurrence, in/out split, in-part difference
//   arbitrary_rec    edge recurrence, unique-neighbor difference lemma
//   c:nbr            closed-neighborhood containment (both variants)
//   c:not            open twins
//   e:wnot           open-neighborhood containment
//   clearing         neighborhood-edge clearing
//   path5            degree-2 five-vertex path segments
//   irrelevant       edge-irrelevance characterization (both directions)
//   corona           corona closed form against small attachments
//   articulation-Q   cut-vertex gluing via state vectors
//   articulation-Dinv  cut-vertex gluing via decorated-graph vectors
//   one-conn         cut-vertex closed recurrence
//   split-Q          separator gluing (|X| <= 2, all bipartitions)
//   split-Dinv       the same splittings through the inverse matrix
//   edge-split       nine-term single-edge gluing identity
//   der-i            derivative identity for every order
//   reconstruct      reconstruction from the deletion-contraction sum
void run_identity_suite(const Graph& g, CheckReport& report);

// All 2^C(n,2) labeled graphs on vertices 0..n-1, ascending edge-mask order.
std::vector<Graph> all_labeled_graphs(int n);

// Deterministic pseudo-random graph: pairs (u, v), u < v, in lexicographic
// order each get an edge when mt19937_64(seed)() % 1000 < p_mille.
Graph random_graph(int n, std::uint64_t seed, int p_mille);

// The fixed 200-graph randomized corpus: index i in [0, 200) yields
// n = 6 + (i % 4), seed = 1000 + i, p_mille cycling 200/350/500/750 with
// period 16 so that every (n, density) combination occurs.
std::vector<Graph> random_suite();

// All labeled graphs with n <= min(max_n, 5), followed by the members of the
// randomized corpus with order <= max_n.  Requires 0 <= max_n <= 9.
std::vector<Graph> corpus_graphs(int max_n);

// A chain of `blocks` complete graphs of order `block_order` glued at
// shared cut vertices: block i is a clique on the contiguous id range
// [i*(block_order-1), i*(block_order-1) + block_order).
Graph block_chain(int blocks, int block_order = 6);

// Short description of a graph for failure messages.
std::string describe(const Graph& g);

}  // namespace dompoly::verify
