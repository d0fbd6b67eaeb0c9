#include <doctest.h>

#include <vector>

#include "dompoly/oracle.hpp"
#include "dompoly/solver.hpp"
#include "dompoly/verify.hpp"

using namespace dompoly;

namespace {

Polynomial solve(const Graph& g, Strategy strategy,
                 SplitMode mode = SplitMode::kArticulationQ) {
  SolverOptions options;
  options.strategy = strategy;
  options.split_mode = mode;
  Solver solver(options);
  return solver.compute(g);
}

const std::vector<Strategy> kAllStrategies = {Strategy::kAuto, Strategy::kBrute,
                                              Strategy::kVertex, Strategy::kEdge,
                                              Strategy::kSplit};

}  // namespace

TEST_CASE("every strategy handles the degenerate graphs") {
  for (Strategy s : kAllStrategies) {
    CHECK(solve(Graph(), s) == Polynomial(1));
    CHECK(solve(Graph::complete(1), s) == Polynomial::x());
    CHECK(solve(Graph::edgeless(3), s) == Polynomial{0, 0, 0, 1});
    CHECK(solve(Graph::complete(3), s) == Polynomial{0, 3, 3, 1});
  }
}

TEST_CASE("every strategy matches enumeration on all labeled graphs up to order 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : verify::all_labeled_graphs(n)) {
      const Polynomial expected = oracle::brute_force(g);
      for (Strategy s : kAllStrategies) {
        CAPTURE(verify::describe(g));
        CHECK(solve(g, s) == expected);
      }
    }
  }
}

TEST_CASE("every strategy matches enumeration on sampled graphs of order 5") {
  const auto graphs = verify::all_labeled_graphs(5);
  for (size_t mask = 0; mask < graphs.size(); mask += 16) {
    const Graph& g = graphs[mask];
    const Polynomial expected = oracle::brute_force(g);
    for (Strategy s : kAllStrategies) {
      CAPTURE(verify::describe(g));
      CHECK(solve(g, s) == expected);
    }
  }
}

TEST_CASE("both general split modes agree with enumeration") {
  const std::vector<Graph> graphs = {
      Graph::path(6), Graph::cycle(6),
      verify::random_graph(7, 42, 350), verify::random_graph(8, 43, 500),
      verify::block_chain(2, 4)};
  for (const Graph& g : graphs) {
    const Polynomial expected = oracle::brute_force(g);
    CHECK(solve(g, Strategy::kSplit, SplitMode::kArticulationQ) == expected);
    CHECK(solve(g, Strategy::kSplit, SplitMode::kGeneralQ) == expected);
    CHECK(solve(g, Strategy::kSplit, SplitMode::kGeneralDecorated) == expected);
  }
}

TEST_CASE("the automatic strategy works without the oracle shortcut") {
  SolverOptions options;
  options.oracle_cutoff = 0;
  for (const Graph& g : verify::all_labeled_graphs(4)) {
    Solver solver(options);
    CAPTURE(verify::describe(g));
    CHECK(solver.compute(g) == oracle::brute_force(g));
  }
}

TEST_CASE("random graphs beyond the labeled sweep agree across strategies") {
  for (int i = 0; i < 4; ++i) {
    const Graph g = verify::random_graph(6 + i, 100 + static_cast<std::uint64_t>(i), 400);
    const Polynomial expected = oracle::brute_force(g);
    CHECK(solve(g, Strategy::kAuto) == expected);
    CHECK(solve(g, Strategy::kVertex) == expected);
    CHECK(solve(g, Strategy::kSplit) == expected);
  }
}

TEST_CASE("a long path and glued cliques compute exactly") {
  const Graph p10 = Graph::path(10);
  CHECK(solve(p10, Strategy::kAuto) == oracle::brute_force(p10));

  // Two copies of K8 sharing vertex 7.
  Graph glued = Graph::with_vertices((VertexSet{1} << 15) - 1);
  for (int u = 0; u < 8; ++u)
    for (int v = u + 1; v < 8; ++v) glued.add_edge(u, v);
  for (int u = 7; u < 15; ++u)
    for (int v = u + 1; v < 15; ++v) glued.add_edge(u, v);
  const Polynomial expected = oracle::brute_force(glued);
  CHECK(solve(glued, Strategy::kAuto) == expected);
  CHECK(solve(glued, Strategy::kSplit) == expected);
  CHECK(solve(glued, Strategy::kSplit, SplitMode::kGeneralDecorated) == expected);
}

TEST_CASE("the p values match their enumeration") {
  Solver solver;
  for (const Graph& g : verify::all_labeled_graphs(4)) {
    vs_for_each(g.vertices(), [&](Vertex u) {
      CAPTURE(verify::describe(g));
      CHECK(solver.p(g, u) == oracle::brute_force_p(g, u));
    });
  }
}

TEST_CASE("conditioned polynomials match their enumeration") {
  Solver solver;
  for (const Graph& g : verify::all_labeled_graphs(3)) {
    CHECK(solver.conditioned(g, Condition::none()) == oracle::brute_force(g));
    CHECK(solver.conditioned(g, Condition::non_empty()) ==
          oracle::brute_force_conditioned(g, Condition::non_empty()));
    vs_for_each(g.vertices(), [&](Vertex u) {
      for (auto make : {Condition::contains, Condition::excludes, Condition::not_dominated}) {
        const Condition c = make(u);
        CHECK(solver.conditioned(g, c) == oracle::brute_force_conditioned(g, c));
      }
      vs_for_each(g.vertices(), [&](Vertex v) {
        const Condition c = Condition::exact_one_neighbor(u, v);
        CHECK(solver.conditioned(g, c) == oracle::brute_force_conditioned(g, c));
      });
    });
  }
}

TEST_CASE("the evaluator closes over the solver") {
  Solver solver;
  const Evaluator ev = solver.evaluator();
  const Graph g = Graph::path(5);
  CHECK(ev.dom(g) == oracle::brute_force(g));
  CHECK(ev.p(g, 2) == oracle::brute_force_p(g, 2));
}

TEST_CASE("repeated structure is memoized") {
  const Graph chain = verify::block_chain(3);
  SolverOptions options;
  options.strategy = Strategy::kAuto;
  Solver solver(options);
  const Polynomial d = solver.compute(chain);
  CHECK(d == oracle::brute_force(chain));
  CHECK(solver.stats().memo_hits > 0);
  // Recomputation is a pure cache hit and stays identical.
  CHECK(solver.compute(chain) == d);
}

TEST_CASE("strategies are deterministic across solver instances") {
  const Graph g = verify::random_graph(9, 7, 500);
  const Polynomial first = solve(g, Strategy::kAuto);
  const Polynomial second = solve(g, Strategy::kAuto);
  CHECK(first == second);
  CHECK(first == oracle::brute_force(g));
}
