// Acceptance gate: runs every release criterion end to end and prints one
// [PASS]/[FAIL] line per criterion.  Exit status is the number of failures.
//
// Usage: acceptance [--fixtures DIR]
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "dompoly/fixtures.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/matrix.hpp"
#include "dompoly/oracle.hpp"
#include "dompoly/polynomial.hpp"
#include "dompoly/rational_function.hpp"
#include "dompoly/reductions.hpp"
#include "dompoly/solver.hpp"
#include "dompoly/splitting.hpp"
#include "dompoly/verify.hpp"

using namespace dompoly;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& note) {
    if (condition) return;
    ok = false;
    if (detail.size() < 600) {
      if (!detail.empty()) detail += "; ";
      detail += note;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const Polynomial kX = Polynomial::x();
const Polynomial kOnePlusX{1, 1};

// ---------------------------------------------------------------- criterion 1
Outcome known_values() {
  Outcome out;
  Solver solver;
  const std::vector<std::pair<Graph, Polynomial>> cases = {
      {Graph::complete(1), kX},
      {Graph::complete(2), Polynomial{0, 2, 1}},
      {Graph::complete(3), Polynomial{0, 3, 3, 1}},
      {Graph::path(0), Polynomial(1)},
      {Graph::path(1), kX},
      {Graph::path(2), Polynomial{0, 2, 1}},
      {Graph::path(3), Polynomial{0, 1, 3, 1}},
      {Graph::path(4), Polynomial{0, 0, 4, 4, 1}},
  };
  for (const auto& [g, expected] : cases) {
    out.expect(oracle::brute_force(g) == expected,
               "enumeration disagrees on " + verify::describe(g));
    out.expect(solver.compute(g) == expected, "solver disagrees on " + verify::describe(g));
  }
  return out;
}

// ---------------------------------------------------------------- criterion 2
Outcome fixture_files(const std::string& dir) {
  Outcome out;
  const fixtures::CheckResult result = fixtures::check_directory(dir);
  for (const std::string& message : result.messages) {
    out.expect(result.ok, message);
  }
  out.expect(result.ok, "fixture directory: " + dir);
  return out;
}

// ------------------------------------------------------------ criteria 3 / 4
Outcome identity_sweep(const std::vector<Graph>& graphs, std::uint64_t expected_count) {
  Outcome out;
  out.expect(graphs.size() == expected_count,
             "corpus has " + std::to_string(graphs.size()) + " graphs, expected " +
                 std::to_string(expected_count));
  verify::CheckReport report;
  for (const Graph& g : graphs) verify::run_identity_suite(g, report);
  for (const auto& entry : report.entries) {
    if (entry.failures == 0) continue;
    std::string note = entry.id + ": " + std::to_string(entry.failures) + " of " +
                       std::to_string(entry.checks) + " checks failed";
    if (!entry.failure_notes.empty()) note += " (" + entry.failure_notes.front() + ")";
    out.expect(false, note);
  }
  out.expect(report.total_checks() > 0, "suite ran no checks");
  return out;
}

// ---------------------------------------------------------------- criterion 5
Outcome weight_vector() {
  Outcome out;
  const Evaluator ev = verify::oracle_evaluator();
  const std::vector<RationalFunction> weights = splitting::edge_gluing_weights(ev);
  out.expect(weights.size() == 9, "expected 9 weights");

  const Polynomial denom = kOnePlusX * kOnePlusX;
  // Weights in canonical pair-state order, as used by the nine-term formula.
  const std::vector<Polynomial> canonical = {
      Polynomial{0, -2},    kX * kOnePlusX, Polynomial{1, -1}, kX * kOnePlusX,
      denom,                -kOnePlusX,     Polynomial{1, -1}, -kOnePlusX,
      Polynomial(2)};
  for (size_t i = 0; i < canonical.size() && i < weights.size(); ++i) {
    out.expect(weights[i] == RationalFunction(canonical[i], denom),
               "weight " + std::to_string(i) + " is " + weights[i].to_string());
  }

  // The published tuple lists the same nine weights with two pairs of state
  // labels interchanged; as a multiset it must coincide exactly.
  const std::vector<Polynomial> published = {
      denom,             kX * kOnePlusX, -kOnePlusX, kX * kOnePlusX, Polynomial{0, -2},
      Polynomial{1, -1}, -kOnePlusX,     Polynomial{1, -1}, Polynomial(2)};
  std::vector<RationalFunction> pool = weights;
  for (const Polynomial& entry : published) {
    const RationalFunction value(entry, denom);
    auto it = std::find(pool.begin(), pool.end(), value);
    out.expect(it != pool.end(), "published weight " + value.to_string() + " not produced");
    if (it != pool.end()) pool.erase(it);
  }
  out.expect(pool.empty(), "computed weights left over after matching");

  // The weights really are the inverse interface matrix applied to the
  // decorated vector of a single edge.
  const std::vector<RationalFunction> direct =
      splitting::d_matrix_inverse(0b11) *
      to_rational(splitting::d_vector_general(Graph::complete(2), 0b11, ev));
  out.expect(direct == weights, "direct matrix product disagrees");
  return out;
}

// ---------------------------------------------------------------- criterion 6
Outcome corona_sweep() {
  Outcome out;
  const Evaluator ev = verify::oracle_evaluator();
  std::uint64_t pairs = 0;
  for (int ng = 1; ng <= 5; ++ng) {
    for (int nh = 1; nh <= 5; ++nh) {
      if (ng * (1 + nh) > 12) continue;
      const auto gs = verify::all_labeled_graphs(ng);
      const auto hs = verify::all_labeled_graphs(nh);
      for (const Graph& g : gs) {
        for (const Graph& h : hs) {
          ++pairs;
          const Graph product = corona(g, h);
          if (reductions::corona_formula(g, h, ev) != oracle::brute_force(product)) {
            out.expect(false, "corona mismatch for G=" + verify::describe(g) +
                                  " H=" + verify::describe(h));
          }
        }
      }
    }
  }
  out.expect(pairs > 4000, "only " + std::to_string(pairs) + " pairs enumerated");
  return out;
}

// ---------------------------------------------------------------- criterion 7
bool same_graph_type(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         oracle::brute_force(a) == oracle::brute_force(b);
}

Outcome impossibility_tables() {
  Outcome out;
  const Graph null_graph;
  const Graph k1 = Graph::complete(1);
  const Graph k2 = Graph::complete(2);
  const Graph two_k1 = Graph::edgeless(2);
  const Graph p3 = Graph::path(3);

  struct VertexRow {
    Graph g;
    Vertex v;
    std::array<Graph, 4> shapes;       // G-v, G/v, G-N[v], G/N(v)
    std::array<Polynomial, 4> values;  // their polynomials
    Polynomial d;                      // D(G)
  };
  const std::vector<VertexRow> vertex_rows = {
      {k1, 0, {null_graph, null_graph, null_graph, k1},
       {Polynomial(1), Polynomial(1), Polynomial(1), kX}, kX},
      {k2, 0, {k1, k1, null_graph, k1},
       {kX, kX, Polynomial(1), kX}, Polynomial{0, 2, 1}},
      {Graph::complete(3), 0, {k2, k2, null_graph, k1},
       {Polynomial{0, 2, 1}, Polynomial{0, 2, 1}, Polynomial(1), kX}, Polynomial{0, 3, 3, 1}},
      {p3, 0, {k2, k2, k1, k2},
       {Polynomial{0, 2, 1}, Polynomial{0, 2, 1}, kX, Polynomial{0, 2, 1}},
       Polynomial{0, 1, 3, 1}},
      {p3, 1, {two_k1, k2, null_graph, k1},
       {Polynomial{0, 0, 1}, Polynomial{0, 2, 1}, Polynomial(1), kX}, Polynomial{0, 1, 3, 1}},
  };

  RationalMatrix vertex_system(5, 4);
  RationalMatrix vertex_augmented(5, 5);
  for (size_t r = 0; r < vertex_rows.size(); ++r) {
    const VertexRow& row = vertex_rows[r];
    const std::array<Graph, 4> results = {
        row.g.remove_vertex(row.v), row.g.contract_vertex(row.v),
        row.g.remove_closed_neighborhood(row.v), row.g.contract_open_neighborhood(row.v)};
    for (size_t c = 0; c < 4; ++c) {
      out.expect(same_graph_type(results[c], row.shapes[c]),
                 "vertex table row " + std::to_string(r + 1) + " operation " +
                     std::to_string(c + 1) + " has the wrong shape");
      const Polynomial value = oracle::brute_force(results[c]);
      out.expect(value == row.values[c],
                 "vertex table row " + std::to_string(r + 1) + " operation " +
                     std::to_string(c + 1) + " is " + value.to_string());
      vertex_system.at(r, c) = RationalFunction(value);
      vertex_augmented.at(r, c) = RationalFunction(value);
    }
    out.expect(oracle::brute_force(row.g) == row.d,
               "vertex table row " + std::to_string(r + 1) + " polynomial");
    vertex_augmented.at(r, 4) = RationalFunction(row.d);
  }
  out.expect(rank(vertex_system) < rank(vertex_augmented),
             "vertex-elimination system is unexpectedly consistent");

  // The first three rows alone already rule a linear recurrence out.
  RationalMatrix head_system(3, 4);
  RationalMatrix head_augmented(3, 5);
  for (size_t r = 0; r < 3; ++r) {
    for (size_t c = 0; c < 4; ++c) {
      head_system.at(r, c) = vertex_system.at(r, c);
      head_augmented.at(r, c) = vertex_augmented.at(r, c);
    }
    head_augmented.at(r, 4) = vertex_augmented.at(r, 4);
  }
  out.expect(rank(head_system) < rank(head_augmented),
             "three-row vertex system is unexpectedly consistent");

  struct EdgeRow {
    Graph g;
    Vertex u, v;
    std::array<Graph, 3> shapes;       // G-e, G/e, G†e
    std::array<Polynomial, 3> values;
    Polynomial d;
  };
  const Graph two_k2 = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  const Graph k1_k2 = Graph::from_edge_list(3, {{1, 2}});
  const std::vector<EdgeRow> edge_rows = {
      {k2, 0, 1, {two_k1, k1, null_graph},
       {Polynomial{0, 0, 1}, kX, Polynomial(1)}, Polynomial{0, 2, 1}},
      {p3, 0, 1, {k1_k2, k2, k1},
       {Polynomial{0, 0, 2, 1}, Polynomial{0, 2, 1}, kX}, Polynomial{0, 1, 3, 1}},
      {Graph::complete(3), 0, 1, {p3, k2, k1},
       {Polynomial{0, 1, 3, 1}, Polynomial{0, 2, 1}, kX}, Polynomial{0, 3, 3, 1}},
      {Graph::path(4), 1, 2, {two_k2, p3, two_k1},
       {Polynomial{0, 0, 4, 4, 1}, Polynomial{0, 1, 3, 1}, Polynomial{0, 0, 1}},
       Polynomial{0, 0, 4, 4, 1}},
  };

  RationalMatrix edge_system(4, 3);
  RationalMatrix edge_augmented(4, 4);
  for (size_t r = 0; r < edge_rows.size(); ++r) {
    const EdgeRow& row = edge_rows[r];
    const std::array<Graph, 3> results = {row.g.remove_edge(row.u, row.v),
                                          row.g.contract_edge(row.u, row.v),
                                          row.g.remove_endpoints(row.u, row.v)};
    for (size_t c = 0; c < 3; ++c) {
      out.expect(same_graph_type(results[c], row.shapes[c]),
                 "edge table row " + std::to_string(r + 1) + " operation " +
                     std::to_string(c + 1) + " has the wrong shape");
      const Polynomial value = oracle::brute_force(results[c]);
      out.expect(value == row.values[c],
                 "edge table row " + std::to_string(r + 1) + " operation " +
                     std::to_string(c + 1) + " is " + value.to_string());
      edge_system.at(r, c) = RationalFunction(value);
      edge_augmented.at(r, c) = RationalFunction(value);
    }
    out.expect(oracle::brute_force(row.g) == row.d,
               "edge table row " + std::to_string(r + 1) + " polynomial");
    edge_augmented.at(r, 3) = RationalFunction(row.d);
  }
  out.expect(rank(edge_system) < rank(edge_augmented),
             "edge-elimination system is unexpectedly consistent");
  return out;
}

// ---------------------------------------------------------------- criterion 8
Outcome scalability() {
  Outcome out;
  const Graph chain = verify::block_chain(10);
  out.expect(chain.order() == 51, "chain has the wrong order");

  Solver solver;  // automatic strategy
  const auto start = std::chrono::steady_clock::now();
  const Polynomial d = solver.compute(chain);
  const double elapsed = seconds_since(start);
  out.expect(elapsed < 10.0,
             "automatic solve took " + std::to_string(elapsed) + " s (budget 10 s)");

  out.expect(d.degree() == 51, "degree is " + std::to_string(d.degree()));
  out.expect(d.leading() == BigInt(1), "polynomial is not monic");
  out.expect(d.coeff(0) == BigInt(0), "constant term is nonzero");

  SolverOptions articulation;
  articulation.strategy = Strategy::kSplit;
  articulation.split_mode = SplitMode::kArticulationQ;
  Solver articulation_solver(articulation);
  out.expect(articulation_solver.compute(chain) == d,
             "articulation-split strategy disagrees");

  SolverOptions general;
  general.strategy = Strategy::kSplit;
  general.split_mode = SplitMode::kGeneralQ;
  Solver general_solver(general);
  out.expect(general_solver.compute(chain) == d, "general-split strategy disagrees");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string fixtures_dir = "fixtures";
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--fixtures" && i + 1 < argc) {
      fixtures_dir = argv[++i];
    } else {
      std::fprintf(stderr, "usage: acceptance [--fixtures DIR]\n");
      return 64;
    }
  }

  int failures = 0;
  auto report = [&](int index, const char* label, double budget, const Outcome& outcome,
                    double elapsed) {
    bool ok = outcome.ok && (budget <= 0.0 || elapsed < budget);
    std::string note = outcome.detail;
    if (outcome.ok && !ok) note = "over time budget";
    std::printf("[%s] criterion-%d %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", index, label,
                elapsed, note.empty() ? "" : ": ", note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  };

  auto timed = [&](int index, const char* label, double budget, auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = fn();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    report(index, label, budget, outcome, seconds_since(start));
  };

  timed(1, "closed-form values", 1.0, [] { return known_values(); });
  timed(2, "stored interface matrices", 1.0,
        [&] { return fixture_files(fixtures_dir); });
  timed(3, "exhaustive identity sweep n<=5", 300.0,
        [] { return identity_sweep(verify::corpus_graphs(5), 1100); });
  timed(4, "randomized identity sweep 6<=n<=9", 600.0,
        [] { return identity_sweep(verify::random_suite(), 200); });
  timed(5, "edge gluing weight vector", 0.0, [] { return weight_vector(); });
  timed(6, "corona closed form", 0.0, [] { return corona_sweep(); });
  timed(7, "linear-recurrence impossibility tables", 0.0,
        [] { return impossibility_tables(); });
  timed(8, "block chain scalability", 0.0, [] { return scalability(); });

  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures;
}
