// Command-line front end: graph ingestion, computation, verification
// suites, fixture regeneration, and benchmarking.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dompoly/fixtures.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/graph_io.hpp"
#include "dompoly/solver.hpp"
#include "dompoly/verify.hpp"

namespace {

using namespace dompoly;

constexpr int kVerifyFileMaxOrder = 12;

const std::map<std::string, Strategy>& strategy_names() {
  static const std::map<std::string, Strategy> names = {
      {"auto", Strategy::kAuto}, {"brute", Strategy::kBrute}, {"vertex", Strategy::kVertex},
      {"edge", Strategy::kEdge}, {"split", Strategy::kSplit},
  };
  return names;
}

int run_compute(const std::string& path, const std::string& method, const std::string& format) {
  Graph g = [&] {
    try {
      return parse_graph_file(path);
    } catch (const std::exception& e) {
      std::cerr << "error: " << path << ": " << e.what() << "\n";
      std::exit(2);
    }
  }();
  SolverOptions options;
  options.strategy = strategy_names().at(method);
  Solver solver(options);
  Polynomial d;
  try {
    d = solver.compute(g);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (format == "json") {
    std::cout << render_json(g.order(), d) << "\n";
  } else {
    std::cout << render_text(d) << "\n";
  }
  return 0;
}

int run_verify(const std::string& path, int corpus) {
  std::vector<Graph> graphs;
  if (corpus >= 0) {
    if (corpus > 9) {
      std::cerr << "error: --corpus bound must be at most 9\n";
      return 2;
    }
    graphs = verify::corpus_graphs(corpus);
  } else {
    try {
      graphs.push_back(parse_graph_file(path));
    } catch (const std::exception& e) {
      std::cerr << "error: " << path << ": " << e.what() << "\n";
      return 2;
    }
    if (graphs.back().order() > kVerifyFileMaxOrder) {
      std::cerr << "error: verification suite accepts graphs with at most "
                << kVerifyFileMaxOrder << " vertices\n";
      return 2;
    }
  }
  verify::CheckReport report;
  for (const Graph& g : graphs) verify::run_identity_suite(g, report);
  for (const auto& entry : report.entries) {
    if (entry.failures == 0) {
      std::cout << "[PASS] " << entry.id << " (" << entry.checks << " checks)\n";
    } else {
      std::cout << "[FAIL] " << entry.id << " (" << entry.checks << " checks, " << entry.failures
                << " failures)\n";
      for (const std::string& note : entry.failure_notes) std::cout << "       " << note << "\n";
    }
  }
  std::cout << graphs.size() << " graphs, " << report.total_checks() << " checks, "
            << report.total_failures() << " failures\n";
  return report.all_passed() ? 0 : 1;
}

int run_fixtures(const std::string& dir, bool write) {
  if (write) {
    fixtures::write_all(dir);
    std::cout << "wrote " << fixtures::kStateMatrixFile << " and "
              << fixtures::kScaledInverseFile << " to " << dir << "\n";
    return 0;
  }
  const fixtures::CheckResult result = fixtures::check_directory(dir);
  for (const std::string& message : result.messages) std::cout << message << "\n";
  return result.ok ? 0 : 1;
}

int run_bench(const std::string& family, int size) {
  Graph g;
  try {
    if (family == "blockchain") {
      g = verify::block_chain(size);
    } else if (family == "path") {
      g = Graph::path(size);
    } else {
      g = Graph::cycle(size);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << "family,n,method,wall_time_ms,memo_hits\n";
  for (const auto& [name, strategy] : strategy_names()) {
    // Caps keep the exponential strategies off inputs they cannot finish.
    if (strategy == Strategy::kBrute && g.order() > 22) continue;
    if (strategy == Strategy::kVertex && g.order() > 32) continue;
    if (strategy == Strategy::kEdge && g.edge_count() > 20) continue;
    SolverOptions options;
    options.strategy = strategy;
    Solver solver(options);
    const auto start = std::chrono::steady_clock::now();
    const Polynomial d = solver.compute(g);
    const auto stop = std::chrono::steady_clock::now();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    if (d.degree() != g.order()) {
      std::cerr << "error: " << name << " produced an inconsistent result\n";
      return 1;
    }
    std::cout << family << ',' << g.order() << ',' << name << ',' << ms << ','
              << solver.stats().memo_hits << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact domination polynomial toolkit"};
  app.require_subcommand(1);

  std::string compute_path;
  std::string method = "auto";
  std::string format = "text";
  CLI::App* compute = app.add_subcommand("compute", "Compute the polynomial of a graph file");
  compute->add_option("file", compute_path, "graph file (plain or DIMACS)")->required();
  compute->add_option("--method", method, "solver strategy")
      ->check(CLI::IsMember({"auto", "brute", "vertex", "edge", "split"}));
  compute->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string verify_path;
  int corpus = -1;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check identities against enumeration");
  CLI::Option* verify_file_opt =
      verify_cmd->add_option("file", verify_path, "graph file to verify");
  CLI::Option* corpus_opt =
      verify_cmd->add_option("--corpus", corpus, "run on the standard corpus up to this order")
          ->check(CLI::Range(0, 9));
  verify_file_opt->excludes(corpus_opt);
  corpus_opt->excludes(verify_file_opt);

  std::string fixtures_dir = "./fixtures";
  bool fixtures_write = false;
  CLI::App* fixtures_cmd =
      app.add_subcommand("fixtures", "Regenerate interface matrices and diff stored files");
  fixtures_cmd->add_option("--dir", fixtures_dir, "fixture directory");
  fixtures_cmd->add_flag("--write", fixtures_write, "rewrite the stored files");

  std::string family;
  int size = 0;
  CLI::App* bench = app.add_subcommand("bench", "Time every strategy on a graph family");
  bench->add_option("--family", family, "graph family")
      ->required()
      ->check(CLI::IsMember({"blockchain", "path", "cycle"}));
  bench->add_option("--size", size, "blocks for blockchain, vertices otherwise")
      ->required()
      ->check(CLI::Range(1, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*compute) return run_compute(compute_path, method, format);
    if (*verify_cmd) {
      if (corpus < 0 && verify_path.empty()) {
        std::cerr << "error: verify needs a graph file or --corpus\n";
        return 2;
      }
      return run_verify(verify_path, corpus);
    }
    if (*fixtures_cmd) return run_fixtures(fixtures_dir, fixtures_write);
    if (*bench) return run_bench(family, size);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
