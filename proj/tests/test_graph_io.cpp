#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <string>

#include "dompoly/graph_io.hpp"

using namespace dompoly;

namespace {

Graph parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string parse_error(const std::string& text) {
  try {
    parse_string(text);
  } catch (const std::runtime_error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("plain files parse with comments and blank lines") {
  const Graph g = parse_string("# a path\n\n3 2\n0 1  # trailing note\n1 2\n");
  CHECK(g.order() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("isolated vertices are implied by the header") {
  const Graph g = parse_string("4 1\n2 3\n");
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 1);
  CHECK(g.degree(0) == 0);
}

TEST_CASE("the null graph parses from a zero header") {
  const Graph g = parse_string("0 0\n");
  CHECK(g.order() == 0);
}

TEST_CASE("plain parse failures carry line numbers") {
  CHECK(parse_error("3 2\n0 1\n0 1\n").find("line 3") != std::string::npos);
  CHECK(parse_error("3 2\n0 1\n1 0\n").find("line 3") != std::string::npos);
  CHECK(parse_error("3 1\n1 1\n").find("line") != std::string::npos);   // self-loop
  CHECK(parse_error("3 1\n0 7\n").find("line 2") != std::string::npos); // out of range
  CHECK(parse_error("2 2\n0 1\n").find("declared 2") != std::string::npos);
  CHECK(parse_error("2 0\n0 1\n").find("line 2") != std::string::npos); // surplus edge
  CHECK(parse_error("64 0\n").find("exceeds 63") != std::string::npos);
  CHECK(parse_error("").find("empty input") != std::string::npos);
  CHECK(parse_error("x y\n").find("line 1") != std::string::npos);
  CHECK(parse_error("3 1\n0 1 2\n").find("trailing") != std::string::npos);
  CHECK(parse_error("-1 0\n").find("line 1") != std::string::npos);
}

TEST_CASE("dimacs files are detected and parsed one-indexed") {
  const Graph g = parse_string("c four path\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
  CHECK(g.order() == 4);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(2, 3));
  CHECK_FALSE(g.has_edge(0, 3));
}

TEST_CASE("dimacs rejects malformed structure") {
  CHECK(parse_error("p edge 2 1\ne 1 2\np edge 2 1\n").find("repeated") != std::string::npos);
  CHECK(parse_error("c graph\ne 1 2\np edge 2 1\n").find("before problem line") !=
        std::string::npos);
  CHECK(parse_error("c graph\np edge 3 2\ne 1 2\ne 2 1\n").find("line 4") != std::string::npos);
  CHECK(parse_error("p edge 2 1\ne 0 1\n").find("out of range") != std::string::npos);
  CHECK(parse_error("p edge 2 1\ne 1 3\n").find("out of range") != std::string::npos);
  CHECK(parse_error("p edge 2 1\n").find("declared 1") != std::string::npos);
  CHECK(parse_error("p edge 2 1\nq 1 2\n").find("unrecognized") != std::string::npos);
  CHECK(parse_error("c only comments\n").find("missing problem line") != std::string::npos);
}

TEST_CASE("parsing a rendered edge list round trips") {
  const Graph g = Graph::from_edge_list(5, {{0, 2}, {1, 4}, {2, 3}});
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  CHECK(parse_string(out.str()) == g);
}

TEST_CASE("file loading reports missing paths") {
  CHECK_THROWS_AS(parse_graph_file("/nonexistent/nowhere.gr"), std::runtime_error);
}

TEST_CASE("text rendering is the ascending polynomial form") {
  CHECK(render_text(Polynomial{0, 3, 3, 1}) == "3*x + 3*x^2 + x^3");
  CHECK(render_text(Polynomial(1)) == "1");
  CHECK(render_text(Polynomial()) == "0");
}

TEST_CASE("json rendering pads coefficients and uses decimal strings") {
  CHECK(render_json(3, Polynomial{0, 1, 3, 1}) ==
        R"({"coefficients":["0","1","3","1"],"n":3})");
  CHECK(render_json(2, Polynomial{0, 2}) == R"({"coefficients":["0","2","0"],"n":2})");
  CHECK(render_json(0, Polynomial(1)) == R"({"coefficients":["1"],"n":0})");
  // Coefficients beyond 64 bits stay exact.
  const Polynomial big = Polynomial{1, 1}.pow(80);
  const std::string rendered = render_json(80, big);
  CHECK(rendered.find("\"107507208733336176461620\"") != std::string::npos);
}
