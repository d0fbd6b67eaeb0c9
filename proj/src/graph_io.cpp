#include "dompoly/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

namespace dompoly {

namespace {

struct Line {
  int number = 0;
  std::string text;
};

[[noreturn]] void fail(int line_number, const std::string& message) {
  std::ostringstream out;
  out << "line " << line_number << ": " << message;
  throw std::runtime_error(out.str());
}

std::string trim(const std::string& s) {
  size_t begin = 0;
  size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

// Reads one non-negative integer from the stream; fails on anything else.
long long read_number(std::istringstream& in, int line_number, const char* what) {
  std::string token;
  if (!(in >> token)) fail(line_number, std::string("missing ") + what);
  try {
    size_t used = 0;
    const long long value = std::stoll(token, &used);
    if (used != token.size() || value < 0) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    fail(line_number, std::string("invalid ") + what + " '" + token + "'");
  }
}

void require_line_end(std::istringstream& in, int line_number) {
  std::string extra;
  if (in >> extra) fail(line_number, "unexpected trailing token '" + extra + "'");
}

Graph build_graph(long long n, const std::vector<std::pair<int, int>>& edges, int header_line) {
  try {
    return Graph::from_edge_list(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    fail(header_line, e.what());
  }
}

// Rejects self-loops and repeated edges (in either orientation) as soon as
// they are read, so the error carries the offending line number.
void check_new_edge(std::set<std::pair<int, int>>& seen, long long u, long long v,
                    int line_number) {
  if (u == v) fail(line_number, "self-loop is not a simple edge");
  const std::pair<int, int> key{static_cast<int>(std::min(u, v)),
                                static_cast<int>(std::max(u, v))};
  if (!seen.insert(key).second) fail(line_number, "duplicate edge");
}

Graph parse_plain(const std::vector<Line>& lines) {
  long long n = -1;
  long long m = -1;
  int header_line = 0;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (const Line& line : lines) {
    std::string text = line.text;
    if (const size_t hash = text.find('#'); hash != std::string::npos) text.resize(hash);
    text = trim(text);
    if (text.empty()) continue;
    std::istringstream in(text);
    if (n < 0) {
      header_line = line.number;
      n = read_number(in, line.number, "vertex count");
      m = read_number(in, line.number, "edge count");
      require_line_end(in, line.number);
      if (n > kMaxVertexId) fail(line.number, "vertex count exceeds 63");
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) fail(line.number, "more edges than declared");
    const long long u = read_number(in, line.number, "edge endpoint");
    const long long v = read_number(in, line.number, "edge endpoint");
    require_line_end(in, line.number);
    if (u >= n || v >= n) fail(line.number, "edge endpoint out of range");
    check_new_edge(seen, u, v, line.number);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw std::runtime_error("empty input: expected an \"n m\" header line");
  if (static_cast<long long>(edges.size()) != m) {
    std::ostringstream out;
    out << "declared " << m << " edges but found " << edges.size();
    throw std::runtime_error(out.str());
  }
  return build_graph(n, edges, header_line);
}

Graph parse_dimacs(const std::vector<Line>& lines) {
  long long n = -1;
  long long m = -1;
  int header_line = 0;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (const Line& line : lines) {
    const std::string text = trim(line.text);
    if (text.empty()) continue;
    std::istringstream in(text);
    std::string tag;
    in >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) fail(line.number, "repeated problem line");
      std::string format;
      if (!(in >> format)) fail(line.number, "missing format name");
      header_line = line.number;
      n = read_number(in, line.number, "vertex count");
      m = read_number(in, line.number, "edge count");
      require_line_end(in, line.number);
      if (n > kMaxVertexId) fail(line.number, "vertex count exceeds 63");
      continue;
    }
    if (tag == "e") {
      if (n < 0) fail(line.number, "edge before problem line");
      if (static_cast<long long>(edges.size()) == m) fail(line.number, "more edges than declared");
      const long long u = read_number(in, line.number, "edge endpoint");
      const long long v = read_number(in, line.number, "edge endpoint");
      require_line_end(in, line.number);
      if (u < 1 || v < 1 || u > n || v > n) fail(line.number, "edge endpoint out of range");
      check_new_edge(seen, u - 1, v - 1, line.number);
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
      continue;
    }
    fail(line.number, "unrecognized line '" + text + "'");
  }
  if (n < 0) throw std::runtime_error("missing problem line");
  if (static_cast<long long>(edges.size()) != m) {
    std::ostringstream out;
    out << "declared " << m << " edges but found " << edges.size();
    throw std::runtime_error(out.str());
  }
  return build_graph(n, edges, header_line);
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    lines.push_back({number, raw});
  }
  for (const Line& line : lines) {
    const std::string text = trim(line.text);
    if (text.empty() || text[0] == '#') continue;
    if (text[0] == 'c' || text[0] == 'p') return parse_dimacs(lines);
    return parse_plain(lines);
  }
  return parse_plain(lines);
}

Graph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return parse_graph(in);
}

std::string render_text(const Polynomial& p) { return p.to_string(); }

std::string render_json(int n, const Polynomial& p) {
  const size_t count = static_cast<size_t>(std::max(n, p.degree())) + 1;
  std::vector<std::string> coefficients(count, "0");
  for (int i = 0; i <= p.degree(); ++i) {
    coefficients[static_cast<size_t>(i)] = p.coeff(i).str();
  }
  nlohmann::json out;
  out["coefficients"] = coefficients;
  out["n"] = n;
  return out.dump();
}

}  // namespace dompoly
