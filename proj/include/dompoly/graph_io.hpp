#pragma once

#include <istream>
#include <string>

#include "dompoly/graph.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly {

// Reads a graph from a stream, auto-detecting the format.
//
// Plain format: '#' starts a comment (whole line or trailing); the first
// data line is "n m" with 0 <= n <= 63; exactly m further data lines follow,
// each "u v" with 0-indexed endpoints.
//
// DIMACS format (detected when the first data line starts with 'c' or 'p'):
// 'c' lines are comments, a single "p <fmt> n m" line gives the sizes, and m
// lines "e u v" list 1-indexed edges.
//
// Both formats reject self-loops, repeated edges in either orientation,
// endpoints out of range, and edge counts that disagree with the header.
// All failures throw std::runtime_error with a line-numbered message.
Graph parse_graph(std::istream& in);

// Opens and parses the file at `path`; throws std::runtime_error when the
// file cannot be read.
Graph parse_graph_file(const std::string& path);

// Renders a polynomial as text in ascending order, e.g. "x + 3*x^2 + x^3".
std::string render_text(const Polynomial& p);

// Renders {"coefficients":["0","1",...],"n":N} with the coefficient list
// padded to n + 1 decimal strings.
std::string render_json(int n, const Polynomial& p);

}  // namespace dompoly
