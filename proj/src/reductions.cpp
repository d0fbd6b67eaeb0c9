#include "dompoly/reductions.hpp"

#include <stdexcept>

namespace dompoly {
namespace reductions {

namespace {

const Polynomial kX = Polynomial::x();
const Polynomial kOnePlusX{1, 1};
const Polynomial kXMinusOne{-1, 1};

void require_vertex(const Graph& g, Vertex v, const char* what) {
  if (!g.has_vertex(v)) throw std::invalid_argument(std::string(what) + ": no such vertex");
}

void require_closed_containment(const Graph& g, Vertex u, Vertex v, const char* what) {
  require_vertex(g, u, what);
  require_vertex(g, v, what);
  if (u == v) throw std::invalid_argument(std::string(what) + ": vertices must differ");
  if ((g.closed_neighborhood(v) & ~g.closed_neighborhood(u)) != 0) {
    throw std::invalid_argument(std::string(what) + ": requires N[v] <= N[u]");
  }
}

}  // namespace

Polynomial vertex_reduction(const Graph& g, Vertex u, const Evaluator& ev) {
  require_vertex(g, u, "vertex_reduction");
  return kX * ev.dom(g.contract_vertex(u)) + ev.dom(g.remove_vertex(u)) +
         kX * ev.dom(g.remove_closed_neighborhood(u)) - kOnePlusX * ev.p(g, u);
}

std::pair<Polynomial, Polynomial> split_in_out(const Graph& g, Vertex u, const Evaluator& ev) {
  require_vertex(g, u, "split_in_out");
  const Polynomial pu = ev.p(g, u);
  Polynomial out_part = ev.dom(g.remove_vertex(u)) - pu;
  Polynomial in_part =
      kX * ev.dom(g.remove_closed_neighborhood(u)) + kX * (ev.dom(g.contract_vertex(u)) - pu);
  return {std::move(out_part), std::move(in_part)};
}

Polynomial in_part_via_difference(const Graph& g, Vertex u, const Evaluator& ev) {
  require_vertex(g, u, "in_part_via_difference");
  return ev.dom(g) - ev.dom(g.remove_vertex(u)) + ev.p(g, u);
}

Polynomial edge_reduction(const Graph& g, Vertex u, Vertex v, const Evaluator& ev) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("edge_reduction: no such edge");
  const Graph ge = g.remove_edge(u, v);
  Polynomial bracket = ev.dom(ge.contract_vertex(u)) + ev.dom(ge.contract_vertex(v)) -
                       ev.dom(g.contract_vertex(u)) - ev.dom(g.contract_vertex(v)) -
                       ev.dom(g.remove_closed_neighborhood(u)) -
                       ev.dom(g.remove_closed_neighborhood(v)) +
                       ev.dom(ge.remove_closed_neighborhood(u)) +
                       ev.dom(ge.remove_closed_neighborhood(v));
  return ev.dom(ge) + divide_exact(kX * bracket, kXMinusOne);
}

Polynomial unique_neighbor_part(const Graph& g, Vertex u, Vertex v, const Evaluator& ev) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("unique_neighbor_part: no such edge");
  return ev.p(g.remove_edge(u, v), u) - ev.p(g, u);
}

Polynomial closed_containment_reduction(const Graph& g, Vertex u, Vertex v, const Evaluator& ev) {
  require_closed_containment(g, u, v, "closed_containment_reduction");
  return kX * ev.dom(g.contract_vertex(u)) + ev.dom(g.remove_vertex(u)) +
         kX * ev.dom(g.remove_closed_neighborhood(u));
}

Polynomial closed_containment_alternative(const Graph& g, Vertex u, Vertex v, const Evaluator& ev) {
  require_closed_containment(g, u, v, "closed_containment_alternative");
  const Polynomial without_u = ev.dom(g.remove_vertex(u));
  return kOnePlusX * without_u +
         kX * (ev.dom(g.contract_vertex(u)) + ev.dom(g.remove_closed_neighborhood(u)) - without_u);
}

Polynomial containment_exclusive_part(const Graph& g, Vertex u, Vertex v, const Evaluator& ev) {
  require_closed_containment(g, u, v, "containment_exclusive_part");
  const Graph shrunk = g.remove_vertices(g.closed_neighborhood(v) & ~vs_single(u));
  return split_in_out(shrunk, u, ev).second;
}

Polynomial open_twin_reduction(const Graph& g, Vertex u, Vertex w, const Evaluator& ev) {
  require_vertex(g, u, "open_twin_reduction");
  require_vertex(g, w, "open_twin_reduction");
  if (u == w) throw std::invalid_argument("open_twin_reduction: vertices must differ");
  if (g.open_neighborhood(u) != g.open_neighborhood(w)) {
    throw std::invalid_argument("open_twin_reduction: requires N(u) = N(w)");
  }
  return kX * ev.dom(g.contract_vertex(u)) + ev.dom(g.remove_vertex(u)) -
         kX * ev.dom(g.remove_closed_neighborhood(u).remove_vertex(w));
}

Polynomial open_containment_reduction(const Graph& g, Vertex u, Vertex w, const Evaluator& ev) {
  require_vertex(g, u, "open_containment_reduction");
  require_vertex(g, w, "open_containment_reduction");
  if (u == w) throw std::invalid_argument("open_containment_reduction: vertices must differ");
  if ((g.open_neighborhood(w) & ~g.open_neighborhood(u)) != 0) {
    throw std::invalid_argument("open_containment_reduction: requires N(w) <= N(u)");
  }
  const Graph without_nw = g.remove_closed_neighborhood(w);
  return kX * ev.dom(g.contract_vertex(u)) + ev.dom(g.remove_vertex(u)) +
         kX * ev.dom(without_nw) - kX * kX * ev.dom(without_nw.contract_vertex(u)) -
         kX * ev.dom(without_nw.remove_vertex(u));
}

Polynomial clearing_reduction(const Graph& g, Vertex u, const Evaluator& ev) {
  require_vertex(g, u, "clearing_reduction");
  const Graph cleared = g.clear_neighborhood_edges(u);
  return ev.dom(g.remove_vertex(u)) + ev.dom(cleared) - ev.dom(cleared.remove_vertex(u));
}

Polynomial path_reduction(const Graph& g, const std::array<Vertex, 5>& path, const Evaluator& ev) {
  const auto [u, v, w, y, z] = path;
  for (Vertex a : path) require_vertex(g, a, "path_reduction");
  for (size_t i = 0; i < path.size(); ++i)
    for (size_t j = i + 1; j < path.size(); ++j)
      if (path[i] == path[j]) throw std::invalid_argument("path_reduction: repeated vertex");
  if (!g.has_edge(u, v) || !g.has_edge(v, w) || !g.has_edge(w, y) || !g.has_edge(y, z)) {
    throw std::invalid_argument("path_reduction: vertices do not form a path");
  }
  if (g.degree(v) != 2 || g.degree(w) != 2 || g.degree(y) != 2) {
    throw std::invalid_argument("path_reduction: interior vertices must have degree 2");
  }
  const Graph g1 = g.contract_vertex(w);
  const Graph g2 = g1.contract_vertex(v);
  const Graph g3 = g2.contract_vertex(y);
  return kX * (ev.dom(g1) + ev.dom(g2) + ev.dom(g3));
}

Polynomial corona_formula(const Graph& g, const Graph& h, const Evaluator& ev) {
  if (g.order() == 0 || h.order() == 0) {
    throw std::invalid_argument("corona_formula: both factors must be non-null");
  }
  const Polynomial base =
      kX * kOnePlusX.pow(static_cast<unsigned>(h.order())) + ev.dom(h);
  return base.pow(static_cast<unsigned>(g.order()));
}

}  // namespace reductions
}  // namespace dompoly
