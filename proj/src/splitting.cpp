#include "dompoly/splitting.hpp"

#include <stdexcept>

#include "dompoly/oracle.hpp"

namespace dompoly {
namespace splitting {

namespace {

const Polynomial kX = Polynomial::x();
const Polynomial kOnePlusX{1, 1};

Graph strip_internal_edges(Graph g, VertexSet x) {
  for (const auto& [u, v] : g.edges()) {
    if (vs_contains(x, u) && vs_contains(x, v)) g = g.remove_edge(u, v);
  }
  return g;
}

// Folds per-vertex 3x3 seeds into the 3^|X| x 3^|X| interface matrix.
// Ascending vertices cycle fastest, so each new (larger) vertex becomes the
// left (most significant) Kronecker factor.
template <typename T>
Matrix<T> kronecker_power(const Matrix<T>& seed, VertexSet x) {
  Matrix<T> acc = Matrix<T>::identity(1);
  vs_for_each(x, [&](Vertex) { acc = kronecker(seed, acc); });
  return acc;
}

}  // namespace

std::vector<PairState> pair_states(VertexSet x) {
  const std::vector<Vertex> verts = vs_to_vector(x);
  size_t total = 1;
  for (size_t i = 0; i < verts.size(); ++i) total *= 3;
  std::vector<PairState> out;
  out.reserve(total);
  for (size_t index = 0; index < total; ++index) {
    PairState st;
    size_t rest = index;
    for (Vertex v : verts) {  // ascending = fastest base-3 digit
      switch (rest % 3) {
        case 0:  // not in W, dominated
          st.dominated |= vs_single(v);
          break;
        case 1:  // not in W, not dominated
          break;
        case 2:  // in W (hence dominated)
          st.in_set |= vs_single(v);
          st.dominated |= vs_single(v);
          break;
      }
      rest /= 3;
    }
    out.push_back(st);
  }
  return out;
}

Graph Splitting::merged() const { return graph_union(part1, part2); }

Splitting make_splitting(const Graph& g, VertexSet shared, VertexSet side1,
                         bool shared_edges_on_first) {
  if ((shared & ~g.vertices()) != 0) {
    throw std::invalid_argument("make_splitting: separator not a vertex subset");
  }
  if ((side1 & ~(g.vertices() & ~shared)) != 0) {
    throw std::invalid_argument("make_splitting: side must avoid the separator");
  }
  const VertexSet side2 = g.vertices() & ~shared & ~side1;
  bool crossing = false;
  vs_for_each(side1, [&](Vertex v) {
    if ((g.open_neighborhood(v) & side2) != 0) crossing = true;
  });
  if (crossing) {
    throw std::invalid_argument("make_splitting: separator does not separate the sides");
  }
  Splitting sp;
  sp.shared = shared;
  sp.part1 = g.induced(shared | side1);
  sp.part2 = g.induced(shared | side2);
  if (shared_edges_on_first) {
    sp.part2 = strip_internal_edges(sp.part2, shared);
  } else {
    sp.part1 = strip_internal_edges(sp.part1, shared);
  }
  return sp;
}

Splitting split_at(const Graph& g, VertexSet shared) {
  if ((shared & ~g.vertices()) != 0) {
    throw std::invalid_argument("split_at: separator not a vertex subset");
  }
  const Graph rest = g.remove_vertices(shared);
  if (rest.component_count() < 2) {
    throw std::invalid_argument("split_at: removing the separator must disconnect the graph");
  }
  const VertexSet first_component = rest.components().front().vertices();
  return make_splitting(g, shared, first_component);
}

PolyMatrix p_singleton() {
  return PolyMatrix(3, 3,
                    {Polynomial(1), Polynomial(), Polynomial(),      //
                     Polynomial(), Polynomial(1), Polynomial(1),     //
                     kX, Polynomial(), kOnePlusX});
}

PolyMatrix q_singleton() {
  return PolyMatrix(3, 3,
                    {Polynomial(1), Polynomial(1), Polynomial(),  //
                     Polynomial(1), Polynomial(), Polynomial(),   //
                     Polynomial(), Polynomial(), kX});
}

PolyMatrix d_singleton() {
  const PolyMatrix p = p_singleton();
  return p * q_singleton() * p.transpose();
}

PolyMatrix p_matrix(VertexSet x) { return kronecker_power(p_singleton(), x); }
PolyMatrix q_matrix(VertexSet x) { return kronecker_power(q_singleton(), x); }
PolyMatrix d_matrix(VertexSet x) { return kronecker_power(d_singleton(), x); }

RationalMatrix d_matrix_inverse(VertexSet x) {
  return kronecker_power(invert(to_rational(d_singleton())), x);
}

RationalMatrix pq_matrix_inverse(VertexSet x) {
  return kronecker_power(invert(to_rational(p_singleton() * q_singleton())), x);
}

Polynomial q_entry(VertexSet x, const PairState& row, const PairState& col) {
  if (row.in_set != col.in_set) return Polynomial();
  if ((row.dominated | col.dominated) != x) return Polynomial();
  return Polynomial::monomial(1, vs_size(row.in_set));
}

std::array<Polynomial, 3> u_vector(const Graph& g, Vertex v, const Evaluator& ev) {
  if (!g.has_vertex(v)) throw std::invalid_argument("u_vector: no such vertex");
  const Polynomial pv = ev.p(g, v);
  const Polynomial without = ev.dom(g.remove_vertex(v));
  // In-state entry carries weight x^(|W|-1); the closed form below avoids
  // the explicit division by x.
  const Polynomial in_over_x =
      ev.dom(g.remove_closed_neighborhood(v)) + ev.dom(g.contract_vertex(v)) - pv;
  return {without - pv, pv, in_over_x};
}

std::array<Polynomial, 3> d_vector(const Graph& g, Vertex v, const Evaluator& ev) {
  if (!g.has_vertex(v)) throw std::invalid_argument("d_vector: no such vertex");
  return {ev.dom(g.remove_vertex(v)), ev.dom(g), ev.dom(g.add_pendant(v))};
}

Graph decorated_graph(const Graph& g, const PairState& state) {
  Graph out = g;
  vs_for_each(state.in_set, [&](Vertex v) { out = out.add_pendant(v); });
  return out.remove_vertices(state.dominated & ~state.in_set);
}

std::vector<Polynomial> d_vector_general(const Graph& g, VertexSet x, const Evaluator& ev) {
  if ((x & ~g.vertices()) != 0) {
    throw std::invalid_argument("d_vector_general: X not a vertex subset");
  }
  std::vector<Polynomial> out;
  for (const PairState& state : pair_states(x)) {
    out.push_back(ev.dom(decorated_graph(g, state)));
  }
  return out;
}

std::vector<Polynomial> state_vector_oracle(const Graph& g, VertexSet x) {
  std::vector<Polynomial> out;
  for (const PairState& state : pair_states(x)) {
    out.push_back(oracle::brute_force_state(g, x, state.in_set, state.dominated));
  }
  return out;
}

std::vector<Polynomial> state_vector(const Graph& g, VertexSet x, const Evaluator& ev) {
  const std::vector<RationalFunction> solved =
      pq_matrix_inverse(x) * to_rational(d_vector_general(g, x, ev));
  std::vector<Polynomial> out;
  out.reserve(solved.size());
  for (const RationalFunction& entry : solved) out.push_back(entry.as_polynomial());
  return out;
}

namespace {

std::vector<Polynomial> side_state_vector(const Graph& part, VertexSet x, const Evaluator& ev) {
  if (vs_size(x) == 1) {
    const auto u = u_vector(part, vs_smallest(x), ev);
    return {u[0], u[1], u[2]};
  }
  if (part.order() <= oracle::kMaxOrder) return state_vector_oracle(part, x);
  return state_vector(part, x, ev);
}

}  // namespace

Polynomial articulation_split(const Splitting& sp, const Evaluator& ev) {
  if (vs_size(sp.shared) != 1) {
    throw std::invalid_argument("articulation_split: exactly one shared vertex required");
  }
  const Vertex v = vs_smallest(sp.shared);
  const auto u1 = u_vector(sp.part1, v, ev);
  const auto u2 = u_vector(sp.part2, v, ev);
  const PolyMatrix q = q_singleton();
  Polynomial result;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) result += u1[i] * q.at(i, j) * u2[j];
  return result;
}

Polynomial articulation_split_dvec(const Splitting& sp, const Evaluator& ev) {
  if (vs_size(sp.shared) != 1) {
    throw std::invalid_argument("articulation_split_dvec: exactly one shared vertex required");
  }
  const Vertex v = vs_smallest(sp.shared);
  const auto d1 = d_vector(sp.part1, v, ev);
  const auto d2 = d_vector(sp.part2, v, ev);
  const RationalMatrix inv = invert(to_rational(d_singleton()));
  RationalFunction result;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      result += RationalFunction(d1[i]) * inv.at(i, j) * RationalFunction(d2[j]);
    }
  return result.as_polynomial();
}

Polynomial one_connection_reduction(const Splitting& sp, const Evaluator& ev) {
  if (vs_size(sp.shared) != 1) {
    throw std::invalid_argument("one_connection_reduction: exactly one shared vertex required");
  }
  const Vertex v = vs_smallest(sp.shared);
  const Graph whole = sp.merged();
  auto bracket = [&](const Graph& part) {
    return kX * ev.dom(part.contract_vertex(v)) + ev.dom(part.remove_vertex(v)) +
           kX * ev.dom(part.remove_closed_neighborhood(v)) - ev.dom(part);
  };
  const Polynomial b1 = bracket(sp.part1);
  const Polynomial b2 = bracket(sp.part2);
  return kX * ev.dom(whole.contract_vertex(v)) +
         ev.dom(sp.part1.remove_vertex(v)) * ev.dom(sp.part2.remove_vertex(v)) +
         kX * ev.dom(sp.part1.remove_closed_neighborhood(v)) *
             ev.dom(sp.part2.remove_closed_neighborhood(v)) -
         divide_exact(b1 * b2, kOnePlusX);
}

Polynomial general_split(const Splitting& sp, const Evaluator& ev, SplitFormula formula) {
  switch (formula) {
    case SplitFormula::kStateQ: {
      const std::vector<Polynomial> u1 = side_state_vector(sp.part1, sp.shared, ev);
      const std::vector<Polynomial> u2 = side_state_vector(sp.part2, sp.shared, ev);
      return dot(u1, q_matrix(sp.shared) * u2);
    }
    case SplitFormula::kDecoratedInverse: {
      const std::vector<RationalFunction> d1 =
          to_rational(d_vector_general(sp.part1, sp.shared, ev));
      const std::vector<RationalFunction> d2 =
          to_rational(d_vector_general(sp.part2, sp.shared, ev));
      return dot(d1, d_matrix_inverse(sp.shared) * d2).as_polynomial();
    }
  }
  throw std::logic_error("general_split: unknown formula");
}

Polynomial edge_split(const Graph& g, Vertex u, Vertex v, const Evaluator& ev) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("edge_split: no such edge");
  const Graph ge = g.remove_edge(u, v);
  const Graph gu = g.remove_vertex(u);
  const Graph gv = g.remove_vertex(v);
  const Polynomial one_minus_x{1, -1};
  Polynomial total = kX * kOnePlusX * (ev.dom(gv) + ev.dom(gu));
  total += one_minus_x * ev.dom(gv.add_pendant(u));
  total -= kOnePlusX * ev.dom(ge.add_pendant(u));
  total += one_minus_x * ev.dom(gu.add_pendant(v));
  total -= kOnePlusX * ev.dom(ge.add_pendant(v));
  total += kOnePlusX * kOnePlusX * ev.dom(ge);
  total += Polynomial(2) * ev.dom(ge.add_pendant(u).add_pendant(v));
  total -= Polynomial(2) * kX * ev.dom(g.remove_endpoints(u, v));
  return divide_exact(total, kOnePlusX * kOnePlusX);
}

std::vector<RationalFunction> edge_gluing_weights(const Evaluator& ev) {
  const Graph k2 = Graph::complete(2);
  const VertexSet x = k2.vertices();
  return d_matrix_inverse(x) * to_rational(d_vector_general(k2, x, ev));
}

}  // namespace splitting
}  // namespace dompoly
