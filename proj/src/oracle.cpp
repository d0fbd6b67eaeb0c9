#include "dompoly/oracle.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>

namespace dompoly {
namespace oracle {

namespace {

void require_small(const Graph& g) {
  if (g.order() > kMaxOrder) {
    throw std::invalid_argument("oracle: graph too large for exhaustive enumeration");
  }
}

// Enumerates every subset W of the vertex set and calls visit(W, N[W]).
// Subsets are visited via the standard descending submask walk.
template <typename Visit>
void for_each_subset(const Graph& g, Visit&& visit) {
  const VertexSet all = g.vertices();
  VertexSet w = all;
  for (;;) {
    VertexSet covered = w;
    vs_for_each(w, [&](Vertex v) { covered |= g.open_neighborhood(v); });
    visit(w, covered);
    if (w == 0) break;
    w = (w - 1) & all;
  }
}

Polynomial counts_to_polynomial(const std::array<std::uint64_t, 65>& counts) {
  std::vector<BigInt> coeffs;
  coeffs.reserve(65);
  for (std::uint64_t c : counts) coeffs.push_back(BigInt(c));
  return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial brute_force(const Graph& g) {
  require_small(g);
  const VertexSet all = g.vertices();
  std::array<std::uint64_t, 65> counts{};
  for_each_subset(g, [&](VertexSet w, VertexSet covered) {
    if (covered == all) counts[static_cast<size_t>(vs_size(w))]++;
  });
  return counts_to_polynomial(counts);
}

Polynomial brute_force_conditioned(const Graph& g, const Condition& condition) {
  require_small(g);
  const VertexSet all = g.vertices();
  std::array<std::uint64_t, 65> counts{};

  switch (condition.kind) {
    case ConditionKind::kNone:
      return brute_force(g);
    case ConditionKind::kNonEmpty:
      for_each_subset(g, [&](VertexSet w, VertexSet covered) {
        if (w != 0 && covered == all) counts[static_cast<size_t>(vs_size(w))]++;
      });
      break;
    case ConditionKind::kContains: {
      const VertexSet u = vs_single(condition.u);
      if (!g.has_vertex(condition.u)) throw std::invalid_argument("condition vertex not in graph");
      for_each_subset(g, [&](VertexSet w, VertexSet covered) {
        if ((w & u) != 0 && covered == all) counts[static_cast<size_t>(vs_size(w))]++;
      });
      break;
    }
    case ConditionKind::kExcludes: {
      const VertexSet u = vs_single(condition.u);
      if (!g.has_vertex(condition.u)) throw std::invalid_argument("condition vertex not in graph");
      for_each_subset(g, [&](VertexSet w, VertexSet covered) {
        if ((w & u) == 0 && covered == all) counts[static_cast<size_t>(vs_size(w))]++;
      });
      break;
    }
    case ConditionKind::kNotDominated: {
      if (!g.has_vertex(condition.u)) throw std::invalid_argument("condition vertex not in graph");
      const VertexSet closed_u = g.closed_neighborhood(condition.u);
      const VertexSet rest = all & ~vs_single(condition.u);
      for_each_subset(g, [&](VertexSet w, VertexSet covered) {
        if ((w & closed_u) == 0 && (rest & ~covered) == 0) {
          counts[static_cast<size_t>(vs_size(w))]++;
        }
      });
      break;
    }
    case ConditionKind::kExactOneNeighbor: {
      if (!g.has_vertex(condition.u) || !g.has_vertex(condition.v)) {
        throw std::invalid_argument("condition vertex not in graph");
      }
      const VertexSet u = vs_single(condition.u);
      const VertexSet v = vs_single(condition.v);
      const VertexSet open_u = g.open_neighborhood(condition.u);
      const VertexSet rest = all & ~u;
      for_each_subset(g, [&](VertexSet w, VertexSet covered) {
        if ((w & u) == 0 && (w & v) != 0 && (w & open_u) == v && (rest & ~covered) == 0) {
          counts[static_cast<size_t>(vs_size(w))]++;
        }
      });
      break;
    }
  }
  return counts_to_polynomial(counts);
}

Polynomial brute_force_p(const Graph& g, Vertex u) {
  return brute_force_conditioned(g, Condition::not_dominated(u));
}

Polynomial brute_force_puv(const Graph& g, Vertex u, Vertex v) {
  return brute_force_conditioned(g, Condition::exact_one_neighbor(u, v));
}

Polynomial brute_force_state(const Graph& g, VertexSet x, VertexSet a, VertexSet b) {
  require_small(g);
  const VertexSet all = g.vertices();
  if ((x & ~all) != 0) throw std::invalid_argument("brute_force_state: X not a vertex subset");
  if ((a & ~b) != 0 || (b & ~x) != 0) {
    throw std::invalid_argument("brute_force_state: need A <= B <= X");
  }
  const VertexSet outside = all & ~x;
  std::array<std::uint64_t, 65> counts{};
  // W must meet X exactly in A, so enumerate only the part outside X.
  const Graph shell = g;  // enumeration graph is g itself; masks do the work
  VertexSet w_out = outside;
  for (;;) {
    const VertexSet w = w_out | a;
    VertexSet covered = w;
    vs_for_each(w, [&](Vertex v) { covered |= shell.open_neighborhood(v); });
    if ((covered & x) == b && (outside & ~covered) == 0) {
      counts[static_cast<size_t>(vs_size(w_out))]++;
    }
    if (w_out == 0) break;
    w_out = (w_out - 1) & outside;
  }
  return counts_to_polynomial(counts);
}

}  // namespace oracle
}  // namespace dompoly
