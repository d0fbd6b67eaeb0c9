#include "dompoly/solver.hpp"

#include <optional>
#include <stdexcept>

#include "dompoly/oracle.hpp"
#include "dompoly/reductions.hpp"
#include "dompoly/splitting.hpp"

namespace dompoly {

namespace {

const Polynomial kX = Polynomial::x();
const Polynomial kOnePlusX{1, 1};

// Enumerates size-k vertex subsets in lexicographic order of their ascending
// vertex tuples and calls f(mask) until f returns true; returns that mask or
// 0 when f never accepted.
template <typename F>
VertexSet first_subset(const std::vector<Vertex>& verts, int k, F&& f) {
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  const int n = static_cast<int>(verts.size());
  if (k > n) return 0;
  for (;;) {
    VertexSet mask = 0;
    for (int i : idx) mask |= vs_single(verts[static_cast<size_t>(i)]);
    if (f(mask)) return mask;
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) return 0;
    ++idx[static_cast<size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) {
      idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
    }
  }
}

}  // namespace

Solver::Solver(SolverOptions options) : options_(options) {}

Evaluator Solver::evaluator() {
  return Evaluator{
      [this](const Graph& g) { return compute(g); },
      [this](const Graph& g, Vertex u) { return p(g, u); },
  };
}

Polynomial Solver::compute(const Graph& g) {
  if (g.order() == 0) return Polynomial(1);
  ++stats_.recursion_nodes;
  const std::string key = g.dense_key();
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      ++stats_.memo_hits;
      return it->second;
    }
    ++stats_.memo_misses;
  }
  Polynomial result;
  const std::vector<Graph> comps = g.components();
  if (comps.size() > 1) {
    // The polynomial is multiplicative over connected components.
    result = Polynomial(1);
    for (const Graph& comp : comps) result *= compute(comp);
  } else {
    result = compute_connected(g);
  }
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    memo_.emplace(key, result);
  }
  return result;
}

Polynomial Solver::compute_connected(const Graph& g) {
  if (g.order() == 1) return kX;
  switch (options_.strategy) {
    case Strategy::kAuto:
      return auto_connected(g);
    case Strategy::kBrute:
      ++stats_.oracle_calls;
      return oracle::brute_force(g);
    case Strategy::kVertex:
      return vertex_connected(g);
    case Strategy::kEdge:
      return edge_connected(g);
    case Strategy::kSplit:
      return split_connected(g);
  }
  throw std::logic_error("unknown strategy");
}

Vertex Solver::max_degree_vertex(const Graph& g) const {
  Vertex best = vs_smallest(g.vertices());
  int best_degree = g.degree(best);
  vs_for_each(g.vertices(), [&](Vertex v) {
    const int d = g.degree(v);
    if (d > best_degree) {
      best = v;
      best_degree = d;
    }
  });
  return best;
}

Polynomial Solver::vertex_connected(const Graph& g) {
  return reductions::vertex_reduction(g, max_degree_vertex(g), evaluator());
}

Polynomial Solver::edge_connected(const Graph& g) {
  const auto edges = g.edges();
  if (edges.empty()) {
    // Every vertex is isolated and must be in the set.
    return Polynomial::monomial(1, g.order());
  }
  return reductions::edge_reduction(g, edges.front().first, edges.front().second, evaluator());
}

Polynomial Solver::split_with_mode(const Graph& g, VertexSet separator) {
  const splitting::Splitting sp = splitting::split_at(g, separator);
  switch (options_.split_mode) {
    case SplitMode::kArticulationQ:
      if (vs_size(separator) == 1) return splitting::articulation_split(sp, evaluator());
      return splitting::general_split(sp, evaluator(), splitting::SplitFormula::kStateQ);
    case SplitMode::kGeneralQ:
      return splitting::general_split(sp, evaluator(), splitting::SplitFormula::kStateQ);
    case SplitMode::kGeneralDecorated:
      return splitting::general_split(sp, evaluator(), splitting::SplitFormula::kDecoratedInverse);
  }
  throw std::logic_error("unknown split mode");
}

Polynomial Solver::split_connected(const Graph& g) {
  const std::vector<Vertex> arts = g.articulation_points();
  if (!arts.empty()) {
    if (options_.split_mode == SplitMode::kGeneralDecorated) {
      // The decorated route attaches a pendant to a side, so recursion only
      // shrinks when both private sides have at least two vertices; pick the
      // first articulation that provides that, with the plain state gluing
      // as the safe fallback.
      for (Vertex v : arts) {
        const splitting::Splitting sp = splitting::split_at(g, vs_single(v));
        if (sp.part1.order() >= 3 && sp.part2.order() >= 3) {
          return splitting::general_split(sp, evaluator(),
                                          splitting::SplitFormula::kDecoratedInverse);
        }
      }
      return splitting::articulation_split(splitting::split_at(g, vs_single(arts.front())),
                                           evaluator());
    }
    return split_with_mode(g, vs_single(arts.front()));
  }
  // 2-connected: look for a small separator.  A candidate is usable when the
  // state vectors of both sides are computable by enumeration, or when both
  // private sides are large enough that the decorated recursion shrinks.
  const std::vector<Vertex> verts = vs_to_vector(g.vertices());
  for (int k = 2; k <= options_.max_separator && k < g.order(); ++k) {
    const VertexSet found = first_subset(verts, k, [&](VertexSet mask) {
      if (g.remove_vertices(mask).component_count() < 2) return false;
      const splitting::Splitting sp = splitting::split_at(g, mask);
      const bool enumerable = sp.part1.order() <= oracle::kMaxOrder &&
                              sp.part2.order() <= oracle::kMaxOrder &&
                              options_.split_mode != SplitMode::kGeneralDecorated;
      const bool shrinking = sp.part1.order() >= 2 * k + 1 && sp.part2.order() >= 2 * k + 1;
      return enumerable || shrinking;
    });
    if (found != 0) return split_with_mode(g, found);
  }
  // No usable separator: brute-force when feasible, otherwise fall back to
  // the vertex recurrence.
  if (g.order() <= oracle::kMaxOrder) {
    ++stats_.oracle_calls;
    return oracle::brute_force(g);
  }
  return vertex_connected(g);
}

Polynomial Solver::auto_connected(const Graph& g) {
  if (g.order() <= options_.oracle_cutoff) {
    ++stats_.oracle_calls;
    return oracle::brute_force(g);
  }
  if (options_.remove_irrelevant_edges) {
    for (const auto& [u, v] : g.edges()) {
      if (is_irrelevant_edge(g, u, v)) return compute(g.remove_edge(u, v));
    }
  }
  // Closed-neighborhood containment: eliminate the dominating vertex of the
  // first pair found (its correction term vanishes).
  {
    std::optional<std::pair<Vertex, Vertex>> found;
    vs_for_each(g.vertices(), [&](Vertex u) {
      if (found) return;
      const VertexSet closed_u = g.closed_neighborhood(u);
      vs_for_each(g.open_neighborhood(u), [&](Vertex v) {
        if (!found && (g.closed_neighborhood(v) & ~closed_u) == 0) found = {{u, v}};
      });
    });
    if (found) {
      return reductions::closed_containment_reduction(g, found->first, found->second, evaluator());
    }
  }
  // Open twins.
  {
    std::optional<std::pair<Vertex, Vertex>> found;
    vs_for_each(g.vertices(), [&](Vertex u) {
      if (found) return;
      const VertexSet open_u = g.open_neighborhood(u);
      VertexSet later = g.vertices() & ~((vs_single(u) << 1) - 1) & ~open_u;
      vs_for_each(later, [&](Vertex w) {
        if (!found && g.open_neighborhood(w) == open_u) found = {{u, w}};
      });
    });
    if (found) {
      return reductions::open_twin_reduction(g, found->first, found->second, evaluator());
    }
  }
  // Degree-2 path segment of five vertices.
  {
    std::optional<std::array<Vertex, 5>> found;
    vs_for_each(g.vertices(), [&](Vertex w) {
      if (found || g.degree(w) != 2) return;
      const std::vector<Vertex> mid = vs_to_vector(g.open_neighborhood(w));
      const Vertex v = mid[0], y = mid[1];
      if (g.degree(v) != 2 || g.degree(y) != 2) return;
      const Vertex u = vs_smallest(g.open_neighborhood(v) & ~vs_single(w));
      const Vertex z = vs_smallest(g.open_neighborhood(y) & ~vs_single(w));
      const VertexSet interior = vs_single(v) | vs_single(w) | vs_single(y);
      if (u == z || vs_contains(interior, u) || vs_contains(interior, z)) return;
      found = {{u, v, w, y, z}};
    });
    if (found) return reductions::path_reduction(g, *found, evaluator());
  }
  const std::vector<Vertex> arts = g.articulation_points();
  if (!arts.empty()) {
    if (options_.split_mode == SplitMode::kGeneralDecorated) {
      for (Vertex v : arts) {
        const splitting::Splitting sp = splitting::split_at(g, vs_single(v));
        if (sp.part1.order() >= 3 && sp.part2.order() >= 3) {
          return splitting::general_split(sp, evaluator(),
                                          splitting::SplitFormula::kDecoratedInverse);
        }
      }
      return splitting::articulation_split(splitting::split_at(g, vs_single(arts.front())),
                                           evaluator());
    }
    return split_with_mode(g, vs_single(arts.front()));
  }
  return vertex_connected(g);
}

Polynomial Solver::p(const Graph& g, Vertex u) {
  if (!g.has_vertex(u)) throw std::invalid_argument("p: no such vertex");
  const VertexSet forbidden = g.open_neighborhood(u);
  const Graph rest = g.remove_vertex(u);
  return partial_domination(rest, rest.vertices(), forbidden);
}

Polynomial Solver::partial_domination(const Graph& h, VertexSet target, VertexSet forbidden) {
  ++stats_.p_nodes;
  // Forbidden vertices that need no domination influence nothing: they can
  // neither join the set nor demand coverage.
  const VertexSet removable = forbidden & ~target;
  if (removable != 0) {
    return partial_domination(h.remove_vertices(removable), target, forbidden & target);
  }
  const VertexSet free = h.vertices() & ~forbidden;
  if (target == 0) {
    // Each remaining vertex may freely join the set.
    return kOnePlusX.pow(static_cast<unsigned>(vs_size(free)));
  }
  if ((target & ~h.closed_neighborhood_of_set(free)) != 0) return Polynomial();
  const std::vector<Graph> comps = h.components();
  if (comps.size() > 1) {
    Polynomial result(1);
    for (const Graph& comp : comps) {
      result *= partial_domination(comp, target & comp.vertices(), forbidden & comp.vertices());
    }
    return result;
  }
  const std::string key = h.dense_key({target, forbidden});
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = p_memo_.find(key);
    if (it != p_memo_.end()) return it->second;
  }
  // Branch on the free vertex covering the most outstanding targets.
  Vertex branch = -1;
  int best_cover = -1;
  vs_for_each(free, [&](Vertex z) {
    const int cover = vs_size(h.closed_neighborhood(z) & target);
    if (cover > best_cover) {
      best_cover = cover;
      branch = z;
    }
  });
  const Polynomial taken =
      kX * partial_domination(h.remove_vertex(branch), target & ~h.closed_neighborhood(branch),
                              forbidden);
  const Polynomial skipped = partial_domination(h, target, forbidden | vs_single(branch));
  Polynomial result = taken + skipped;
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    p_memo_.emplace(key, result);
  }
  return result;
}

Polynomial Solver::conditioned(const Graph& g, const Condition& condition) {
  switch (condition.kind) {
    case ConditionKind::kNone:
      return compute(g);
    case ConditionKind::kNonEmpty:
      return compute(g) - Polynomial(g.order() == 0 ? 1 : 0);
    case ConditionKind::kContains: {
      if (!g.has_vertex(condition.u)) throw std::invalid_argument("condition vertex not in graph");
      return compute(g) - compute(g.remove_vertex(condition.u)) + p(g, condition.u);
    }
    case ConditionKind::kExcludes: {
      if (!g.has_vertex(condition.u)) throw std::invalid_argument("condition vertex not in graph");
      return compute(g.remove_vertex(condition.u)) - p(g, condition.u);
    }
    case ConditionKind::kNotDominated: {
      if (!g.has_vertex(condition.u)) throw std::invalid_argument("condition vertex not in graph");
      return p(g, condition.u);
    }
    case ConditionKind::kExactOneNeighbor: {
      if (!g.has_vertex(condition.u) || !g.has_vertex(condition.v)) {
        throw std::invalid_argument("condition vertex not in graph");
      }
      if (condition.u == condition.v || !g.has_edge(condition.u, condition.v)) {
        return Polynomial();
      }
      // Deleting the edge frees u's requirement on v: the difference of the
      // two p-values isolates "v is the unique set neighbor of u".
      return p(g.remove_edge(condition.u, condition.v), condition.u) - p(g, condition.u);
    }
  }
  throw std::logic_error("unknown condition kind");
}

}  // namespace dompoly
