#include "dompoly/verify.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "dompoly/calculus.hpp"
#include "dompoly/condition.hpp"
#include "dompoly/oracle.hpp"
#include "dompoly/reductions.hpp"
#include "dompoly/splitting.hpp"

namespace dompoly::verify {

namespace {

constexpr size_t kMaxFailureNotes = 8;

std::string vertex_context(const Graph& g, const char* label, Vertex u) {
  std::ostringstream out;
  out << describe(g) << ' ' << label << '=' << u;
  return out.str();
}

std::string pair_context(const Graph& g, const char* label, Vertex u, Vertex v) {
  std::ostringstream out;
  out << describe(g) << ' ' << label << '=' << u << ',' << v;
  return out.str();
}

// Enumerates the dominating sets of g whose intersection with N[v] is
// exactly {u}; reference side for containment_exclusive_part.
Polynomial exclusive_part_by_enumeration(const Graph& g, Vertex u, Vertex v) {
  const VertexSet all = g.vertices();
  const VertexSet nbhd = g.closed_neighborhood(v);
  std::vector<BigInt> coeffs(static_cast<size_t>(g.order()) + 1);
  VertexSet w = all;
  for (;;) {
    if ((w & nbhd) == vs_single(u) && g.dominates(w)) {
      coeffs[static_cast<size_t>(vs_size(w))] += 1;
    }
    if (w == 0) break;
    w = (w - 1) & all;
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace

Evaluator oracle_evaluator() {
  return Evaluator{
      [](const Graph& g) { return oracle::brute_force(g); },
      [](const Graph& g, Vertex u) { return oracle::brute_force_p(g, u); },
  };
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {
      "t:red",      "arbitrary_rec",  "c:nbr",           "c:not",
      "e:wnot",     "clearing",       "path5",           "irrelevant",
      "corona",     "articulation-Q", "articulation-Dinv", "one-conn",
      "split-Q",    "split-Dinv",     "edge-split",      "der-i",
      "reconstruct",
  };
  return ids;
}

CheckReport::CheckReport() {
  for (const std::string& id : check_ids()) entries.push_back({id, 0, 0, {}});
}

CheckReport::Entry& CheckReport::entry(const std::string& id) {
  for (Entry& e : entries) {
    if (e.id == id) return e;
  }
  throw std::invalid_argument("unknown check id: " + id);
}

void CheckReport::record(const std::string& id, bool ok, const std::string& context) {
  Entry& e = entry(id);
  ++e.checks;
  if (!ok) {
    ++e.failures;
    if (e.failure_notes.size() < kMaxFailureNotes) e.failure_notes.push_back(context);
  }
}

bool CheckReport::all_passed() const {
  for (const Entry& e : entries) {
    if (e.failures != 0) return false;
  }
  return true;
}

std::uint64_t CheckReport::total_checks() const {
  std::uint64_t sum = 0;
  for (const Entry& e : entries) sum += e.checks;
  return sum;
}

std::uint64_t CheckReport::total_failures() const {
  std::uint64_t sum = 0;
  for (const Entry& e : entries) sum += e.failures;
  return sum;
}

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " edges=[";
  size_t shown = 0;
  for (const auto& [u, v] : g.edges()) {
    if (shown == 15) {
      out << " ...";
      break;
    }
    if (shown != 0) out << ' ';
    out << u << '-' << v;
    ++shown;
  }
  out << ']';
  return out.str();
}

std::vector<Graph> all_labeled_graphs(int n) {
  if (n < 0) throw std::invalid_argument("all_labeled_graphs: negative order");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  if (pairs.size() > 20) throw std::invalid_argument("all_labeled_graphs: too many graphs");
  std::vector<Graph> out;
  out.reserve(size_t{1} << pairs.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g = Graph::edgeless(n);
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) g.add_edge(pairs[i].first, pairs[i].second);
    }
    out.push_back(g);
  }
  return out;
}

Graph random_graph(int n, std::uint64_t seed, int p_mille) {
  Graph g = Graph::edgeless(n);
  std::mt19937_64 rng(seed);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng() % 1000 < static_cast<std::uint64_t>(p_mille)) g.add_edge(u, v);
    }
  }
  return g;
}

std::vector<Graph> random_suite() {
  static const int kDensities[] = {200, 350, 500, 750};
  std::vector<Graph> out;
  out.reserve(200);
  for (int i = 0; i < 200; ++i) {
    const int n = 6 + (i % 4);
    const int p_mille = kDensities[(i / 4) % 4];
    out.push_back(random_graph(n, 1000 + static_cast<std::uint64_t>(i), p_mille));
  }
  return out;
}

std::vector<Graph> corpus_graphs(int max_n) {
  if (max_n < 0 || max_n > 9) throw std::invalid_argument("corpus bound must be in [0, 9]");
  std::vector<Graph> out;
  for (int n = 0; n <= std::min(max_n, 5); ++n) {
    for (Graph& g : all_labeled_graphs(n)) out.push_back(std::move(g));
  }
  if (max_n >= 6) {
    for (Graph& g : random_suite()) {
      if (g.order() <= max_n) out.push_back(std::move(g));
    }
  }
  return out;
}

Graph block_chain(int blocks, int block_order) {
  if (blocks < 1 || block_order < 2) throw std::invalid_argument("bad block chain shape");
  const int step = block_order - 1;
  const int n = blocks * step + 1;
  Graph g = Graph::edgeless(n);
  for (int b = 0; b < blocks; ++b) {
    const int lo = b * step;
    for (int u = lo; u < lo + block_order; ++u) {
      for (int v = u + 1; v < lo + block_order; ++v) g.add_edge(u, v);
    }
  }
  return g;
}

void run_identity_suite(const Graph& g, CheckReport& report) {
  const Evaluator ev = oracle_evaluator();
  const Polynomial d = oracle::brute_force(g);
  const std::string ctx = describe(g);

  // t:red — the vertex recurrence and the membership split it comes from.
  vs_for_each(g.vertices(), [&](Vertex u) {
    report.record("t:red", reductions::vertex_reduction(g, u, ev) == d,
                  vertex_context(g, "u", u));
    const auto [out_part, in_part] = reductions::split_in_out(g, u, ev);
    report.record("t:red",
                  out_part == oracle::brute_force_conditioned(g, Condition::excludes(u)),
                  vertex_context(g, "out u", u));
    report.record("t:red",
                  in_part == oracle::brute_force_conditioned(g, Condition::contains(u)),
                  vertex_context(g, "in u", u));
    report.record("t:red", reductions::in_part_via_difference(g, u, ev) == in_part,
                  vertex_context(g, "in-diff u", u));
  });

  // arbitrary_rec — edge recurrence plus the unique-neighbor difference.
  for (const auto& [a, b] : g.edges()) {
    report.record("arbitrary_rec", reductions::edge_reduction(g, a, b, ev) == d,
                  pair_context(g, "e", a, b));
    report.record("arbitrary_rec",
                  reductions::unique_neighbor_part(g, a, b, ev) == oracle::brute_force_puv(g, a, b),
                  pair_context(g, "puv", a, b));
    report.record("arbitrary_rec",
                  reductions::unique_neighbor_part(g, b, a, ev) == oracle::brute_force_puv(g, b, a),
                  pair_context(g, "puv", b, a));
  }

  // c:nbr — closed-neighborhood containment, both equation variants.
  vs_for_each(g.vertices(), [&](Vertex u) {
    const VertexSet closed_u = g.closed_neighborhood(u);
    vs_for_each(g.open_neighborhood(u), [&](Vertex v) {
      if ((g.closed_neighborhood(v) & ~closed_u) != 0) return;
      report.record("c:nbr", reductions::closed_containment_reduction(g, u, v, ev) == d,
                    pair_context(g, "uv", u, v));
      report.record("c:nbr", reductions::closed_containment_alternative(g, u, v, ev) == d,
                    pair_context(g, "uv-alt", u, v));
      report.record("c:nbr",
                    reductions::containment_exclusive_part(g, u, v, ev) ==
                        exclusive_part_by_enumeration(g, u, v),
                    pair_context(g, "uv-excl", u, v));
    });
  });

  // c:not — open twins, both orientations.
  vs_for_each(g.vertices(), [&](Vertex u) {
    vs_for_each(g.vertices(), [&](Vertex w) {
      if (w <= u || g.open_neighborhood(u) != g.open_neighborhood(w)) return;
      report.record("c:not", reductions::open_twin_reduction(g, u, w, ev) == d,
                    pair_context(g, "uw", u, w));
      report.record("c:not", reductions::open_twin_reduction(g, w, u, ev) == d,
                    pair_context(g, "uw", w, u));
    });
  });

  // e:wnot — open-neighborhood containment N(w) <= N(u).
  vs_for_each(g.vertices(), [&](Vertex u) {
    const VertexSet open_u = g.open_neighborhood(u);
    vs_for_each(g.vertices(), [&](Vertex w) {
      if (w == u || (g.open_neighborhood(w) & ~open_u) != 0) return;
      report.record("e:wnot", reductions::open_containment_reduction(g, u, w, ev) == d,
                    pair_context(g, "uw", u, w));
    });
  });

  // clearing — valid for every vertex.
  vs_for_each(g.vertices(), [&](Vertex u) {
    report.record("clearing", reductions::clearing_reduction(g, u, ev) == d,
                  vertex_context(g, "u", u));
  });

  // path5 — all five-vertex segments with degree-2 interior, both directions.
  vs_for_each(g.vertices(), [&](Vertex w) {
    if (g.degree(w) != 2) return;
    const std::vector<Vertex> mid = vs_to_vector(g.open_neighborhood(w));
    const Vertex v = mid[0];
    const Vertex y = mid[1];
    if (g.degree(v) != 2 || g.degree(y) != 2) return;
    const Vertex u = vs_smallest(g.open_neighborhood(v) & ~vs_single(w));
    const Vertex z = vs_smallest(g.open_neighborhood(y) & ~vs_single(w));
    const VertexSet interior = vs_single(v) | vs_single(w) | vs_single(y);
    if (u == z || vs_contains(interior, u) || vs_contains(interior, z)) return;
    report.record("path5", reductions::path_reduction(g, {u, v, w, y, z}, ev) == d,
                  vertex_context(g, "w", w));
    report.record("path5", reductions::path_reduction(g, {z, y, w, v, u}, ev) == d,
                  vertex_context(g, "w-rev", w));
  });

  // irrelevant — the characterization, in both directions.
  for (const auto& [a, b] : g.edges()) {
    const bool claimed = is_irrelevant_edge(g, a, b);
    const bool actual = oracle::brute_force(g.remove_edge(a, b)) == d;
    report.record("irrelevant", claimed == actual, pair_context(g, "e", a, b));
  }

  // corona — closed form against small attachments.
  if (g.order() >= 1) {
    const Graph attachments[] = {Graph::complete(1), Graph::complete(2), Graph::edgeless(2)};
    for (const Graph& h : attachments) {
      if (g.order() * (1 + h.order()) > oracle::kMaxOrder) continue;
      const Graph product = corona(g, h);
      report.record("corona", reductions::corona_formula(g, h, ev) == oracle::brute_force(product),
                    ctx + " |h|=" + std::to_string(h.order()) +
                        " mh=" + std::to_string(h.edge_count()));
    }
  }

  // Cut-vertex gluings: three formulas per articulation point.
  for (Vertex a : g.articulation_points()) {
    const splitting::Splitting sp = splitting::split_at(g, vs_single(a));
    report.record("articulation-Q", splitting::articulation_split(sp, ev) == d,
                  vertex_context(g, "a", a));
    report.record("articulation-Dinv", splitting::articulation_split_dvec(sp, ev) == d,
                  vertex_context(g, "a", a));
    report.record("one-conn", splitting::one_connection_reduction(sp, ev) == d,
                  vertex_context(g, "a", a));
  }

  // General separators of size 1 and 2: every bipartition of the remaining
  // components, and both assignments of any separator-internal edge.
  const std::vector<Vertex> verts = vs_to_vector(g.vertices());
  std::vector<VertexSet> separators;
  for (size_t i = 0; i < verts.size(); ++i) {
    separators.push_back(vs_single(verts[i]));
    for (size_t j = i + 1; j < verts.size(); ++j) {
      separators.push_back(vs_single(verts[i]) | vs_single(verts[j]));
    }
  }
  for (VertexSet x : separators) {
    if (vs_size(g.vertices() & ~x) == 0) continue;
    const std::vector<Graph> comps = g.remove_vertices(x).components();
    if (comps.size() < 2) continue;
    const bool has_internal_edge =
        vs_size(x) == 2 && g.has_edge(vs_smallest(x), vs_smallest(x & (x - 1)));
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << comps.size()); mask += 2) {
      VertexSet side1 = 0;
      for (size_t i = 0; i < comps.size(); ++i) {
        if (mask & (std::uint64_t{1} << i)) side1 |= comps[i].vertices();
      }
      for (const bool edges_first : {true, false}) {
        if (!edges_first && !has_internal_edge) continue;
        const splitting::Splitting sp = splitting::make_splitting(g, x, side1, edges_first);
        std::ostringstream sctx;
        sctx << ctx << " X=" << x << " side=" << side1 << " ef=" << edges_first;
        report.record("split-Q",
                      splitting::general_split(sp, ev, splitting::SplitFormula::kStateQ) == d,
                      sctx.str());
        report.record(
            "split-Dinv",
            splitting::general_split(sp, ev, splitting::SplitFormula::kDecoratedInverse) == d,
            sctx.str());
      }
    }
  }

  // edge-split — the nine-term identity on every edge.
  for (const auto& [a, b] : g.edges()) {
    report.record("edge-split", splitting::edge_split(g, a, b, ev) == d,
                  pair_context(g, "e", a, b));
  }

  // der-i — derivative identity for every order up to n.
  for (int i = 0; i <= g.order(); ++i) {
    report.record("der-i", calculus::check_derivative_identity(g, i, ev),
                  ctx + " i=" + std::to_string(i));
  }

  // reconstruct — recover the polynomial from the deletion-contraction sum.
  report.record("reconstruct", calculus::reconstruct_from_sum(g, ev) == d, ctx);
}

}  // namespace dompoly::verify
