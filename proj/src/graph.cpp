#include "dompoly/graph.hpp"

#include <stdexcept>

namespace dompoly {

std::vector<Vertex> vs_to_vector(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(static_cast<size_t>(vs_size(s)));
  vs_for_each(s, [&](Vertex v) { out.push_back(v); });
  return out;
}

Graph Graph::with_vertices(VertexSet vertices) {
  Graph g;
  g.verts_ = vertices;
  return g;
}

Graph Graph::edgeless(int n) {
  if (n < 0 || n > kMaxVertexId + 1) throw std::invalid_argument("graph order out of range");
  return with_vertices(n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1);
}

Graph Graph::complete(int n) {
  Graph g = edgeless(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::path(int n) {
  Graph g = edgeless(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g = edgeless(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    g.add_edge(u, v);  // rejects self-loops and duplicates
  }
  return g;
}

void Graph::require_vertex(Vertex v, const char* op) const {
  if (!has_vertex(v)) throw std::invalid_argument(std::string(op) + ": no such vertex");
}

void Graph::add_vertex(Vertex v) {
  if (v < 0 || v > kMaxVertexId) throw std::invalid_argument("vertex id out of range");
  if (vs_contains(verts_, v)) throw std::invalid_argument("vertex already present");
  verts_ |= vs_single(v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  require_vertex(u, "add_edge");
  require_vertex(v, "add_edge");
  if (u == v) throw std::invalid_argument("add_edge: self-loops are not allowed");
  if (has_edge(u, v)) throw std::invalid_argument("add_edge: duplicate edge");
  adj_[static_cast<size_t>(u)] |= vs_single(v);
  adj_[static_cast<size_t>(v)] |= vs_single(u);
}

int Graph::edge_count() const {
  int twice = 0;
  vs_for_each(verts_, [&](Vertex v) { twice += vs_size(adj_[static_cast<size_t>(v)]); });
  return twice / 2;
}

VertexSet Graph::open_neighborhood(Vertex v) const {
  require_vertex(v, "open_neighborhood");
  return adj_[static_cast<size_t>(v)];
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  require_vertex(v, "closed_neighborhood");
  return adj_[static_cast<size_t>(v)] | vs_single(v);
}

VertexSet Graph::closed_neighborhood_of_set(VertexSet w) const {
  if ((w & ~verts_) != 0) throw std::invalid_argument("closed_neighborhood_of_set: not a subset");
  VertexSet result = w;
  vs_for_each(w, [&](Vertex v) { result |= adj_[static_cast<size_t>(v)]; });
  return result;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  vs_for_each(verts_, [&](Vertex u) {
    VertexSet higher = adj_[static_cast<size_t>(u)] & ~((vs_single(u) << 1) - 1);
    vs_for_each(higher, [&](Vertex v) { out.emplace_back(u, v); });
  });
  return out;
}

Graph Graph::remove_vertex(Vertex v) const {
  require_vertex(v, "remove_vertex");
  return remove_vertices(vs_single(v));
}

Graph Graph::remove_vertices(VertexSet s) const {
  if ((s & ~verts_) != 0) throw std::invalid_argument("remove_vertices: not a subset");
  return induced(verts_ & ~s);
}

Graph Graph::induced(VertexSet s) const {
  if ((s & ~verts_) != 0) throw std::invalid_argument("induced: not a subset");
  Graph g;
  g.verts_ = s;
  vs_for_each(s, [&](Vertex v) { g.adj_[static_cast<size_t>(v)] = adj_[static_cast<size_t>(v)] & s; });
  return g;
}

Graph Graph::contract_vertex(Vertex v) const {
  require_vertex(v, "contract_vertex");
  const VertexSet nbrs = adj_[static_cast<size_t>(v)];
  Graph g = remove_vertex(v);
  // Make the old neighborhood a clique.
  vs_for_each(nbrs, [&](Vertex u) { g.adj_[static_cast<size_t>(u)] |= nbrs & ~vs_single(u); });
  return g;
}

Graph Graph::remove_closed_neighborhood(Vertex v) const {
  require_vertex(v, "remove_closed_neighborhood");
  return remove_vertices(closed_neighborhood(v));
}

Vertex Graph::pendant_id() const {
  if (verts_ == ~VertexSet{0}) throw std::length_error("no vertex ids left for a pendant");
  return static_cast<Vertex>(std::countr_one(verts_));
}

Graph Graph::add_pendant(Vertex v) const {
  require_vertex(v, "add_pendant");
  Graph g(*this);
  const Vertex fresh = pendant_id();
  g.add_vertex(fresh);
  g.add_edge(v, fresh);
  return g;
}

Graph Graph::contract_open_neighborhood(Vertex v) const {
  require_vertex(v, "contract_open_neighborhood");
  const VertexSet nbrs = adj_[static_cast<size_t>(v)];
  // Vertices at distance exactly two from v become its new neighbors.
  VertexSet second = 0;
  vs_for_each(nbrs, [&](Vertex u) { second |= adj_[static_cast<size_t>(u)]; });
  second &= ~(nbrs | vs_single(v));
  Graph g = remove_vertices(nbrs);
  g.adj_[static_cast<size_t>(v)] |= second;
  vs_for_each(second, [&](Vertex w) { g.adj_[static_cast<size_t>(w)] |= vs_single(v); });
  return g;
}

Graph Graph::remove_edge(Vertex u, Vertex v) const {
  if (!has_edge(u, v)) throw std::invalid_argument("remove_edge: no such edge");
  Graph g(*this);
  g.adj_[static_cast<size_t>(u)] &= ~vs_single(v);
  g.adj_[static_cast<size_t>(v)] &= ~vs_single(u);
  return g;
}

Graph Graph::contract_edge(Vertex u, Vertex v) const {
  if (!has_edge(u, v)) throw std::invalid_argument("contract_edge: no such edge");
  const Vertex keep = u < v ? u : v;
  const Vertex drop = u < v ? v : u;
  const VertexSet merged =
      (adj_[static_cast<size_t>(u)] | adj_[static_cast<size_t>(v)]) & ~(vs_single(u) | vs_single(v));
  Graph g = remove_vertex(drop);
  g.adj_[static_cast<size_t>(keep)] = merged;
  vs_for_each(merged, [&](Vertex w) { g.adj_[static_cast<size_t>(w)] |= vs_single(keep); });
  return g;
}

Graph Graph::remove_endpoints(Vertex u, Vertex v) const {
  if (!has_edge(u, v)) throw std::invalid_argument("remove_endpoints: no such edge");
  return remove_vertices(vs_single(u) | vs_single(v));
}

Graph Graph::clear_neighborhood_edges(Vertex v) const {
  require_vertex(v, "clear_neighborhood_edges");
  const VertexSet nbrs = adj_[static_cast<size_t>(v)];
  Graph g(*this);
  vs_for_each(nbrs, [&](Vertex u) { g.adj_[static_cast<size_t>(u)] &= ~(nbrs & ~vs_single(u)); });
  return g;
}

int Graph::component_count() const {
  int count = 0;
  VertexSet left = verts_;
  while (left != 0) {
    ++count;
    VertexSet comp = vs_single(vs_smallest(left));
    for (;;) {
      VertexSet grown = comp;
      vs_for_each(comp, [&](Vertex v) { grown |= adj_[static_cast<size_t>(v)]; });
      if (grown == comp) break;
      comp = grown;
    }
    left &= ~comp;
  }
  return count;
}

std::vector<Graph> Graph::components() const {
  std::vector<Graph> out;
  VertexSet left = verts_;
  while (left != 0) {
    VertexSet comp = vs_single(vs_smallest(left));
    for (;;) {
      VertexSet grown = comp;
      vs_for_each(comp, [&](Vertex v) { grown |= adj_[static_cast<size_t>(v)]; });
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(induced(comp));
    left &= ~comp;
  }
  return out;
}

std::vector<Vertex> Graph::articulation_points() const {
  std::vector<Vertex> out;
  const int base = component_count();
  vs_for_each(verts_, [&](Vertex v) {
    if (remove_vertex(v).component_count() > base) out.push_back(v);
  });
  return out;
}

std::string Graph::dense_key(const std::vector<VertexSet>& extra_sets) const {
  // Relabel vertex ids to 0..n-1 preserving order, then serialize the rows.
  std::array<int, 64> dense{};
  int n = 0;
  vs_for_each(verts_, [&](Vertex v) { dense[static_cast<size_t>(v)] = n++; });
  auto remap = [&](VertexSet s) {
    VertexSet out = 0;
    vs_for_each(s, [&](Vertex v) { out |= VertexSet{1} << dense[static_cast<size_t>(v)]; });
    return out;
  };
  std::string key;
  key.reserve(1 + 8 * (static_cast<size_t>(n) + extra_sets.size()));
  key.push_back(static_cast<char>(n));
  auto append_set = [&key](VertexSet s) {
    for (int byte = 0; byte < 8; ++byte) key.push_back(static_cast<char>((s >> (8 * byte)) & 0xff));
  };
  vs_for_each(verts_, [&](Vertex v) { append_set(remap(adj_[static_cast<size_t>(v)])); });
  for (VertexSet s : extra_sets) {
    if ((s & ~verts_) != 0) throw std::invalid_argument("dense_key: extra set not a subset");
    append_set(remap(s));
  }
  return key;
}

void Graph::check_valid() const {
  for (Vertex v = 0; v <= kMaxVertexId; ++v) {
    const VertexSet row = adj_[static_cast<size_t>(v)];
    if (!vs_contains(verts_, v)) {
      if (row != 0) throw std::logic_error("adjacency row of absent vertex is non-empty");
      continue;
    }
    if (vs_contains(row, v)) throw std::logic_error("self-loop found");
    if ((row & ~verts_) != 0) throw std::logic_error("edge leaves the vertex set");
    vs_for_each(row, [&](Vertex u) {
      if (!vs_contains(adj_[static_cast<size_t>(u)], v)) throw std::logic_error("asymmetric edge");
    });
  }
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  if ((a.vertices() & b.vertices()) != 0) {
    throw std::invalid_argument("disjoint_union: vertex sets overlap");
  }
  return graph_union(a, b);
}

Graph graph_union(const Graph& a, const Graph& b) {
  Graph g = Graph::with_vertices(a.vertices() | b.vertices());
  vs_for_each(a.vertices(), [&](Vertex v) {
    vs_for_each(a.open_neighborhood(v) & ~((vs_single(v) << 1) - 1), [&](Vertex u) {
      g.add_edge(v, u);
    });
  });
  vs_for_each(b.vertices(), [&](Vertex v) {
    vs_for_each(b.open_neighborhood(v) & ~((vs_single(v) << 1) - 1), [&](Vertex u) {
      if (!g.has_edge(v, u)) g.add_edge(v, u);
    });
  });
  return g;
}

Graph corona(const Graph& g, const Graph& h) {
  Graph result = g;
  const std::vector<Vertex> h_vertices = vs_to_vector(h.vertices());
  vs_for_each(g.vertices(), [&](Vertex base) {
    // Attach one fresh copy of h to this base vertex.
    std::array<Vertex, 64> copy_id{};
    for (Vertex hv : h_vertices) {
      const Vertex fresh = result.pendant_id();
      result.add_vertex(fresh);
      copy_id[static_cast<size_t>(hv)] = fresh;
      result.add_edge(base, fresh);
    }
    for (const auto& [hu, hv] : h.edges()) {
      result.add_edge(copy_id[static_cast<size_t>(hu)], copy_id[static_cast<size_t>(hv)]);
    }
  });
  return result;
}

bool is_domination_covered(const Graph& g, Vertex v) {
  const VertexSet closed_v = g.closed_neighborhood(v);
  bool covered = false;
  vs_for_each(g.open_neighborhood(v), [&](Vertex u) {
    if ((g.closed_neighborhood(u) & ~closed_v) == 0) covered = true;
  });
  return covered;
}

bool is_irrelevant_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("is_irrelevant_edge: no such edge");
  const Graph without = g.remove_edge(u, v);
  return is_domination_covered(without, u) && is_domination_covered(without, v);
}

std::vector<std::pair<Vertex, Vertex>> irrelevant_edges(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& [u, v] : g.edges()) {
    if (is_irrelevant_edge(g, u, v)) out.emplace_back(u, v);
  }
  return out;
}

}  // namespace dompoly
