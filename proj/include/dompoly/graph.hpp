// Simple undirected labeled graphs on at most 64 vertices.
//
// Vertices are integer ids in 0..63 and vertex sets are 64-bit masks, so
// neighborhood queries and subset manipulation are single machine-word
// operations.  Vertex identity is preserved by every operation: deleting
// vertex 7 from a graph leaves all other ids unchanged, which keeps
// polynomials attached to "the same" vertex across a recursion tree.
//
// Graphs are cheap values (one mask plus a 64-entry adjacency array);
// derived-graph operations return new graphs and never mutate the receiver.
#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dompoly {

using Vertex = int;
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertexId = 63;

constexpr VertexSet vs_single(Vertex v) { return VertexSet{1} << v; }
constexpr bool vs_contains(VertexSet s, Vertex v) { return ((s >> v) & 1u) != 0; }
inline int vs_size(VertexSet s) { return std::popcount(s); }
// Smallest id in a non-empty set.
inline Vertex vs_smallest(VertexSet s) { return std::countr_zero(s); }

// Calls f(v) for each vertex id in the set, in ascending order.
template <typename F>
void vs_for_each(VertexSet s, F&& f) {
  while (s != 0) {
    f(static_cast<Vertex>(std::countr_zero(s)));
    s &= s - 1;
  }
}

std::vector<Vertex> vs_to_vector(VertexSet s);

class Graph {
 public:
  // The null graph (no vertices).
  Graph() = default;

  static Graph with_vertices(VertexSet vertices);
  // Vertices 0..n-1, no edges.
  static Graph edgeless(int n);
  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  // Vertices 0..n-1 plus the given edges; throws std::invalid_argument on
  // out-of-range endpoints, self-loops or duplicate edges.
  static Graph from_edge_list(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  // In-place construction helpers (throw std::invalid_argument on misuse).
  void add_vertex(Vertex v);
  void add_edge(Vertex u, Vertex v);

  int order() const { return vs_size(verts_); }
  int edge_count() const;
  VertexSet vertices() const { return verts_; }
  bool has_vertex(Vertex v) const { return v >= 0 && v <= kMaxVertexId && vs_contains(verts_, v); }
  bool has_edge(Vertex u, Vertex v) const {
    return has_vertex(u) && has_vertex(v) && vs_contains(adj_[static_cast<size_t>(u)], v);
  }
  // Open neighborhood N(v).
  VertexSet open_neighborhood(Vertex v) const;
  // Closed neighborhood N[v] = N(v) + v.
  VertexSet closed_neighborhood(Vertex v) const;
  int degree(Vertex v) const { return vs_size(open_neighborhood(v)); }
  // Union of closed neighborhoods N[W] of a vertex subset.
  VertexSet closed_neighborhood_of_set(VertexSet w) const;
  // True when N[W] covers every vertex.
  bool dominates(VertexSet w) const { return closed_neighborhood_of_set(w) == verts_; }
  // Edges as (min, max) pairs in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // --- derived graphs (value semantics) ---
  // Vertex deletion G - v.
  Graph remove_vertex(Vertex v) const;
  Graph remove_vertices(VertexSet s) const;
  // Vertex contraction G / v: delete v and make its neighborhood a clique.
  // Contracting an isolated vertex is plain deletion.
  Graph contract_vertex(Vertex v) const;
  // G - N[v]: delete the closed neighborhood of v.
  Graph remove_closed_neighborhood(Vertex v) const;
  // G + {v,.}: attach a new degree-one neighbor to v; the new vertex takes
  // the smallest unused id (see pendant_id()).
  Graph add_pendant(Vertex v) const;
  // The id add_pendant would assign; throws std::length_error if none left.
  Vertex pendant_id() const;
  // G / N(v): delete the open neighborhood of v and connect v to every
  // vertex that had a neighbor inside it (v itself remains).
  Graph contract_open_neighborhood(Vertex v) const;
  // Edge deletion G - e.
  Graph remove_edge(Vertex u, Vertex v) const;
  // Edge contraction G / e: merge the endpoints; the merged vertex keeps the
  // smaller id and inherits both neighborhoods.
  Graph contract_edge(Vertex u, Vertex v) const;
  // Extraction G † e: delete both endpoints of the edge.
  Graph remove_endpoints(Vertex u, Vertex v) const;
  // Neighborhood clearing: delete every edge joining two neighbors of v
  // (edges incident to v itself stay).
  Graph clear_neighborhood_edges(Vertex v) const;
  // Induced subgraph on a vertex subset.
  Graph induced(VertexSet s) const;

  // Connected components, ascending by smallest contained vertex id.
  std::vector<Graph> components() const;
  int component_count() const;
  // A graph is connected when it has at most one component.
  bool is_connected() const { return component_count() <= 1; }
  // Vertices whose removal increases the number of components, ascending.
  std::vector<Vertex> articulation_points() const;

  bool operator==(const Graph& other) const = default;

  // Serialization of the structure after relabeling vertices to 0..n-1 in
  // ascending id order; used as a memoization key.  Extra vertex sets are
  // remapped with the same relabeling and appended.
  std::string dense_key(const std::vector<VertexSet>& extra_sets = {}) const;

  // Validates internal invariants (symmetry, no loops, edges within the
  // vertex set); throws std::logic_error on violation.  Test support.
  void check_valid() const;

 private:
  void require_vertex(Vertex v, const char* op) const;

  VertexSet verts_ = 0;
  std::array<VertexSet, 64> adj_{};
};

// Disjoint union; throws std::invalid_argument if the vertex sets overlap.
Graph disjoint_union(const Graph& a, const Graph& b);
// Union of vertex and edge sets (shared vertices allowed).
Graph graph_union(const Graph& a, const Graph& b);
// Corona g o h: one fresh copy of h per vertex v of g, with v joined to all
// of its copy.  Copies take the smallest unused ids, one ascending block per
// base vertex in ascending order.  Throws std::length_error if the result
// would need more than 64 vertex ids.
Graph corona(const Graph& g, const Graph& h);

// True when some open neighbor u of v satisfies N[u] <= N[v]; such a vertex
// is automatically dominated by any set that dominates the rest.
bool is_domination_covered(const Graph& g, Vertex v);
// An edge is irrelevant when both endpoints are domination-covered in G - e;
// deleting it does not change the dominating-set structure.
bool is_irrelevant_edge(const Graph& g, Vertex u, Vertex v);
std::vector<std::pair<Vertex, Vertex>> irrelevant_edges(const Graph& g);

}  // namespace dompoly
