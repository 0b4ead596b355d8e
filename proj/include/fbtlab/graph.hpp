#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fbtlab/errors.hpp"

namespace fbtlab {

using VertexId = int;
using Weight = std::int64_t;

// Unordered vertex pair, stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a), v(b) {
    if (u > v) std::swap(u, v);
  }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph with a designated root and positive integer
// vertex/edge weights. Vertices are 1..n. Immutable after construction;
// the deletion primitives below return new graphs.
class RootedGraph {
 public:
  RootedGraph(int vertex_count, VertexId root, std::vector<Edge> edges);

  // vertex_weights has size n (index v-1), edge_weights aligns with the
  // edge list as passed in; either may be empty for all-ones.
  RootedGraph(int vertex_count, VertexId root, std::vector<Edge> edges,
              std::vector<Weight> vertex_weights,
              std::vector<Weight> edge_weights);

  int vertex_count() const { return n_; }
  VertexId root() const { return root_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Sorted ascending; weights() aligns with edges().
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Weight>& edge_weights() const { return eweight_; }

  bool has_vertex(VertexId v) const { return v >= 1 && v <= n_; }
  bool has_edge(VertexId a, VertexId b) const;
  const std::vector<VertexId>& neighbors(VertexId v) const;
  int degree(VertexId v) const;

  Weight vertex_weight(VertexId v) const;
  Weight edge_weight(const Edge& e) const;

  friend bool operator==(const RootedGraph&, const RootedGraph&) = default;

 private:
  void check_vertex(VertexId v) const;

  int n_ = 0;
  VertexId root_ = 0;
  std::vector<Edge> edges_;
  std::vector<Weight> eweight_;
  std::vector<Weight> vweight_;  // size n_+1, [0] unused
  std::vector<std::vector<VertexId>> adj_;
};

enum class Variant { DV, DE };

struct DeletionInstance {
  RootedGraph graph;
  Variant variant = Variant::DV;
  Weight budget = 0;

  friend bool operator==(const DeletionInstance&, const DeletionInstance&) = default;
};

// Validates the variant-specific weight convention (DV: unit edge weights,
// DE: unit vertex weights) and a non-negative budget.
DeletionInstance make_instance(RootedGraph graph, Variant variant, Weight budget);

// True iff g is connected, has exactly n-1 edges and the full-binary-tree
// degree profile: root degree 2 (or the single-vertex graph), every other
// vertex degree 1 or 3.
bool is_full_binary_tree(const RootedGraph& g);

// All vertices reachable from the root, sorted ascending.
std::vector<VertexId> component_of_root(const RootedGraph& g);

struct VertexDeletion {
  RootedGraph graph;
  std::vector<VertexId> old_of_new;  // [new] -> old id, index 0 unused
  std::vector<VertexId> new_of_old;  // [old] -> new id, 0 if deleted
};

// Induced subgraph on V \ s with ids stably re-indexed (surviving vertices
// keep their relative order) and weights carried over. Throws
// RootDeletionError if s contains the root.
VertexDeletion delete_vertices(const RootedGraph& g, const std::vector<VertexId>& s);

// Same vertex set, edges minus s. Throws UnknownEdgeError for absent edges.
RootedGraph delete_edges(const RootedGraph& g, const std::vector<Edge>& s);

// A degree-2 chain contracted to a single multigraph edge; path lists the
// original vertices endpoint to endpoint (a ... b), so expanding all
// super-edges reproduces the 2-core.
struct SuperEdge {
  VertexId a = 0;
  VertexId b = 0;
  std::vector<VertexId> path;

  friend bool operator==(const SuperEdge&, const SuperEdge&) = default;
};

struct SmoothedCore {
  std::vector<VertexId> core_vertices;  // sorted ascending
  std::vector<SuperEdge> super_edges;

  bool empty() const { return core_vertices.empty(); }
};

// Strips the acyclic fringe and contracts degree-2 chains. The root is kept
// as a core vertex whenever it lies in the 2-core; a bare cycle is returned
// uncontracted. Empty result iff g is a tree. Requires g connected.
SmoothedCore smooth_core(const RootedGraph& g);

struct Cycle {
  std::vector<VertexId> vertices;  // distinct, cyclically adjacent, length >= 3
};

// Shortest-by-construction cycle found by BFS over the smoothed core,
// expanded back to original vertices. Absent iff g is acyclic. Requires g
// connected; ties break toward the lowest id.
std::optional<Cycle> find_cycle(const RootedGraph& g);

}  // namespace fbtlab
