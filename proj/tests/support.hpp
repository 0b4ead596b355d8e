#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "fbtlab/graph.hpp"

namespace fbtlab::testing {

// Hand-rolled draws so corpora are identical across standard libraries.
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::uint64_t next(std::uint64_t bound) { return eng() % bound; }

  bool chance(double p) {
    return static_cast<double>(eng() >> 11) / static_cast<double>(1ull << 53) < p;
  }
};

inline RootedGraph make_graph(int n, VertexId root,
                              std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> es;
  for (auto [u, v] : edges) es.emplace_back(u, v);
  return RootedGraph(n, root, std::move(es));
}

inline RootedGraph random_graph(int n, double edge_prob, VertexId root, Rng& rng) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rng.chance(edge_prob)) edges.emplace_back(u, v);
  return RootedGraph(n, root, std::move(edges));
}

inline bool is_connected(const RootedGraph& g) {
  return static_cast<int>(component_of_root(g).size()) == g.vertex_count();
}

// Independent full-binary-tree definition: orient edges away from the root
// by BFS; the orientation must cover every edge and give every vertex 0 or
// 2 children.
inline bool fbt_by_child_orientation(const RootedGraph& g) {
  const int n = g.vertex_count();
  std::vector<VertexId> parent(n + 1, 0);
  std::vector<char> seen(n + 1, 0);
  std::vector<VertexId> queue{g.root()};
  seen[g.root()] = 1;
  int reached = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId v = queue[head];
    for (VertexId w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = v;
      ++reached;
      queue.push_back(w);
    }
  }
  if (reached != n) return false;
  for (const Edge& e : g.edges())
    if (parent[e.u] != e.v && parent[e.v] != e.u) return false;
  std::vector<int> children(n + 1, 0);
  for (VertexId v = 1; v <= n; ++v)
    if (parent[v] != 0) ++children[parent[v]];
  for (VertexId v = 1; v <= n; ++v)
    if (children[v] != 0 && children[v] != 2) return false;
  return true;
}

// Reference 2-core: repeatedly drop any vertex of degree <= 1.
inline std::vector<char> reference_two_core(const RootedGraph& g) {
  const int n = g.vertex_count();
  std::vector<char> alive(n + 1, 1);
  alive[0] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 1; v <= n; ++v) {
      if (!alive[v]) continue;
      int d = 0;
      for (VertexId w : g.neighbors(v))
        if (alive[w]) ++d;
      if (d <= 1) {
        alive[v] = 0;
        changed = true;
      }
    }
  }
  return alive;
}

inline bool cycle_is_valid(const RootedGraph& g, const Cycle& cycle) {
  const auto& vs = cycle.vertices;
  if (vs.size() < 3) return false;
  std::set<VertexId> distinct(vs.begin(), vs.end());
  if (distinct.size() != vs.size()) return false;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (!g.has_edge(vs[i], vs[(i + 1) % vs.size()])) return false;
  return true;
}

}  // namespace fbtlab::testing
