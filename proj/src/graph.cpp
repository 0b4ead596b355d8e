#include "fbtlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace fbtlab {

namespace {

constexpr Weight kWeightSumCap = Weight{1} << 62;

}  // namespace

RootedGraph::RootedGraph(int vertex_count, VertexId root, std::vector<Edge> edges)
    : RootedGraph(vertex_count, root, std::move(edges), {}, {}) {}

RootedGraph::RootedGraph(int vertex_count, VertexId root, std::vector<Edge> edges,
                         std::vector<Weight> vertex_weights,
                         std::vector<Weight> edge_weights)
    : n_(vertex_count), root_(root) {
  if (n_ < 1) throw Error("vertex count must be positive");
  if (root_ < 1 || root_ > n_) throw Error("root out of range");
  if (!vertex_weights.empty() && vertex_weights.size() != static_cast<std::size_t>(n_))
    throw Error("vertex weight list has wrong size");
  if (!edge_weights.empty() && edge_weights.size() != edges.size())
    throw Error("edge weight list has wrong size");

  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });

  edges_.reserve(edges.size());
  eweight_.reserve(edges.size());
  for (std::size_t idx : order) {
    const Edge& e = edges[idx];
    if (e.u < 1 || e.v > n_) throw Error("edge endpoint out of range");
    if (e.u == e.v) throw Error("self-loop");
    if (!edges_.empty() && edges_.back() == e) throw Error("parallel edge");
    edges_.push_back(e);
    eweight_.push_back(edge_weights.empty() ? 1 : edge_weights[idx]);
  }

  vweight_.assign(n_ + 1, 1);
  if (!vertex_weights.empty())
    std::copy(vertex_weights.begin(), vertex_weights.end(), vweight_.begin() + 1);

  Weight total = 0;
  for (VertexId v = 1; v <= n_; ++v) {
    if (vweight_[v] < 1) throw Error("vertex weight must be >= 1");
    total += vweight_[v];
    if (total >= kWeightSumCap) throw Error("weight sum exceeds 2^62");
  }
  for (Weight w : eweight_) {
    if (w < 1) throw Error("edge weight must be >= 1");
    total += w;
    if (total >= kWeightSumCap) throw Error("weight sum exceeds 2^62");
  }

  adj_.assign(n_ + 1, {});
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

void RootedGraph::check_vertex(VertexId v) const {
  if (!has_vertex(v)) throw Error("vertex id " + std::to_string(v) + " out of range");
}

bool RootedGraph::has_edge(VertexId a, VertexId b) const {
  if (!has_vertex(a) || !has_vertex(b) || a == b) return false;
  return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
}

const std::vector<VertexId>& RootedGraph::neighbors(VertexId v) const {
  check_vertex(v);
  return adj_[v];
}

int RootedGraph::degree(VertexId v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

Weight RootedGraph::vertex_weight(VertexId v) const {
  check_vertex(v);
  return vweight_[v];
}

Weight RootedGraph::edge_weight(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e)
    throw UnknownEdgeError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                           " not in graph");
  return eweight_[static_cast<std::size_t>(it - edges_.begin())];
}

DeletionInstance make_instance(RootedGraph graph, Variant variant, Weight budget) {
  if (budget < 0) throw Error("budget must be non-negative");
  if (variant == Variant::DV) {
    for (Weight w : graph.edge_weights())
      if (w != 1) throw Error("DV instances carry unit edge weights");
  } else {
    for (VertexId v = 1; v <= graph.vertex_count(); ++v)
      if (graph.vertex_weight(v) != 1) throw Error("DE instances carry unit vertex weights");
  }
  return DeletionInstance{std::move(graph), variant, budget};
}

std::vector<VertexId> component_of_root(const RootedGraph& g) {
  std::vector<char> seen(g.vertex_count() + 1, 0);
  std::deque<VertexId> queue{g.root()};
  seen[g.root()] = 1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<VertexId> out;
  for (VertexId v = 1; v <= g.vertex_count(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

bool is_full_binary_tree(const RootedGraph& g) {
  const int n = g.vertex_count();
  if (g.edge_count() != n - 1) return false;
  if (static_cast<int>(component_of_root(g).size()) != n) return false;
  if (n == 1) return true;
  if (g.degree(g.root()) != 2) return false;
  for (VertexId v = 1; v <= n; ++v) {
    if (v == g.root()) continue;
    int d = g.degree(v);
    if (d != 1 && d != 3) return false;
  }
  return true;
}

VertexDeletion delete_vertices(const RootedGraph& g, const std::vector<VertexId>& s) {
  const int n = g.vertex_count();
  std::vector<char> del(n + 1, 0);
  for (VertexId v : s) {
    if (v < 1 || v > n) throw Error("vertex id " + std::to_string(v) + " out of range");
    if (v == g.root()) throw RootDeletionError("cannot delete the root");
    del[v] = 1;
  }

  std::vector<VertexId> new_of_old(n + 1, 0);
  std::vector<VertexId> old_of_new{0};
  for (VertexId v = 1; v <= n; ++v) {
    if (del[v]) continue;
    new_of_old[v] = static_cast<VertexId>(old_of_new.size());
    old_of_new.push_back(v);
  }
  const int new_n = static_cast<int>(old_of_new.size()) - 1;

  std::vector<Edge> edges;
  std::vector<Weight> eweights;
  const auto& old_edges = g.edges();
  const auto& old_ew = g.edge_weights();
  for (std::size_t i = 0; i < old_edges.size(); ++i) {
    const Edge& e = old_edges[i];
    if (del[e.u] || del[e.v]) continue;
    edges.emplace_back(new_of_old[e.u], new_of_old[e.v]);
    eweights.push_back(old_ew[i]);
  }

  std::vector<Weight> vweights(new_n);
  for (VertexId nv = 1; nv <= new_n; ++nv) vweights[nv - 1] = g.vertex_weight(old_of_new[nv]);

  RootedGraph out(new_n, new_of_old[g.root()], std::move(edges), std::move(vweights),
                  std::move(eweights));
  return VertexDeletion{std::move(out), std::move(old_of_new), std::move(new_of_old)};
}

RootedGraph delete_edges(const RootedGraph& g, const std::vector<Edge>& s) {
  std::vector<Edge> sorted(s);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const Edge& e : sorted) {
    if (!g.has_edge(e.u, e.v))
      throw UnknownEdgeError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                             " not in graph");
  }

  std::vector<Edge> edges;
  std::vector<Weight> eweights;
  const auto& old_edges = g.edges();
  const auto& old_ew = g.edge_weights();
  for (std::size_t i = 0; i < old_edges.size(); ++i) {
    if (std::binary_search(sorted.begin(), sorted.end(), old_edges[i])) continue;
    edges.push_back(old_edges[i]);
    eweights.push_back(old_ew[i]);
  }

  std::vector<Weight> vweights(g.vertex_count());
  for (VertexId v = 1; v <= g.vertex_count(); ++v) vweights[v - 1] = g.vertex_weight(v);

  return RootedGraph(g.vertex_count(), g.root(), std::move(edges), std::move(vweights),
                     std::move(eweights));
}

namespace {

// Iterative removal of degree <= 1 vertices; returns the kept mask.
std::vector<char> two_core_mask(const RootedGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(n + 1);
  std::vector<char> alive(n + 1, 1);
  alive[0] = 0;
  std::deque<VertexId> queue;
  for (VertexId v = 1; v <= n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    if (!alive[v] || deg[v] > 1) continue;
    alive[v] = 0;
    for (VertexId w : g.neighbors(v)) {
      if (!alive[w]) continue;
      if (--deg[w] == 1) queue.push_back(w);
    }
  }
  return alive;
}

std::vector<VertexId> canonical_path(std::vector<VertexId> path) {
  std::vector<VertexId> rev(path.rbegin(), path.rend());
  return std::min(path, rev);
}

}  // namespace

SmoothedCore smooth_core(const RootedGraph& g) {
  const int n = g.vertex_count();
  std::vector<char> alive = two_core_mask(g);
  std::vector<int> deg(n + 1, 0);
  int alive_count = 0;
  for (VertexId v = 1; v <= n; ++v) {
    if (!alive[v]) continue;
    ++alive_count;
    for (VertexId w : g.neighbors(v))
      if (alive[w]) ++deg[v];
  }

  SmoothedCore core;
  if (alive_count == 0) return core;

  std::vector<char> is_core(n + 1, 0);
  bool any_branch = false;
  for (VertexId v = 1; v <= n; ++v) {
    if (alive[v] && deg[v] >= 3) {
      is_core[v] = 1;
      any_branch = true;
    }
  }
  if (alive[g.root()]) is_core[g.root()] = 1;

  if (!any_branch) {
    // Bare cycle: keep it verbatim, one trivial super-edge per edge.
    for (VertexId v = 1; v <= n; ++v)
      if (alive[v]) core.core_vertices.push_back(v);
    for (const Edge& e : g.edges())
      if (alive[e.u] && alive[e.v])
        core.super_edges.push_back(SuperEdge{e.u, e.v, {e.u, e.v}});
    return core;
  }

  for (VertexId v = 1; v <= n; ++v)
    if (is_core[v]) core.core_vertices.push_back(v);

  // Walk each chain once, from a core endpoint, marking traversed edges.
  std::vector<char> used(g.edges().size(), 0);
  auto edge_index = [&](VertexId a, VertexId b) {
    Edge e(a, b);
    auto it = std::lower_bound(g.edges().begin(), g.edges().end(), e);
    return static_cast<std::size_t>(it - g.edges().begin());
  };
  for (VertexId start : core.core_vertices) {
    for (VertexId first : g.neighbors(start)) {
      if (!alive[first]) continue;
      std::size_t ei = edge_index(start, first);
      if (used[ei]) continue;
      used[ei] = 1;
      std::vector<VertexId> path{start, first};
      VertexId prev = start;
      VertexId cur = first;
      while (!is_core[cur]) {
        VertexId next = 0;
        for (VertexId w : g.neighbors(cur)) {
          if (!alive[w] || w == prev) continue;
          next = w;
          break;
        }
        used[edge_index(cur, next)] = 1;
        path.push_back(next);
        prev = cur;
        cur = next;
      }
      path = canonical_path(std::move(path));
      core.super_edges.push_back(SuperEdge{path.front(), path.back(), std::move(path)});
    }
  }
  std::sort(core.super_edges.begin(), core.super_edges.end(),
            [](const SuperEdge& x, const SuperEdge& y) {
              return std::tie(x.a, x.b, x.path) < std::tie(y.a, y.b, y.path);
            });
  return core;
}

std::optional<Cycle> find_cycle(const RootedGraph& g) {
  if (g.edge_count() == g.vertex_count() - 1) return std::nullopt;

  SmoothedCore core = smooth_core(g);
  const auto& ses = core.super_edges;

  // Multigraph adjacency over core vertices: (neighbor, super-edge index).
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<VertexId, int>>> adj(n + 1);
  for (int i = 0; i < static_cast<int>(ses.size()); ++i) {
    adj[ses[i].a].emplace_back(ses[i].b, i);
    if (ses[i].a != ses[i].b) adj[ses[i].b].emplace_back(ses[i].a, i);
  }
  for (auto& lst : adj) std::sort(lst.begin(), lst.end());

  VertexId start = core.core_vertices.front();
  if (std::binary_search(core.core_vertices.begin(), core.core_vertices.end(), g.root()))
    start = g.root();

  std::vector<char> visited(n + 1, 0);
  std::vector<VertexId> parent(n + 1, 0);
  std::vector<int> parent_edge(n + 1, -1);
  std::deque<VertexId> queue{start};
  visited[start] = 1;

  VertexId cu = 0, cw = 0;
  int closing = -1;
  while (!queue.empty() && closing < 0) {
    VertexId u = queue.front();
    queue.pop_front();
    for (auto [w, ei] : adj[u]) {
      if (ei == parent_edge[u]) continue;
      if (u == w || visited[w]) {  // self-loop or cross edge closes a cycle
        cu = u;
        cw = w;
        closing = ei;
        break;
      }
      visited[w] = 1;
      parent[w] = u;
      parent_edge[w] = ei;
      queue.push_back(w);
    }
  }
  if (closing < 0) throw Error("smoothed core of a cyclic graph has no non-tree edge");

  // Core-level cycle as a vertex sequence plus the super-edge between each
  // consecutive pair (last edge closes back to the front).
  std::vector<VertexId> seq;
  std::vector<int> seq_edges;
  if (cu == cw) {
    seq = {cu};
    seq_edges = {closing};
  } else {
    std::vector<VertexId> up_u{cu};
    for (VertexId x = cu; x != start; x = parent[x]) up_u.push_back(parent[x]);
    std::vector<char> on_u(n + 1, 0);
    for (VertexId x : up_u) on_u[x] = 1;
    VertexId lca = cw;
    while (!on_u[lca]) lca = parent[lca];

    // lca .. cu, then cw .. just below lca; closing edge joins cu-cw and the
    // final parent edge joins back to lca.
    std::vector<VertexId> a_side;
    for (VertexId x = cu; x != lca; x = parent[x]) a_side.push_back(x);
    a_side.push_back(lca);
    std::reverse(a_side.begin(), a_side.end());

    seq = a_side;
    for (std::size_t i = 0; i + 1 < a_side.size(); ++i)
      seq_edges.push_back(parent_edge[a_side[i + 1]]);
    seq_edges.push_back(closing);
    for (VertexId x = cw; x != lca; x = parent[x]) {
      seq.push_back(x);
      seq_edges.push_back(parent_edge[x]);
    }
  }

  // Expand each super-edge along its annotated path; every segment
  // contributes its vertices up to (excluding) the far endpoint.
  Cycle cycle;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const SuperEdge& se = ses[static_cast<std::size_t>(seq_edges[i])];
    std::vector<VertexId> path = se.path;
    if (se.a != se.b && path.front() != seq[i]) std::reverse(path.begin(), path.end());
    path.pop_back();
    cycle.vertices.insert(cycle.vertices.end(), path.begin(), path.end());
  }
  if (cycle.vertices.size() < 3) throw Error("expanded cycle shorter than 3");
  return cycle;
}

}  // namespace fbtlab
