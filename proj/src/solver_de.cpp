#include <algorithm>
#include <bit>

#include "fbtlab/solver.hpp"

namespace fbtlab {

namespace {

bool degrees_valid_for_fbt(const RootedGraph& g) {
  if (g.vertex_count() == 1) return false;  // handled by Done directly
  if (g.degree(g.root()) != 2) return false;
  for (VertexId v = 1; v <= g.vertex_count(); ++v) {
    if (v == g.root()) continue;
    int d = g.degree(v);
    if (d != 1 && d != 3) return false;
  }
  return true;
}

std::vector<Edge> incident_edges_sorted(const RootedGraph& g, VertexId v) {
  std::vector<Edge> out;
  for (VertexId w : g.neighbors(v)) out.emplace_back(v, w);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

DeBranchChoice select_branch_de(const RootedGraph& g) {
  const int n = g.vertex_count();
  const VertexId root = g.root();

  if (n > 1) {
    if (static_cast<int>(component_of_root(g).size()) < n)
      return {BranchRule::Infeasible, {}};
    if (g.degree(root) <= 1) return {BranchRule::Infeasible, {}};
    for (VertexId v = 1; v <= n; ++v)
      if (v != root && g.degree(v) == 0) return {BranchRule::Infeasible, {}};
  }

  for (VertexId v = 1; v <= n; ++v) {
    if (v == root || g.degree(v) < 4) continue;
    std::vector<Edge> inc = incident_edges_sorted(g, v);
    std::vector<std::vector<Edge>> cands;
    for (int i = 0; i < 4; ++i) cands.push_back({inc[i]});
    return {BranchRule::HighDegree, std::move(cands)};
  }

  if (g.degree(root) >= 3) {
    std::vector<Edge> inc = incident_edges_sorted(g, root);
    std::vector<std::vector<Edge>> cands;
    for (int i = 0; i < 3; ++i) cands.push_back({inc[i]});
    return {BranchRule::RootDegree, std::move(cands)};
  }

  for (VertexId v = 1; v <= n; ++v) {
    if (v == root || g.degree(v) != 2) continue;
    std::vector<Edge> inc = incident_edges_sorted(g, v);
    return {BranchRule::DegreeTwo, {{inc[0]}, {inc[1]}}};
  }

  if (degrees_valid_for_fbt(g) && g.edge_count() >= n) {
    std::optional<Cycle> cycle = find_cycle(g);
    if (!cycle) throw Error("cyclic graph reported no cycle");
    std::vector<Edge> cyc_edges;
    for (std::size_t i = 0; i < cycle->vertices.size(); ++i) {
      VertexId a = cycle->vertices[i];
      VertexId b = cycle->vertices[(i + 1) % cycle->vertices.size()];
      cyc_edges.emplace_back(a, b);
    }
    std::sort(cyc_edges.begin(), cyc_edges.end());
    std::vector<std::vector<Edge>> cands;
    for (const Edge& e : cyc_edges) cands.push_back({e});
    return {BranchRule::CycleBreak, std::move(cands)};
  }

  if (!is_full_binary_tree(g)) throw Error("exhausted edge-deletion rules off a full binary tree");
  return {BranchRule::Done, {}};
}

namespace {

struct DeSearch {
  std::optional<std::uint64_t> node_limit;
  SearchStats stats;
  bool limit_hit = false;
  std::vector<Edge> chosen;

  bool dfs(const RootedGraph& g, Weight remaining, std::uint64_t depth) {
    if (node_limit && stats.nodes_expanded >= *node_limit) {
      limit_hit = true;
      return false;
    }
    ++stats.nodes_expanded;
    stats.max_depth = std::max(stats.max_depth, depth);

    DeBranchChoice choice = select_branch_de(g);
    ++stats.rule_counts[static_cast<int>(choice.rule)];
    if (choice.rule == BranchRule::Done) return true;
    if (choice.rule == BranchRule::Infeasible) return false;

    for (const auto& cand : choice.candidates) {
      Weight w = 0;
      for (const Edge& e : cand) w += g.edge_weight(e);
      if (w > remaining) continue;

      RootedGraph next = delete_edges(g, cand);
      chosen.insert(chosen.end(), cand.begin(), cand.end());
      if (dfs(next, remaining - w, depth + 1)) return true;
      if (limit_hit) return false;
      chosen.resize(chosen.size() - cand.size());
    }
    return false;
  }
};

bool fbt_after_edge_mask(const RootedGraph& g, const std::vector<char>& removed) {
  const int n = g.vertex_count();
  std::vector<int> deg(n + 1, 0);
  const auto& edges = g.edges();
  int kept = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (removed[i]) continue;
    ++kept;
    ++deg[edges[i].u];
    ++deg[edges[i].v];
  }
  if (kept != n - 1) return false;
  if (n == 1) return true;
  if (deg[g.root()] != 2) return false;
  for (VertexId v = 1; v <= n; ++v) {
    if (v == g.root()) continue;
    if (deg[v] != 1 && deg[v] != 3) return false;
  }
  // Connectivity over kept edges.
  std::vector<std::vector<VertexId>> adj(n + 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (removed[i]) continue;
    adj[edges[i].u].push_back(edges[i].v);
    adj[edges[i].v].push_back(edges[i].u);
  }
  std::vector<char> seen(n + 1, 0);
  std::vector<VertexId> stack{g.root()};
  seen[g.root()] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == n;
}

}  // namespace

DeSolveResult solve_de(const DeletionInstance& instance, const SolveOptions& options) {
  if (instance.variant != Variant::DE) throw Error("solve_de requires a DE instance");
  DeSolveResult result;
  if (instance.graph.vertex_count() % 2 == 0) {
    // A spanning full binary tree has an odd vertex count.
    result.status = SolveStatus::Unsat;
    return result;
  }

  DeSearch search;
  search.node_limit = options.node_limit;
  bool found = search.dfs(instance.graph, instance.budget, 0);
  result.stats = search.stats;
  if (found) {
    DeSolution sol;
    sol.deleted = search.chosen;
    std::sort(sol.deleted.begin(), sol.deleted.end());
    for (const Edge& e : sol.deleted) sol.total_weight += instance.graph.edge_weight(e);
    result.status = SolveStatus::Sat;
    result.solution = std::move(sol);
  } else {
    result.status = search.limit_hit ? SolveStatus::NodeLimit : SolveStatus::Unsat;
  }
  return result;
}

DeSolveResult optimize_de(const DeletionInstance& instance, const SolveOptions& options) {
  DeSolveResult total;
  for (Weight b = 0; b <= instance.budget; ++b) {
    DeletionInstance trial{instance.graph, instance.variant, b};
    SolveOptions opts = options;
    if (opts.node_limit) {
      if (total.stats.nodes_expanded >= *opts.node_limit) {
        total.status = SolveStatus::NodeLimit;
        return total;
      }
      opts.node_limit = *opts.node_limit - total.stats.nodes_expanded;
    }
    DeSolveResult r = solve_de(trial, opts);
    total.stats.merge(r.stats);
    if (r.status == SolveStatus::Sat) {
      total.status = SolveStatus::Sat;
      total.solution = std::move(r.solution);
      return total;
    }
    if (r.status == SolveStatus::NodeLimit) {
      total.status = SolveStatus::NodeLimit;
      return total;
    }
  }
  total.status = SolveStatus::Unsat;
  return total;
}

std::optional<DeSolution> brute_force_de(const DeletionInstance& instance) {
  if (instance.variant != Variant::DE) throw Error("brute_force_de requires a DE instance");
  const RootedGraph& g = instance.graph;
  const int m = g.edge_count();
  if (m > 22) throw TooLargeError("brute_force_de is guarded at 22 edges");

  const int need = m - (g.vertex_count() - 1);
  if (need < 0) return std::nullopt;

  std::optional<DeSolution> best;
  std::vector<char> removed(m, 0);
  const std::uint32_t masks = 1u << m;
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    // Any remainder with an edge count other than n-1 cannot be a tree.
    if (std::popcount(mask) != need) continue;
    Weight w = 0;
    std::vector<Edge> subset;
    for (int i = 0; i < m; ++i) {
      removed[i] = (mask >> i) & 1u;
      if (removed[i]) {
        subset.push_back(g.edges()[i]);
        w += g.edge_weights()[i];
      }
    }
    if (!fbt_after_edge_mask(g, removed)) continue;
    if (!best || w < best->total_weight ||
        (w == best->total_weight && subset < best->deleted)) {
      best = DeSolution{std::move(subset), w};
    }
  }
  if (best && best->total_weight <= instance.budget) return best;
  return std::nullopt;
}

bool verify_de(const DeletionInstance& instance, const DeSolution& s) {
  const RootedGraph& g = instance.graph;
  std::vector<Edge> del = s.deleted;
  std::sort(del.begin(), del.end());
  if (std::adjacent_find(del.begin(), del.end()) != del.end()) return false;

  Weight w = 0;
  for (const Edge& e : del) {
    if (!g.has_edge(e.u, e.v)) return false;
    w += g.edge_weight(e);
  }
  if (w != s.total_weight || w > instance.budget) return false;
  return is_full_binary_tree(delete_edges(g, del));
}

}  // namespace fbtlab
