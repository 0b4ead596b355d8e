#include <algorithm>

#include "fbtlab/solver.hpp"

namespace fbtlab {

std::string branch_rule_name(BranchRule rule) {
  switch (rule) {
    case BranchRule::Components: return "components";
    case BranchRule::HighDegree: return "high-degree";
    case BranchRule::RootDegree: return "root-degree";
    case BranchRule::DegreeTwo: return "degree-two";
    case BranchRule::RootForcedSingleton: return "root-forced-singleton";
    case BranchRule::CycleBreak: return "cycle-break";
    case BranchRule::Done: return "done";
    case BranchRule::Infeasible: return "infeasible";
  }
  return "?";
}

void SearchStats::merge(const SearchStats& other) {
  nodes_expanded += other.nodes_expanded;
  max_depth = std::max(max_depth, other.max_depth);
  for (int i = 0; i < kBranchRuleCount; ++i) rule_counts[i] += other.rule_counts[i];
}

namespace {

// Connected, max degree three, no non-root vertex of degree two. Holds by
// rule exhaustion whenever CycleBreak or Done fires; checked anyway.
void require_nice(const RootedGraph& g) {
  for (VertexId v = 1; v <= g.vertex_count(); ++v) {
    int d = g.degree(v);
    if (d > 3) throw Error("nice-state violation: degree above three");
    if (v != g.root() && d == 2) throw Error("nice-state violation: non-root degree-two vertex");
  }
  if (static_cast<int>(component_of_root(g).size()) != g.vertex_count())
    throw Error("nice-state violation: disconnected");
}

}  // namespace

DvBranchChoice select_branch_dv(const RootedGraph& g) {
  const int n = g.vertex_count();
  const VertexId root = g.root();

  std::vector<VertexId> comp = component_of_root(g);
  if (static_cast<int>(comp.size()) < n) {
    std::vector<char> in(n + 1, 0);
    for (VertexId v : comp) in[v] = 1;
    std::vector<VertexId> out;
    for (VertexId v = 1; v <= n; ++v)
      if (!in[v]) out.push_back(v);
    return {BranchRule::Components, {std::move(out)}};
  }

  if (n > 1 && g.degree(root) <= 1) {
    // The root's degree never grows back, so the only reachable full binary
    // tree is the root alone.
    std::vector<VertexId> rest;
    for (VertexId v = 1; v <= n; ++v)
      if (v != root) rest.push_back(v);
    return {BranchRule::RootForcedSingleton, {std::move(rest)}};
  }

  for (VertexId v = 1; v <= n; ++v) {
    if (v == root || g.degree(v) < 4) continue;
    std::vector<std::vector<VertexId>> cands{{v}};
    int taken = 0;
    for (VertexId w : g.neighbors(v)) {
      if (w == root) continue;
      cands.push_back({w});
      if (++taken == 4) break;
    }
    return {BranchRule::HighDegree, std::move(cands)};
  }

  if (g.degree(root) >= 3) {
    std::vector<std::vector<VertexId>> cands;
    for (int i = 0; i < 3; ++i) cands.push_back({g.neighbors(root)[i]});
    return {BranchRule::RootDegree, std::move(cands)};
  }

  for (VertexId v = 1; v <= n; ++v) {
    if (v == root || g.degree(v) != 2) continue;
    std::vector<std::vector<VertexId>> cands{{v}};
    for (VertexId w : g.neighbors(v))
      if (w != root) cands.push_back({w});
    return {BranchRule::DegreeTwo, std::move(cands)};
  }

  require_nice(g);
  if (g.edge_count() == n - 1) {
    if (!is_full_binary_tree(g)) throw Error("nice acyclic graph is not a full binary tree");
    return {BranchRule::Done, {}};
  }

  std::optional<Cycle> cycle = find_cycle(g);
  if (!cycle) throw Error("cyclic graph reported no cycle");
  std::vector<VertexId> verts = cycle->vertices;
  std::sort(verts.begin(), verts.end());
  std::vector<std::vector<VertexId>> cands;
  for (VertexId v : verts)
    if (v != root) cands.push_back({v});
  return {BranchRule::CycleBreak, std::move(cands)};
}

namespace {

struct DvSearch {
  const RootedGraph* original = nullptr;
  std::optional<std::uint64_t> node_limit;
  SearchStats stats;
  bool limit_hit = false;
  std::vector<VertexId> chosen;  // original ids along the current path

  bool dfs(const RootedGraph& g, const std::vector<VertexId>& orig, Weight remaining,
           std::uint64_t depth) {
    if (node_limit && stats.nodes_expanded >= *node_limit) {
      limit_hit = true;
      return false;
    }
    ++stats.nodes_expanded;
    stats.max_depth = std::max(stats.max_depth, depth);

    DvBranchChoice choice = select_branch_dv(g);
    ++stats.rule_counts[static_cast<int>(choice.rule)];
    if (choice.rule == BranchRule::Done) return true;

    for (const auto& cand : choice.candidates) {
      Weight w = 0;
      for (VertexId v : cand) w += g.vertex_weight(v);
      if (w > remaining) continue;  // budget exhausted

      VertexDeletion del = delete_vertices(g, cand);
      std::vector<VertexId> next_orig(del.graph.vertex_count() + 1, 0);
      for (VertexId nv = 1; nv <= del.graph.vertex_count(); ++nv)
        next_orig[nv] = orig[del.old_of_new[nv]];
      for (VertexId v : cand) chosen.push_back(orig[v]);

      if (dfs(del.graph, next_orig, remaining - w, depth + 1)) return true;
      if (limit_hit) return false;
      chosen.resize(chosen.size() - cand.size());
    }
    return false;
  }
};

bool fbt_after_vertex_mask(const RootedGraph& g, const std::vector<char>& alive) {
  const int n = g.vertex_count();
  int alive_count = 0;
  for (VertexId v = 1; v <= n; ++v) alive_count += alive[v] ? 1 : 0;

  int edge_count = 0;
  std::vector<int> deg(n + 1, 0);
  for (const Edge& e : g.edges()) {
    if (!alive[e.u] || !alive[e.v]) continue;
    ++edge_count;
    ++deg[e.u];
    ++deg[e.v];
  }
  if (edge_count != alive_count - 1) return false;

  // Reachability from the root within the mask.
  std::vector<char> seen(n + 1, 0);
  std::vector<VertexId> stack{g.root()};
  seen[g.root()] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (!alive[w] || seen[w]) continue;
      seen[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  if (reached != alive_count) return false;
  if (alive_count == 1) return true;
  if (deg[g.root()] != 2) return false;
  for (VertexId v = 1; v <= n; ++v) {
    if (!alive[v] || v == g.root()) continue;
    if (deg[v] != 1 && deg[v] != 3) return false;
  }
  return true;
}

}  // namespace

DvSolveResult solve_dv(const DeletionInstance& instance, const SolveOptions& options) {
  if (instance.variant != Variant::DV) throw Error("solve_dv requires a DV instance");
  const RootedGraph& g = instance.graph;

  DvSearch search;
  search.original = &g;
  search.node_limit = options.node_limit;

  std::vector<VertexId> identity(g.vertex_count() + 1);
  for (VertexId v = 0; v <= g.vertex_count(); ++v) identity[v] = v;

  bool found = search.dfs(g, identity, instance.budget, 0);
  DvSolveResult result;
  result.stats = search.stats;
  if (found) {
    DvSolution sol;
    sol.deleted = search.chosen;
    std::sort(sol.deleted.begin(), sol.deleted.end());
    for (VertexId v : sol.deleted) sol.total_weight += g.vertex_weight(v);
    result.status = SolveStatus::Sat;
    result.solution = std::move(sol);
  } else {
    result.status = search.limit_hit ? SolveStatus::NodeLimit : SolveStatus::Unsat;
  }
  return result;
}

DvSolveResult optimize_dv(const DeletionInstance& instance, const SolveOptions& options) {
  DvSolveResult total;
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
    DvSolveResult r = solve_dv(trial, opts);
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

std::optional<DvSolution> brute_force_dv(const DeletionInstance& instance) {
  if (instance.variant != Variant::DV) throw Error("brute_force_dv requires a DV instance");
  const RootedGraph& g = instance.graph;
  const int n = g.vertex_count();
  if (n > 20) throw TooLargeError("brute_force_dv is guarded at 20 vertices");

  std::vector<VertexId> others;
  for (VertexId v = 1; v <= n; ++v)
    if (v != g.root()) others.push_back(v);

  std::optional<DvSolution> best;
  std::vector<char> alive(n + 1, 1);
  const std::uint32_t masks = 1u << others.size();
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    std::vector<VertexId> subset;
    Weight w = 0;
    for (std::size_t i = 0; i < others.size(); ++i) alive[others[i]] = 1;
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (mask & (1u << i)) {
        subset.push_back(others[i]);
        alive[others[i]] = 0;
        w += g.vertex_weight(others[i]);
      }
    }
    if (!fbt_after_vertex_mask(g, alive)) continue;
    if (!best || w < best->total_weight ||
        (w == best->total_weight && subset < best->deleted)) {
      best = DvSolution{std::move(subset), w};
    }
  }
  if (best && best->total_weight <= instance.budget) return best;
  return std::nullopt;
}

bool verify_dv(const DeletionInstance& instance, const DvSolution& s) {
  const RootedGraph& g = instance.graph;
  std::vector<VertexId> del = s.deleted;
  std::sort(del.begin(), del.end());
  if (std::adjacent_find(del.begin(), del.end()) != del.end()) return false;

  Weight w = 0;
  for (VertexId v : del) {
    if (!g.has_vertex(v) || v == g.root()) return false;
    w += g.vertex_weight(v);
  }
  if (w != s.total_weight || w > instance.budget) return false;
  return is_full_binary_tree(delete_vertices(g, del).graph);
}

}  // namespace fbtlab
