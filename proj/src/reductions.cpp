#include "fbtlab/reductions.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace fbtlab {

namespace {

int smallest_power_of_two_at_least(int x) {
  int L = 1;
  while (L < x) L *= 2;
  return L;
}

std::string vname(VertexId v) { return std::to_string(v); }

}  // namespace

bool McisInstance::has_edge(VertexId a, VertexId b) const {
  if (a == b) return false;
  Edge e(a, b);
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

ValidationReport validate_mcis(const McisInstance& m) {
  ValidationReport report;
  if (m.vertex_count < 1) report.fail("vertex count must be positive");
  if (m.classes.empty()) report.fail("at least one color class required");

  std::vector<int> owner(m.vertex_count + 1, 0);
  std::size_t expected = m.classes.empty() ? 0 : m.classes[0].size();
  for (std::size_t i = 0; i < m.classes.size(); ++i) {
    if (m.classes[i].size() != expected)
      report.fail("class " + std::to_string(i + 1) + " has size " +
                  std::to_string(m.classes[i].size()) + ", expected " +
                  std::to_string(expected));
    for (VertexId v : m.classes[i]) {
      if (v < 1 || v > m.vertex_count) {
        report.fail("class " + std::to_string(i + 1) + ": vertex " + vname(v) + " out of range");
        continue;
      }
      if (owner[v] != 0)
        report.fail("vertex " + vname(v) + " appears in classes " + std::to_string(owner[v]) +
                    " and " + std::to_string(i + 1));
      owner[v] = static_cast<int>(i + 1);
    }
  }
  for (VertexId v = 1; v <= m.vertex_count; ++v)
    if (owner[v] == 0) report.fail("vertex " + vname(v) + " belongs to no class");

  std::set<Edge> seen;
  for (const Edge& e : m.edges) {
    if (e.u < 1 || e.v > m.vertex_count) report.fail("edge endpoint out of range");
    else if (e.u == e.v) report.fail("self-loop at " + vname(e.u));
    else if (!seen.insert(e).second) report.fail("duplicate edge " + vname(e.u) + "-" + vname(e.v));
  }
  return report;
}

std::optional<std::vector<VertexId>> brute_force_mcis(const McisInstance& m) {
  ValidationReport rep = validate_mcis(m);
  if (!rep.ok) throw Error("invalid MCIS instance: " + rep.violations[0]);

  const int k = m.num_classes();
  const int n = m.class_size();
  double combos = 1;
  for (int i = 0; i < k; ++i) combos *= n;
  if (combos > 1e6) throw TooLargeError("brute_force_mcis is guarded at n^k <= 10^6");

  std::optional<std::vector<VertexId>> best;
  std::vector<int> pick(k, 0);
  while (true) {
    std::vector<VertexId> set;
    for (int i = 0; i < k; ++i) set.push_back(m.classes[i][pick[i]]);
    bool independent = true;
    for (int i = 0; i < k && independent; ++i)
      for (int j = i + 1; j < k; ++j)
        if (m.has_edge(set[i], set[j])) {
          independent = false;
          break;
        }
    if (independent) {
      std::sort(set.begin(), set.end());
      if (!best || set < *best) best = set;
    }
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == n - 1) pick[pos--] = 0;
    if (pos < 0) break;
    ++pick[pos];
  }
  return best;
}

std::pair<DeletionInstance, DvReductionMap> mcis_to_fbtdv(const McisInstance& m) {
  ValidationReport rep = validate_mcis(m);
  if (!rep.ok) throw Error("invalid MCIS instance: " + rep.violations[0]);

  const int k = m.num_classes();
  const int n = m.class_size();
  const int nk = n * k;
  const int L = smallest_power_of_two_at_least(std::max(2, 2 * nk));
  const int backbone_n = 2 * L - 1;

  std::vector<Edge> edges;
  for (int i = 1; i < L; ++i) {
    edges.emplace_back(i, 2 * i);
    edges.emplace_back(i, 2 * i + 1);
  }

  DvReductionMap map;
  map.backbone_root = 1;
  map.backbone_leaves = L;
  map.num_classes = k;
  map.class_size = n;
  map.budget = nk;
  map.gadgets.assign(k, {});

  std::vector<VertexId> essential_of(m.vertex_count + 1, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) {
      const int t = i * n + j;
      DvGadget gadget;
      gadget.a = L + 2 * t;
      gadget.b = L + 2 * t + 1;
      gadget.p = (L + 2 * t) / 2;
      gadget.u = 2 * L + t;
      gadget.original = m.classes[i][j];
      essential_of[gadget.original] = gadget.u;
      edges.emplace_back(gadget.p, gadget.u);
      map.gadgets[i].push_back(gadget);
    }
  }

  VertexId next = 2 * L + nk;
  for (int i = 0; i < k; ++i) {
    VertexId gx = next++;
    VertexId gy = next++;
    map.guard_x.push_back(gx);
    map.guard_y.push_back(gy);
    for (const DvGadget& gadget : map.gadgets[i]) {
      edges.emplace_back(gx, gadget.u);
      edges.emplace_back(gy, gadget.u);
    }
  }

  for (const Edge& e : m.edges)
    edges.emplace_back(essential_of[e.u], essential_of[e.v]);

  const int total = backbone_n + nk + 2 * k;
  RootedGraph graph(total, map.backbone_root, std::move(edges));
  return {make_instance(std::move(graph), Variant::DV, nk), std::move(map)};
}

ValidationReport audit_dv_reduction(const DeletionInstance& instance, const DvReductionMap& map,
                                    const McisInstance& m) {
  ValidationReport report;
  const RootedGraph& g = instance.graph;
  const int n = map.class_size;
  const int k = map.num_classes;

  if (instance.variant != Variant::DV) report.fail("variant is not DV");
  if (instance.budget != static_cast<Weight>(n) * k)
    report.fail("budget is not nk");
  if (g.root() != map.backbone_root) report.fail("instance root is not the backbone root");

  for (int i = 0; i < k; ++i) {
    for (const DvGadget& gadget : map.gadgets[i]) {
      const int expected = gadget.p == map.backbone_root ? 3 : 4;
      if (g.degree(gadget.p) != expected)
        report.fail("parent " + vname(gadget.p) + " has degree " +
                    std::to_string(g.degree(gadget.p)) + ", expected " +
                    std::to_string(expected));
      for (VertexId child : {gadget.a, gadget.b, gadget.u})
        if (!g.has_edge(gadget.p, child))
          report.fail("missing edge " + vname(gadget.p) + "-" + vname(child));
      if (g.degree(gadget.a) != 1 || g.degree(gadget.b) != 1)
        report.fail("partner of " + vname(gadget.p) + " is not a leaf");
    }
  }

  for (int i = 0; i < k; ++i) {
    for (VertexId guard : {map.guard_x[i], map.guard_y[i]}) {
      if (g.degree(guard) != n)
        report.fail("guard " + vname(guard) + " has degree " +
                    std::to_string(g.degree(guard)) + ", expected " + std::to_string(n));
      for (const DvGadget& gadget : map.gadgets[i])
        if (!g.has_edge(guard, gadget.u))
          report.fail("guard " + vname(guard) + " misses essential " + vname(gadget.u));
    }
  }

  std::vector<VertexId> essential_of(m.vertex_count + 1, 0);
  for (const auto& cls : map.gadgets)
    for (const DvGadget& gadget : cls) essential_of[gadget.original] = gadget.u;
  for (VertexId a = 1; a <= m.vertex_count; ++a)
    for (VertexId b = a + 1; b <= m.vertex_count; ++b)
      if (m.has_edge(a, b) != g.has_edge(essential_of[a], essential_of[b]))
        report.fail("essential adjacency differs from the source graph at " + vname(a) + "," +
                    vname(b));
  return report;
}

DvSolution forward_dv_solution(const McisInstance& m, const std::vector<VertexId>& independent_set,
                               const DvReductionMap& map) {
  const int k = map.num_classes;
  if (static_cast<int>(independent_set.size()) != k)
    throw InvalidWitnessError("expected one vertex per class");
  std::vector<char> selected(m.vertex_count + 1, 0);
  for (std::size_t i = 0; i < independent_set.size(); ++i) {
    VertexId v = independent_set[i];
    if (v < 1 || v > m.vertex_count) throw InvalidWitnessError("vertex out of range");
    if (std::find(m.classes[i].begin(), m.classes[i].end(), v) == m.classes[i].end())
      throw InvalidWitnessError("vertex " + vname(v) + " is not in class " + std::to_string(i + 1));
    selected[v] = 1;
  }
  for (VertexId a : independent_set)
    for (VertexId b : independent_set)
      if (a < b && m.has_edge(a, b))
        throw InvalidWitnessError("set is not independent: edge " + vname(a) + "-" + vname(b));

  DvSolution s;
  for (const auto& cls : map.gadgets) {
    for (const DvGadget& gadget : cls)
      s.deleted.push_back(selected[gadget.original] ? gadget.a : gadget.u);
  }
  std::sort(s.deleted.begin(), s.deleted.end());
  s.total_weight = static_cast<Weight>(s.deleted.size());
  return s;
}

std::vector<VertexId> lift_dv_solution(const DvReductionMap& map, const DvSolution& s,
                                       const McisInstance* m) {
  std::set<VertexId> deleted(s.deleted.begin(), s.deleted.end());
  std::vector<VertexId> out;
  for (int i = 0; i < map.num_classes; ++i) {
    VertexId survivor = 0;
    for (const DvGadget& gadget : map.gadgets[i]) {
      if (!deleted.count(gadget.u)) {
        survivor = gadget.original;
        break;
      }
    }
    if (survivor == 0)
      throw LiftFailureError("class " + std::to_string(i + 1) + " has no surviving essential");
    out.push_back(survivor);
  }
  if (m) {
    for (VertexId a : out)
      for (VertexId b : out)
        if (a < b && m->has_edge(a, b))
          throw LiftFailureError("lifted set is not independent: edge " + vname(a) + "-" +
                                 vname(b));
  }
  return out;
}

namespace {

std::vector<Edge> main_passive_edges(const MainGadget& g) {
  return {Edge(g.z, g.u), Edge(g.z, g.v)};
}

std::vector<Edge> main_active_edges(const MainGadget& g) {
  return {Edge(g.u, g.x), Edge(g.v, g.x), Edge(g.u, g.p), Edge(g.v, g.q),
          Edge(g.p, g.A), Edge(g.p, g.B), Edge(g.q, g.Ap), Edge(g.q, g.Bp),
          Edge(g.A, g.y), Edge(g.Bp, g.y)};
}

std::vector<Edge> main_positive_witness(const MainGadget& g) {
  return {Edge(g.v, g.x), Edge(g.v, g.q), Edge(g.q, g.Ap), Edge(g.A, g.y)};
}

std::vector<Edge> main_negative_witness(const MainGadget& g) {
  return {Edge(g.u, g.x), Edge(g.u, g.p), Edge(g.p, g.B), Edge(g.Bp, g.y)};
}

std::vector<Edge> shadow_passive_edges(const ShadowGadget& g) {
  return {Edge(g.p, g.u), Edge(g.p, g.v), Edge(g.q, g.w), Edge(g.q, g.c), Edge(g.w, g.z)};
}

std::vector<Edge> shadow_active_edges(const ShadowGadget& g) {
  return {Edge(g.u, g.x), Edge(g.u, g.y), Edge(g.v, g.x), Edge(g.v, g.y),
          Edge(g.u, g.a), Edge(g.w, g.a), Edge(g.v, g.b), Edge(g.w, g.b)};
}

// Deleting these leaves the positive entry point v at internal degree two
// (a positive signal), so it marks the variable true.
std::vector<Edge> shadow_true_witness(const ShadowGadget& g) {
  return {Edge(g.v, g.x), Edge(g.v, g.y), Edge(g.u, g.a), Edge(g.w, g.b)};
}

std::vector<Edge> shadow_false_witness(const ShadowGadget& g) {
  return {Edge(g.u, g.x), Edge(g.u, g.y), Edge(g.v, g.b), Edge(g.w, g.a)};
}

}  // namespace

std::pair<DeletionInstance, DeReductionMap> lnes_to_fbtde(const LnesInstance& l) {
  ValidationReport rep = validate_chain(l);
  if (!rep.ok) throw Error("invalid chain: " + rep.violations[0]);

  const int p = l.p;
  const Weight budget = 28 * static_cast<Weight>(p);
  const Weight heavy = budget + 1;
  const int L = smallest_power_of_two_at_least(9 * p);

  DeReductionMap map;
  map.backbone_root = 1;
  map.backbone_leaves = L;
  map.p = p;
  map.budget = budget;

  std::vector<Edge> edges;
  std::vector<Weight> weights;
  auto add_edge = [&](VertexId a, VertexId b, Weight w) {
    edges.emplace_back(a, b);
    weights.push_back(w);
  };

  for (int i = 1; i < L; ++i) {
    add_edge(i, 2 * i, heavy);
    add_edge(i, 2 * i + 1, heavy);
  }

  VertexId next = 2 * L;
  for (int i = 1; i <= p; ++i) {
    MainGadget g;
    g.z = L + (i - 1);
    g.u = next++;
    g.v = next++;
    g.x = next++;
    g.y = next++;
    g.p = next++;
    g.q = next++;
    g.A = next++;
    g.B = next++;
    g.Ap = next++;
    g.Bp = next++;
    for (const Edge& e : main_passive_edges(g)) add_edge(e.u, e.v, heavy);
    for (const Edge& e : main_active_edges(g)) add_edge(e.u, e.v, 1);
    map.mains.push_back(g);
  }

  for (int t = 1; t <= 4 * p; ++t) {
    ShadowGadget g;
    g.p = L + p + 2 * (t - 1);
    g.q = g.p + 1;
    g.u = next++;
    g.v = next++;
    g.w = next++;
    g.x = next++;
    g.y = next++;
    g.a = next++;
    g.b = next++;
    g.c = next++;
    g.z = next++;
    for (const Edge& e : shadow_passive_edges(g)) add_edge(e.u, e.v, heavy);
    for (const Edge& e : shadow_active_edges(g)) add_edge(e.u, e.v, 1);
    map.shadows.push_back(g);
  }

  // Core-clause externals: each clause vertex reaches the negative entry
  // point of its shadow's gadget.
  auto shadow_u = [&](int sid) { return map.shadows[sid - p - 1].u; };
  auto shadow_v = [&](int sid) { return map.shadows[sid - p - 1].v; };
  for (int i = 1; i <= p; ++i) {
    const MainGadget& g = map.mains[i - 1];
    const CoreEntry& c = l.core[i - 1];
    add_edge(g.A, shadow_u(c.sA), 1);
    add_edge(g.B, shadow_u(c.sB), 1);
    add_edge(g.Ap, shadow_u(c.sAp), 1);
    add_edge(g.Bp, shadow_u(c.sBp), 1);
  }

  for (int j = 1; j <= p; ++j) {
    VertexId om = next++;
    VertexId omp = next++;
    map.omega.push_back(om);
    map.omega_p.push_back(omp);
    for (int sid : l.aux[j - 1]) {
      add_edge(om, shadow_v(sid), 1);
      add_edge(omp, shadow_v(sid), 1);
    }
  }

  const int total = next - 1;
  RootedGraph graph(total, map.backbone_root, std::move(edges), {}, std::move(weights));
  return {make_instance(std::move(graph), Variant::DE, budget), std::move(map)};
}

ValidationReport audit_de_reduction(const DeletionInstance& instance, const DeReductionMap& map) {
  ValidationReport report;
  const RootedGraph& g = instance.graph;
  const Weight heavy = map.budget + 1;

  if (instance.variant != Variant::DE) report.fail("variant is not DE");
  if (instance.budget != 28 * static_cast<Weight>(map.p)) report.fail("budget is not 28p");
  if (g.root() != map.backbone_root) report.fail("instance root is not the backbone root");

  auto expect_degree = [&](VertexId v, int want, const std::string& role) {
    if (g.degree(v) != want)
      report.fail(role + " " + vname(v) + " has degree " + std::to_string(g.degree(v)) +
                  ", expected " + std::to_string(want));
  };

  for (const MainGadget& mg : map.mains) {
    expect_degree(mg.z, 3, "main z");
    expect_degree(mg.u, 3, "main u");
    expect_degree(mg.v, 3, "main v");
    expect_degree(mg.p, 3, "main p");
    expect_degree(mg.q, 3, "main q");
    expect_degree(mg.x, 2, "main x");
    expect_degree(mg.y, 2, "main y");
    expect_degree(mg.A, 3, "main A");
    expect_degree(mg.B, 2, "main B");
    expect_degree(mg.Ap, 2, "main A'");
    expect_degree(mg.Bp, 3, "main B'");
  }
  for (const ShadowGadget& sg : map.shadows) {
    expect_degree(sg.p, 3, "shadow anchor p");
    expect_degree(sg.q, 3, "shadow anchor q");
    expect_degree(sg.u, 5, "shadow u");
    expect_degree(sg.v, 6, "shadow v");
    expect_degree(sg.w, 4, "shadow w");
    expect_degree(sg.c, 1, "shadow c");
    expect_degree(sg.z, 1, "shadow z");
    expect_degree(sg.x, 2, "shadow x");
    expect_degree(sg.y, 2, "shadow y");
    expect_degree(sg.a, 2, "shadow a");
    expect_degree(sg.b, 2, "shadow b");
  }
  for (VertexId om : map.omega) expect_degree(om, 4, "omega");
  for (VertexId om : map.omega_p) expect_degree(om, 4, "omega'");

  // The heavy edges are exactly the backbone plus the gadget passives.
  std::set<Edge> expected_heavy;
  for (int i = 1; i < map.backbone_leaves; ++i) {
    expected_heavy.insert(Edge(i, 2 * i));
    expected_heavy.insert(Edge(i, 2 * i + 1));
  }
  for (const MainGadget& mg : map.mains)
    for (const Edge& e : main_passive_edges(mg)) expected_heavy.insert(e);
  for (const ShadowGadget& sg : map.shadows)
    for (const Edge& e : shadow_passive_edges(sg)) expected_heavy.insert(e);

  const auto& edges = g.edges();
  const auto& weights = g.edge_weights();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const bool should_be_heavy = expected_heavy.count(edges[i]) != 0;
    const Weight want = should_be_heavy ? heavy : 1;
    if (weights[i] != want)
      report.fail("edge " + vname(edges[i].u) + "-" + vname(edges[i].v) + " has weight " +
                  std::to_string(weights[i]) + ", expected " + std::to_string(want));
  }
  return report;
}

DeSolution forward_de_solution(const LnesInstance& l, const Assignment& zeta,
                               const DeReductionMap& map) {
  if (zeta.size() != l.variable_count())
    throw InvalidWitnessError("assignment length does not match the chain");
  if (!check_near_exact(l, zeta))
    throw InvalidWitnessError("assignment is not near-exact satisfying");

  const int p = l.p;
  auto shadow_v = [&](int sid) { return map.shadows[sid - p - 1].v; };
  auto shadow_u = [&](int sid) { return map.shadows[sid - p - 1].u; };

  DeSolution s;
  auto add = [&](const Edge& e) { s.deleted.push_back(e); };

  for (int i = 1; i <= p; ++i) {
    const MainGadget& mg = map.mains[i - 1];
    const CoreEntry& c = l.core[i - 1];
    if (zeta.value(i)) {
      for (const Edge& e : main_positive_witness(mg)) add(e);
      add(Edge(mg.A, shadow_u(c.sA)));
      add(Edge(mg.B, shadow_u(c.sB)));
    } else {
      for (const Edge& e : main_negative_witness(mg)) add(e);
      add(Edge(mg.Ap, shadow_u(c.sAp)));
      add(Edge(mg.Bp, shadow_u(c.sBp)));
    }
  }

  for (int t = 1; t <= 4 * p; ++t) {
    const ShadowGadget& sg = map.shadows[t - 1];
    const auto witness = zeta.value(p + t) ? shadow_true_witness(sg) : shadow_false_witness(sg);
    for (const Edge& e : witness) add(e);
  }

  for (int j = 1; j <= p; ++j) {
    std::vector<int> true_shadows;
    for (int sid : l.aux[j - 1])
      if (zeta.value(sid)) true_shadows.push_back(sid);
    if (true_shadows.size() != 2)
      throw InvalidWitnessError("auxiliary clause without exactly two true shadows");
    std::sort(true_shadows.begin(), true_shadows.end());
    for (int sid : l.aux[j - 1]) {
      if (sid != true_shadows[0]) add(Edge(map.omega[j - 1], shadow_v(sid)));
      if (sid != true_shadows[1]) add(Edge(map.omega_p[j - 1], shadow_v(sid)));
    }
  }

  std::sort(s.deleted.begin(), s.deleted.end());
  s.total_weight = static_cast<Weight>(s.deleted.size());
  return s;
}

DeSolutionBreakdown classify_de_solution(const DeReductionMap& map, const DeSolution& s) {
  std::set<VertexId> omega_vertices(map.omega.begin(), map.omega.end());
  omega_vertices.insert(map.omega_p.begin(), map.omega_p.end());

  std::set<Edge> main_internal;
  std::set<VertexId> clause_vertices;
  for (const MainGadget& mg : map.mains) {
    for (const Edge& e : main_active_edges(mg)) main_internal.insert(e);
    for (const Edge& e : main_passive_edges(mg)) main_internal.insert(e);
    for (VertexId v : {mg.A, mg.B, mg.Ap, mg.Bp}) clause_vertices.insert(v);
  }
  std::set<Edge> shadow_internal;
  std::set<VertexId> shadow_entries;
  for (const ShadowGadget& sg : map.shadows) {
    for (const Edge& e : shadow_active_edges(sg)) shadow_internal.insert(e);
    for (const Edge& e : shadow_passive_edges(sg)) shadow_internal.insert(e);
    shadow_entries.insert(sg.u);
  }

  DeSolutionBreakdown out;
  for (const Edge& e : s.deleted) {
    if (omega_vertices.count(e.u) || omega_vertices.count(e.v)) {
      ++out.omega_edges;
    } else if (main_internal.count(e)) {
      ++out.main_edges;
    } else if ((clause_vertices.count(e.u) && shadow_entries.count(e.v)) ||
               (clause_vertices.count(e.v) && shadow_entries.count(e.u))) {
      ++out.main_edges;  // core-clause externals count with their gadget
    } else if (shadow_internal.count(e)) {
      ++out.shadow_edges;
    } else {
      ++out.other_edges;
    }
  }
  return out;
}

namespace {

std::vector<Edge> sorted_edges(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

Assignment lift_de_solution(const DeReductionMap& map, const DeSolution& s,
                            const LnesInstance* l) {
  const int p = map.p;
  std::set<Edge> deleted(s.deleted.begin(), s.deleted.end());
  auto deleted_among = [&](const std::vector<Edge>& edges) {
    std::vector<Edge> out;
    for (const Edge& e : edges)
      if (deleted.count(e)) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
  };

  Assignment zeta(std::vector<std::uint8_t>(5 * p, 0));
  for (int i = 1; i <= p; ++i) {
    const MainGadget& mg = map.mains[i - 1];
    if (!deleted_among(main_passive_edges(mg)).empty())
      throw LiftFailureError("main gadget " + std::to_string(i) + ": passive edge deleted");
    std::vector<Edge> pattern = deleted_among(main_active_edges(mg));
    if (pattern == sorted_edges(main_positive_witness(mg)))
      zeta.bits[i - 1] = 1;
    else if (pattern != sorted_edges(main_negative_witness(mg)))
      throw LiftFailureError("main gadget " + std::to_string(i) +
                             ": deletions match neither witness");
  }
  for (int t = 1; t <= 4 * p; ++t) {
    const ShadowGadget& sg = map.shadows[t - 1];
    if (!deleted_among(shadow_passive_edges(sg)).empty())
      throw LiftFailureError("shadow gadget " + std::to_string(t) + ": passive edge deleted");
    std::vector<Edge> pattern = deleted_among(shadow_active_edges(sg));
    if (pattern == sorted_edges(shadow_true_witness(sg)))
      zeta.bits[p + t - 1] = 1;
    else if (pattern != sorted_edges(shadow_false_witness(sg)))
      throw LiftFailureError("shadow gadget " + std::to_string(t) +
                             ": deletions match neither witness");
  }

  if (l && !check_near_exact(*l, zeta))
    throw LiftFailureError("lifted assignment is not near-exact satisfying");
  return zeta;
}

PlantedInstance gen_planted(Variant variant, int leaves, int noise, std::uint64_t seed) {
  if (leaves < 2) throw Error("gen_planted requires at least 2 leaves");
  if (noise < 0) throw Error("noise must be non-negative");

  std::mt19937_64 rng(seed);
  const int tree_n = 2 * leaves - 1;
  std::vector<Edge> edges;

  std::vector<VertexId> pool(leaves);
  for (int i = 0; i < leaves; ++i) pool[i] = i + 1;
  VertexId next = leaves + 1;
  while (pool.size() > 1) {
    std::size_t i = rng() % pool.size();
    VertexId c1 = pool[i];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
    std::size_t j = rng() % pool.size();
    VertexId c2 = pool[j];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
    edges.emplace_back(next, c1);
    edges.emplace_back(next, c2);
    pool.push_back(next++);
  }
  const VertexId root = pool[0];

  PlantedInstance out{DeletionInstance{RootedGraph(1, 1, {}), variant, 0}, {}, {}};
  if (variant == Variant::DV) {
    std::vector<VertexId> noise_vertices;
    for (int t = 0; t < noise; ++t) {
      VertexId nv = tree_n + 1 + t;
      noise_vertices.push_back(nv);
      int wanted = 1 + static_cast<int>(rng() % 4);
      std::set<VertexId> targets;
      while (static_cast<int>(targets.size()) < wanted)
        targets.insert(1 + static_cast<VertexId>(rng() % tree_n));
      for (VertexId t2 : targets) edges.emplace_back(nv, t2);
    }
    RootedGraph graph(tree_n + noise, root, std::move(edges));
    out.instance = make_instance(std::move(graph), Variant::DV, noise);
    out.planted_dv = DvSolution{noise_vertices, noise};
  } else {
    std::set<Edge> present(edges.begin(), edges.end());
    std::vector<Edge> extra;
    long long attempts = 0;
    while (static_cast<int>(extra.size()) < noise) {
      if (++attempts > 100000)
        throw Error("gen_planted could not place the requested extra edges");
      VertexId a = 1 + static_cast<VertexId>(rng() % tree_n);
      VertexId b = 1 + static_cast<VertexId>(rng() % tree_n);
      if (a == b) continue;
      Edge e(a, b);
      if (!present.insert(e).second) continue;
      extra.push_back(e);
      edges.push_back(e);
    }
    std::sort(extra.begin(), extra.end());
    RootedGraph graph(tree_n, root, std::move(edges));
    out.instance = make_instance(std::move(graph), Variant::DE, noise);
    out.planted_de = DeSolution{extra, noise};
  }
  return out;
}

}  // namespace fbtlab
