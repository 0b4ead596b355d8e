#include <map>
#include <set>

#include "doctest.h"
#include "fbtlab/graph.hpp"
#include "support.hpp"

using namespace fbtlab;
using namespace fbtlab::testing;

TEST_CASE("full binary tree verifier on the base shapes") {
  CHECK(is_full_binary_tree(RootedGraph(1, 1, {})));
  CHECK(is_full_binary_tree(make_graph(3, 2, {{1, 2}, {2, 3}})));   // path rooted at center
  CHECK_FALSE(is_full_binary_tree(make_graph(3, 1, {{1, 2}, {2, 3}})));  // rooted at an end
  CHECK_FALSE(is_full_binary_tree(make_graph(2, 1, {{1, 2}})));     // even vertex count
  CHECK_FALSE(is_full_binary_tree(make_graph(4, 1, {{1, 2}, {1, 3}, {1, 4}})));
  CHECK(is_full_binary_tree(
      make_graph(7, 1, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}})));
  CHECK_FALSE(is_full_binary_tree(make_graph(3, 1, {{1, 2}, {1, 3}, {2, 3}})));  // cycle
}

TEST_CASE("component of root") {
  RootedGraph g = make_graph(4, 1, {{1, 2}, {3, 4}});
  CHECK(component_of_root(g) == std::vector<VertexId>{1, 2});
  RootedGraph h = make_graph(3, 2, {{1, 2}, {2, 3}});
  CHECK(component_of_root(h) == std::vector<VertexId>{1, 2, 3});
  CHECK(component_of_root(RootedGraph(1, 1, {})) == std::vector<VertexId>{1});
}

TEST_CASE("vertex deletion") {
  RootedGraph tri = make_graph(3, 1, {{1, 2}, {1, 3}, {2, 3}});

  SUBCASE("triangle minus both non-root vertices") {
    VertexDeletion d = delete_vertices(tri, {2, 3});
    CHECK(d.graph.vertex_count() == 1);
    CHECK(d.graph.root() == 1);
    CHECK(d.graph.edge_count() == 0);
  }
  SUBCASE("empty deletion is the identity") {
    VertexDeletion d = delete_vertices(tri, {});
    CHECK(d.graph == tri);
    CHECK(d.old_of_new == std::vector<VertexId>{0, 1, 2, 3});
  }
  SUBCASE("path minus a leaf") {
    RootedGraph path = make_graph(3, 2, {{1, 2}, {2, 3}});
    VertexDeletion d = delete_vertices(path, {1});
    CHECK(d.graph.vertex_count() == 2);
    CHECK(d.graph.root() == 1);  // old 2, re-indexed
    CHECK(d.graph.has_edge(1, 2));
    CHECK(d.new_of_old == std::vector<VertexId>{0, 0, 1, 2});
  }
  SUBCASE("root deletion is refused") {
    CHECK_THROWS_AS(delete_vertices(tri, {1}), RootDeletionError);
  }
  SUBCASE("weights survive re-indexing") {
    RootedGraph g(3, 1, {Edge(1, 2), Edge(2, 3)}, {7, 2, 9}, {});
    VertexDeletion d = delete_vertices(g, {2});
    CHECK(d.graph.vertex_weight(1) == 7);
    CHECK(d.graph.vertex_weight(2) == 9);
  }
}

TEST_CASE("edge deletion") {
  RootedGraph tri = make_graph(3, 1, {{1, 2}, {1, 3}, {2, 3}});
  SUBCASE("triangle minus the far edge") {
    RootedGraph g = delete_edges(tri, {Edge(2, 3)});
    CHECK(g.edge_count() == 2);
    CHECK(is_full_binary_tree(g));
  }
  SUBCASE("empty deletion is the identity") { CHECK(delete_edges(tri, {}) == tri); }
  SUBCASE("single edge to isolated vertices") {
    RootedGraph g = delete_edges(make_graph(2, 1, {{1, 2}}), {Edge(1, 2)});
    CHECK(g.edge_count() == 0);
    CHECK(g.vertex_count() == 2);
  }
  SUBCASE("unknown edge is refused") {
    CHECK_THROWS_AS(delete_edges(make_graph(2, 1, {{1, 2}}), {Edge(1, 3)}), Error);
    RootedGraph path = make_graph(3, 1, {{1, 2}, {2, 3}});
    CHECK_THROWS_AS(delete_edges(path, {Edge(1, 3)}), UnknownEdgeError);
  }
}

TEST_CASE("smoothing") {
  SUBCASE("a tree smooths to nothing") {
    RootedGraph t = make_graph(7, 1, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}});
    CHECK(smooth_core(t).empty());
  }
  SUBCASE("a triangle is its own core") {
    SmoothedCore core = smooth_core(make_graph(3, 1, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(core.core_vertices == std::vector<VertexId>{1, 2, 3});
    CHECK(core.super_edges.size() == 3);
    for (const SuperEdge& se : core.super_edges) CHECK(se.path.size() == 2);
  }
  SUBCASE("pendant paths are pruned") {
    // Triangle 1-2-3 with the path 3-4-5-6 hanging off it.
    RootedGraph g = make_graph(6, 1, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
    SmoothedCore core = smooth_core(g);
    CHECK(core.core_vertices == std::vector<VertexId>{1, 2, 3});

    std::vector<char> ref = reference_two_core(g);
    for (VertexId v = 1; v <= 6; ++v) CHECK(static_cast<bool>(ref[v]) == (v <= 3));
  }
}

TEST_CASE("cycle discovery") {
  SUBCASE("trees have no cycle") {
    CHECK_FALSE(find_cycle(make_graph(3, 2, {{1, 2}, {2, 3}})));
  }
  SUBCASE("triangle") {
    auto cyc = find_cycle(make_graph(3, 1, {{1, 2}, {1, 3}, {2, 3}}));
    REQUIRE(cyc);
    CHECK(cyc->vertices.size() == 3);
  }
  SUBCASE("cross edge between leaves of a complete binary tree") {
    RootedGraph g =
        make_graph(7, 1, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}, {4, 6}});
    auto cyc = find_cycle(g);
    REQUIRE(cyc);
    CHECK(cycle_is_valid(g, *cyc));
    CHECK(cyc->vertices.size() == 5);
    std::set<VertexId> got(cyc->vertices.begin(), cyc->vertices.end());
    CHECK(got == std::set<VertexId>{1, 2, 3, 4, 6});
  }
  SUBCASE("cycle behind a long chain") {
    // Square 3-4-5-6 reached from the root by a two-edge tail.
    RootedGraph g = make_graph(6, 1, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 6}});
    auto cyc = find_cycle(g);
    REQUIRE(cyc);
    CHECK(cycle_is_valid(g, *cyc));
    CHECK(cyc->vertices.size() == 4);
  }
}

TEST_CASE("randomized cross-checks against independent definitions") {
  Rng rng(20240811);
  int connected_seen = 0;
  for (int iter = 0; iter < 3000; ++iter) {
    int n = 1 + static_cast<int>(rng.next(10));
    double p = 0.15 + 0.2 * static_cast<double>(rng.next(4));
    VertexId root = 1 + static_cast<VertexId>(rng.next(n));
    RootedGraph g = random_graph(n, p, root, rng);

    bool fbt = is_full_binary_tree(g);
    CHECK(fbt == fbt_by_child_orientation(g));
    if (fbt) CHECK(g.vertex_count() % 2 == 1);

    CHECK(delete_vertices(g, {}).graph == g);
    CHECK(delete_edges(g, {}) == g);

    if (!is_connected(g)) continue;
    ++connected_seen;

    auto cyc = find_cycle(g);
    CHECK(static_cast<bool>(cyc) == (g.edge_count() != g.vertex_count() - 1));
    if (cyc) CHECK(cycle_is_valid(g, *cyc));

    // Smoothed-core expansion must reproduce the 2-core exactly.
    SmoothedCore core = smooth_core(g);
    std::vector<char> ref = reference_two_core(g);
    std::set<Edge> expanded;
    std::set<VertexId> expanded_vertices;
    for (const SuperEdge& se : core.super_edges) {
      for (std::size_t i = 0; i + 1 < se.path.size(); ++i)
        expanded.insert(Edge(se.path[i], se.path[i + 1]));
      for (VertexId v : se.path) expanded_vertices.insert(v);
    }
    std::set<Edge> ref_edges;
    std::set<VertexId> ref_vertices;
    for (const Edge& e : g.edges())
      if (ref[e.u] && ref[e.v]) ref_edges.insert(e);
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
      if (ref[v] && g.degree(v) > 0) ref_vertices.insert(v);
    CHECK(expanded == ref_edges);
    if (!core.empty()) CHECK(expanded_vertices == ref_vertices);

    // Core degrees: at least 3 off the root, at least 2 at the root, except
    // for a bare-cycle core where everything sits at 2.
    std::map<VertexId, int> core_deg;
    for (const SuperEdge& se : core.super_edges) {
      core_deg[se.a] += 1;
      core_deg[se.b] += 1;
    }
    bool bare_cycle = true;
    for (VertexId v : core.core_vertices)
      if (core_deg[v] != 2) bare_cycle = false;
    if (!bare_cycle) {
      for (VertexId v : core.core_vertices) {
        if (v == g.root()) CHECK(core_deg[v] >= 2);
        else CHECK(core_deg[v] >= 3);
      }
    }
  }
  CHECK(connected_seen > 500);
}
