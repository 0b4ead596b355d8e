#include <algorithm>

#include "doctest.h"
#include "fbtlab/solver.hpp"
#include "support.hpp"

using namespace fbtlab;
using namespace fbtlab::testing;

namespace {

const RootedGraph kCbt7 =
    make_graph(7, 1, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}});
const RootedGraph kTriangle = make_graph(3, 1, {{1, 2}, {1, 3}, {2, 3}});

DeletionInstance de(const RootedGraph& g, Weight k) {
  return make_instance(g, Variant::DE, k);
}

}  // namespace

TEST_CASE("edge branching rule selection") {
  SUBCASE("a full binary tree is done") {
    CHECK(select_branch_de(kCbt7).rule == BranchRule::Done);
  }
  SUBCASE("triangle branches on the two edges at the degree-two vertex") {
    DeBranchChoice c = select_branch_de(kTriangle);
    CHECK(c.rule == BranchRule::DegreeTwo);
    REQUIRE(c.candidates.size() == 2);
    CHECK(c.candidates[0] == std::vector<Edge>{Edge(1, 2)});
    CHECK(c.candidates[1] == std::vector<Edge>{Edge(2, 3)});
  }
  SUBCASE("disconnected graphs are infeasible") {
    RootedGraph g = make_graph(6, 1, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
    CHECK(select_branch_de(g).rule == BranchRule::Infeasible);
  }
  SUBCASE("a degree-one root is infeasible") {
    CHECK(select_branch_de(make_graph(3, 1, {{1, 2}, {2, 3}})).rule ==
          BranchRule::Infeasible);
  }
  SUBCASE("high-degree vertices branch on four incident edges") {
    RootedGraph g = make_graph(6, 2, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}});
    DeBranchChoice c = select_branch_de(g);
    CHECK(c.rule == BranchRule::HighDegree);
    REQUIRE(c.candidates.size() == 4);
    CHECK(c.candidates[0] == std::vector<Edge>{Edge(1, 2)});
  }
  SUBCASE("root of degree three branches on three root edges") {
    RootedGraph g = make_graph(7, 1,
                               {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6}, {4, 7}});
    DeBranchChoice c = select_branch_de(g);
    CHECK(c.rule == BranchRule::RootDegree);
    REQUIRE(c.candidates.size() == 3);
  }
}

TEST_CASE("edge-deletion solve on the worked examples") {
  SUBCASE("triangle drops the far edge") {
    DeSolveResult r = solve_de(de(kTriangle, 1));
    REQUIRE(r.status == SolveStatus::Sat);
    CHECK(r.solution->deleted == std::vector<Edge>{Edge(2, 3)});
    CHECK(r.solution->total_weight == 1);
  }
  SUBCASE("even vertex counts are hopeless") {
    RootedGraph c4 = make_graph(4, 2, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    DeSolveResult r = solve_de(de(c4, 4));
    CHECK(r.status == SolveStatus::Unsat);
    CHECK(r.stats.nodes_expanded == 0);  // parity prefilter
  }
  SUBCASE("extra sibling-leaf edge goes away") {
    RootedGraph g =
        make_graph(7, 1, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}, {4, 5}});
    DeSolveResult r = solve_de(de(g, 1));
    REQUIRE(r.status == SolveStatus::Sat);
    CHECK(r.solution->deleted == std::vector<Edge>{Edge(4, 5)});
  }
}

TEST_CASE("edge-deletion oracle") {
  SUBCASE("tree needs nothing") {
    auto s = brute_force_de(de(kCbt7, 0));
    REQUIRE(s);
    CHECK(s->deleted.empty());
  }
  SUBCASE("triangle minimum") {
    auto s = brute_force_de(de(kTriangle, 2));
    REQUIRE(s);
    CHECK(s->deleted == std::vector<Edge>{Edge(2, 3)});
    CHECK(s->total_weight == 1);
  }
  SUBCASE("K4 has even vertex count") {
    RootedGraph k4 = make_graph(4, 1, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK_FALSE(brute_force_de(de(k4, 6)));
  }
  SUBCASE("guard") {
    std::vector<Edge> edges;
    for (int v = 2; v <= 24; ++v) edges.emplace_back(1, v);
    RootedGraph big(24, 1, std::move(edges));
    CHECK_THROWS_AS(brute_force_de(de(big, 0)), TooLargeError);
  }
}

TEST_CASE("edge-deletion verifier") {
  CHECK(verify_de(de(kCbt7, 0), DeSolution{{}, 0}));
  CHECK(verify_de(de(kTriangle, 1), DeSolution{{Edge(2, 3)}, 1}));
  CHECK_FALSE(verify_de(de(kTriangle, 1), DeSolution{{Edge(1, 2)}, 1}));  // root degree 1
  CHECK_FALSE(verify_de(de(kTriangle, 1), DeSolution{{Edge(1, 9)}, 1}));  // unknown edge
  CHECK_FALSE(verify_de(de(kTriangle, 1), DeSolution{{Edge(2, 3)}, 2}));  // wrong weight
}

TEST_CASE("solver agrees with the oracle on a random corpus") {
  Rng rng(4242);
  int sat_seen = 0, unsat_seen = 0;
  for (int iter = 0; iter < 300; ++iter) {
    int n = 3 + static_cast<int>(rng.next(6));
    double p = 0.25 + 0.15 * static_cast<double>(rng.next(3));
    VertexId root = 1 + static_cast<VertexId>(rng.next(n));
    RootedGraph g = random_graph(n, p, root, rng);
    if (g.edge_count() > 16) continue;
    Weight k = static_cast<Weight>(rng.next(5));
    DeletionInstance inst = de(g, k);

    auto oracle = brute_force_de(inst);
    DeSolveResult r = solve_de(inst);
    CHECK(r.status != SolveStatus::NodeLimit);
    CHECK((r.status == SolveStatus::Sat) == static_cast<bool>(oracle));
    if (r.status == SolveStatus::Sat) {
      ++sat_seen;
      CHECK(verify_de(inst, *r.solution));
      CHECK(r.solution->deleted.size() <= g.edges().size());
      DeSolveResult opt = optimize_de(inst);
      REQUIRE(opt.status == SolveStatus::Sat);
      CHECK(opt.solution->total_weight == oracle->total_weight);
    } else {
      ++unsat_seen;
    }
  }
  CHECK(sat_seen > 10);
  CHECK(unsat_seen > 20);
}

TEST_CASE("weighted edges agree with the oracle") {
  Rng rng(777);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 3 + static_cast<int>(rng.next(5));
    VertexId root = 1 + static_cast<VertexId>(rng.next(n));
    std::vector<Edge> edges;
    std::vector<Weight> weights;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng.chance(0.5)) {
          edges.emplace_back(u, v);
          weights.push_back(1 + static_cast<Weight>(rng.next(3)));
        }
    if (edges.size() > 16) continue;
    RootedGraph g(n, root, std::move(edges), {}, std::move(weights));
    Weight k = static_cast<Weight>(rng.next(7));
    DeletionInstance inst = de(g, k);

    auto oracle = brute_force_de(inst);
    DeSolveResult r = solve_de(inst);
    CHECK((r.status == SolveStatus::Sat) == static_cast<bool>(oracle));
    if (oracle) {
      DeSolveResult opt = optimize_de(inst);
      REQUIRE(opt.status == SolveStatus::Sat);
      CHECK(opt.solution->total_weight == oracle->total_weight);
    }
  }
}

TEST_CASE("node limit reporting") {
  // Odd-order wheel-ish graph that needs some search.
  RootedGraph g = make_graph(7, 1, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5},
                                    {4, 6}, {5, 7}, {6, 7}});
  SolveOptions opts;
  opts.node_limit = 2;
  CHECK(solve_de(de(g, 5), opts).status == SolveStatus::NodeLimit);
}
