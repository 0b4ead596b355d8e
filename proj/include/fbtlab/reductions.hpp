#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fbtlab/graph.hpp"
#include "fbtlab/lnes.hpp"
#include "fbtlab/solver.hpp"

namespace fbtlab {

// Multi-colored independent set input: vertices 1..vertex_count partitioned
// into equal-sized color classes.
struct McisInstance {
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<VertexId>> classes;  // each sorted ascending

  int num_classes() const { return static_cast<int>(classes.size()); }
  int class_size() const { return classes.empty() ? 0 : static_cast<int>(classes[0].size()); }
  bool has_edge(VertexId a, VertexId b) const;

  friend bool operator==(const McisInstance&, const McisInstance&) = default;
};

ValidationReport validate_mcis(const McisInstance& m);

// One vertex per class, pairwise non-adjacent, lexicographically least as a
// sorted set; guarded at n^k <= 10^6 combinations.
std::optional<std::vector<VertexId>> brute_force_mcis(const McisInstance& m);

// Backbone leaf pair (a, b) under parent p, the grafted essential u, and the
// source vertex it stands for.
struct DvGadget {
  VertexId p = 0;
  VertexId a = 0;
  VertexId b = 0;
  VertexId u = 0;
  VertexId original = 0;

  friend bool operator==(const DvGadget&, const DvGadget&) = default;
};

struct DvReductionMap {
  VertexId backbone_root = 0;
  int backbone_leaves = 0;  // power of two, >= 2nk
  int num_classes = 0;
  int class_size = 0;
  Weight budget = 0;  // n*k
  std::vector<std::vector<DvGadget>> gadgets;  // [class][position]
  std::vector<VertexId> guard_x;               // per class
  std::vector<VertexId> guard_y;

  friend bool operator==(const DvReductionMap&, const DvReductionMap&) = default;
};

// Complete-binary-tree backbone with sibling leaf pairs, essentials as third
// children, per-class guards and the source adjacency copied onto the
// essentials; unit weights, budget nk.
std::pair<DeletionInstance, DvReductionMap> mcis_to_fbtdv(const McisInstance& m);

// Degree and isomorphism self-audit of a constructed DV instance.
ValidationReport audit_dv_reduction(const DeletionInstance& instance, const DvReductionMap& map,
                                    const McisInstance& m);

// Essentials of the non-selected vertices plus one partner per selected
// vertex; exactly nk vertices. Throws InvalidWitnessError unless
// independent_set is a multicolored independent set of m.
DvSolution forward_dv_solution(const McisInstance& m, const std::vector<VertexId>& independent_set,
                               const DvReductionMap& map);

// One surviving essential per class, mapped back to the source graph
// (lowest original id if several). Throws LiftFailureError when a class has
// no survivor, or when m is supplied and the result is not independent.
std::vector<VertexId> lift_dv_solution(const DvReductionMap& map, const DvSolution& s,
                                       const McisInstance* m = nullptr);

struct MainGadget {
  VertexId z = 0;  // anchor, identified with a backbone leaf
  VertexId u = 0;
  VertexId v = 0;
  VertexId x = 0;
  VertexId y = 0;
  VertexId p = 0;
  VertexId q = 0;
  VertexId A = 0;
  VertexId B = 0;
  VertexId Ap = 0;
  VertexId Bp = 0;

  friend bool operator==(const MainGadget&, const MainGadget&) = default;
};

struct ShadowGadget {
  VertexId p = 0;  // first anchor
  VertexId q = 0;  // second anchor
  VertexId u = 0;  // negative entry point
  VertexId v = 0;  // positive entry point
  VertexId w = 0;
  VertexId x = 0;
  VertexId y = 0;
  VertexId a = 0;
  VertexId b = 0;
  VertexId c = 0;
  VertexId z = 0;

  friend bool operator==(const ShadowGadget&, const ShadowGadget&) = default;
};

struct DeReductionMap {
  VertexId backbone_root = 0;
  int backbone_leaves = 0;  // power of two, >= 9p
  int p = 0;
  Weight budget = 0;  // 28p
  std::vector<MainGadget> mains;      // [i-1]
  std::vector<ShadowGadget> shadows;  // [t-1], shadow variable id = p + t
  std::vector<VertexId> omega;        // per auxiliary clause
  std::vector<VertexId> omega_p;

  friend bool operator==(const DeReductionMap&, const DeReductionMap&) = default;
};

// The weighted edge-deletion instance: passive and backbone edges cost k+1,
// everything else is a unit edge; budget k = 28p.
std::pair<DeletionInstance, DeReductionMap> lnes_to_fbtde(const LnesInstance& l);

ValidationReport audit_de_reduction(const DeletionInstance& instance, const DeReductionMap& map);

// Witness deletion sets per gadget plus the omega pruning; 28p unit edges.
DeSolution forward_de_solution(const LnesInstance& l, const Assignment& zeta,
                               const DeReductionMap& map);

struct DeSolutionBreakdown {
  Weight main_edges = 0;    // 6p across the main gadgets and their externals
  Weight shadow_edges = 0;  // 16p witness edges
  Weight omega_edges = 0;   // 6p at the auxiliary-clause vertices
  Weight other_edges = 0;
};

DeSolutionBreakdown classify_de_solution(const DeReductionMap& map, const DeSolution& s);

// Reads the per-gadget witness patterns back into an assignment. Throws
// LiftFailureError on any pattern matching neither witness, on a deleted
// passive edge, or when l is supplied and the result is not near-exact.
Assignment lift_de_solution(const DeReductionMap& map, const DeSolution& s,
                            const LnesInstance* l = nullptr);

struct PlantedInstance {
  DeletionInstance instance;
  std::optional<DvSolution> planted_dv;
  std::optional<DeSolution> planted_de;
};

// A random full binary tree with `leaves` leaves perturbed by j noise
// vertices (DV) or j extra edges (DE); the planted solution restores the
// tree and always verifies.
PlantedInstance gen_planted(Variant variant, int leaves, int noise, std::uint64_t seed);

}  // namespace fbtlab
