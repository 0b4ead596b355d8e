#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fbtlab/graph.hpp"

namespace fbtlab {

enum class BranchRule {
  Components,
  HighDegree,
  RootDegree,
  DegreeTwo,
  RootForcedSingleton,
  CycleBreak,
  Done,
  Infeasible,
};

constexpr int kBranchRuleCount = 8;

std::string branch_rule_name(BranchRule rule);

struct DvBranchChoice {
  BranchRule rule = BranchRule::Done;
  std::vector<std::vector<VertexId>> candidates;  // deletion sets, root-free
};

struct DeBranchChoice {
  BranchRule rule = BranchRule::Done;
  std::vector<std::vector<Edge>> candidates;
};

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t max_depth = 0;
  std::array<std::uint64_t, kBranchRuleCount> rule_counts{};

  std::uint64_t rule_count(BranchRule rule) const {
    return rule_counts[static_cast<int>(rule)];
  }
  void merge(const SearchStats& other);
};

struct DvSolution {
  std::vector<VertexId> deleted;  // sorted ascending, never contains the root
  Weight total_weight = 0;

  friend bool operator==(const DvSolution&, const DvSolution&) = default;
};

struct DeSolution {
  std::vector<Edge> deleted;  // sorted ascending
  Weight total_weight = 0;

  friend bool operator==(const DeSolution&, const DeSolution&) = default;
};

enum class SolveStatus { Sat, Unsat, NodeLimit };

struct SolveOptions {
  std::optional<std::uint64_t> node_limit;
};

struct DvSolveResult {
  SolveStatus status = SolveStatus::Unsat;
  std::optional<DvSolution> solution;
  SearchStats stats;
};

struct DeSolveResult {
  SolveStatus status = SolveStatus::Unsat;
  std::optional<DeSolution> solution;
  SearchStats stats;
};

// First matching branching rule for the vertex-deletion variant, with the
// exhaustive candidate list. The root never appears in a candidate set.
DvBranchChoice select_branch_dv(const RootedGraph& g);

// Depth-first branching search; decision mode returns the first feasible
// solution of weight <= budget in original vertex ids.
DvSolveResult solve_dv(const DeletionInstance& instance, const SolveOptions& options = {});

// Budget sweep 0..k; the returned solution weight is the exact minimum.
DvSolveResult optimize_dv(const DeletionInstance& instance, const SolveOptions& options = {});

// Exhaustive oracle over all subsets of V \ {root}; minimum total weight,
// ties to the lexicographically smallest vertex set. Guarded at 20 vertices.
std::optional<DvSolution> brute_force_dv(const DeletionInstance& instance);

bool verify_dv(const DeletionInstance& instance, const DvSolution& s);

// Edge-deletion analogues.
DeBranchChoice select_branch_de(const RootedGraph& g);
DeSolveResult solve_de(const DeletionInstance& instance, const SolveOptions& options = {});
DeSolveResult optimize_de(const DeletionInstance& instance, const SolveOptions& options = {});

// Guarded at 22 edges.
std::optional<DeSolution> brute_force_de(const DeletionInstance& instance);

bool verify_de(const DeletionInstance& instance, const DeSolution& s);

}  // namespace fbtlab
