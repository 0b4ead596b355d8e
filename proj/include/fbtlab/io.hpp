#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fbtlab/graph.hpp"
#include "fbtlab/lnes.hpp"
#include "fbtlab/reductions.hpp"
#include "fbtlab/solver.hpp"

namespace fbtlab {

std::string variant_name(Variant v);
std::string status_name(SolveStatus s);

// Instance format: `p fbt <dv|de> <n> <m>` first, one `r <root>` and one
// `k <budget>` line, optional `w <v> <weight>` lines (DV only), exactly m
// `e <u> <v> [<weight>]` lines (edge weights only for DE). `c` lines are
// comments. Canonical output sorts edges and omits default weights.
DeletionInstance parse_fbt(const std::string& text);
std::string write_fbt(const DeletionInstance& instance);

struct SolutionDoc {
  Variant variant = Variant::DV;
  bool sat = false;
  Weight weight = 0;
  std::vector<VertexId> vertices;  // DV deletions
  std::vector<Edge> edges;         // DE deletions

  friend bool operator==(const SolutionDoc&, const SolutionDoc&) = default;
};

SolutionDoc make_solution_doc(const DvSolution& s);
SolutionDoc make_solution_doc(const DeSolution& s);
SolutionDoc make_unsat_doc(Variant variant);

// `s <dv|de> <sat|unsat> <total-weight>` then `d <v>` or `d <u> <v>` lines;
// unsat carries no deletions and weight 0.
SolutionDoc parse_solution(const std::string& text);
std::string write_solution(const SolutionDoc& doc);

// `p mcis <n> <m> <k>`, a `col <v> <class>` line per vertex, `e <u> <v>`
// lines; classes must be equal-sized.
McisInstance parse_mcis(const std::string& text);
std::string write_mcis(const McisInstance& m);

// `p lnes <p>`, `core <i> <sA> <sB> <sA'> <sB'>`, `aux <j> <s1..s4>`;
// validated by validate_chain on load.
LnesInstance parse_lnes(const std::string& text);
std::string write_lnes(const LnesInstance& l);

// Standard DIMACS CNF.
Cnf parse_cnf(const std::string& text);
std::string write_cnf(const Cnf& cnf);

// `a <bitstring>`.
Assignment parse_assignment(const std::string& text);
std::string write_assignment(const Assignment& a);

enum class MapKind { Dv, De, Lnes };

struct MapDoc {
  MapKind kind = MapKind::Dv;
  std::optional<DvReductionMap> dv;
  std::optional<DeReductionMap> de;
  std::optional<LnesProvenance> lnes;
};

// `m <scope> <role> <indices...> <value>` lines; the scope decides the map
// kind (dv, de/main/shadow/aux, lnes).
MapDoc parse_map(const std::string& text);
std::string write_map(const DvReductionMap& map);
std::string write_map(const DeReductionMap& map);
std::string write_map(const LnesProvenance& map);

struct BenchRecord {
  std::string name;
  std::string variant;  // dv | de | "-" when unreadable
  int n = 0;
  int m = 0;
  Weight k = 0;
  std::string status;  // sat | unsat | node-limit | error
  std::optional<Weight> weight;
  std::uint64_t nodes = 0;
  std::int64_t ms = 0;
};

// Columns: name,variant,n,m,k,status,weight,nodes,ms. Weight is empty
// unless the status is sat.
std::string write_bench_csv(const std::vector<BenchRecord>& records);

}  // namespace fbtlab
