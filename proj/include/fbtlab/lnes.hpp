#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fbtlab/errors.hpp"

namespace fbtlab {

// Clauses as lists of nonzero signed variable indices.
struct Cnf {
  int variable_count = 0;
  std::vector<std::vector<int>> clauses;

  friend bool operator==(const Cnf&, const Cnf&) = default;
};

struct Assignment {
  std::vector<std::uint8_t> bits;  // index v-1

  Assignment() = default;
  explicit Assignment(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

  int size() const { return static_cast<int>(bits.size()); }
  bool value(int v) const { return bits[static_cast<std::size_t>(v - 1)] != 0; }
  bool literal_true(int lit) const { return lit > 0 ? value(lit) : !value(-lit); }

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string what) {
    ok = false;
    violations.push_back(std::move(what));
  }
};

// Per main variable i, the four shadow ids of the two-literal core clauses
// A_i = (x_i, -sA), B_i = (x_i, -sB), A'_i = (-x_i, -sAp), B'_i = (-x_i, -sBp).
struct CoreEntry {
  int sA = 0;
  int sB = 0;
  int sAp = 0;
  int sBp = 0;

  std::array<int, 4> shadows() const { return {sA, sB, sAp, sBp}; }
  friend bool operator==(const CoreEntry&, const CoreEntry&) = default;
};

// A chain: main variables 1..p, shadow variables p+1..5p, 4p two-literal
// core clauses and p four-literal auxiliary clauses of positive shadows.
struct LnesInstance {
  int p = 0;
  std::vector<CoreEntry> core;          // size p
  std::vector<std::array<int, 4>> aux;  // size p

  int variable_count() const { return 5 * p; }
  friend bool operator==(const LnesInstance&, const LnesInstance&) = default;
};

// Where each auxiliary-clause slot came from in the source formula.
struct AuxSlotOrigin {
  int clause = 0;  // 1-based original clause index
  int slot = 0;    // 1-based slot within that clause
  int literal = 0; // the original literal replaced

  friend bool operator==(const AuxSlotOrigin&, const AuxSlotOrigin&) = default;
};

struct LnesProvenance {
  int p = 0;
  std::vector<std::array<AuxSlotOrigin, 4>> slots;  // [aux clause][slot]

  friend bool operator==(const LnesProvenance&, const LnesProvenance&) = default;
};

struct LnesConversion {
  LnesInstance instance;
  LnesProvenance provenance;
};

// Fixed id layout: the shadows of main variable i sit at p+4(i-1)+{1,2,3,4}
// in role order p_i, r_i, q_i, s_i.
int shadow_id(int p, int main_index, int role);

// Accepts iff every clause has exactly four literals over distinct
// variables and every variable occurs exactly twice per polarity.
ValidationReport validate_224(const Cnf& cnf);

// True iff every clause has exactly two true literals under a.
bool check_224(const Cnf& cnf, const Assignment& a);

// Seeded shuffle of the 4n literal slots into n clauses; rejects groupings
// that repeat a variable within a clause and reshuffles, up to 1000 times.
Cnf gen_224(int n, std::uint64_t seed);

// The clause rewrite: positive occurrences of x_i become p_i, r_i and the
// negated ones q_i, s_i; each source clause turns into one auxiliary clause
// and every variable contributes four two-literal core clauses.
LnesConversion sat224_to_lnes(const Cnf& cnf);

ValidationReport validate_chain(const LnesInstance& l);

// True iff exactly one literal per core clause and exactly two per
// auxiliary clause evaluate to true.
bool check_near_exact(const LnesInstance& l, const Assignment& a);

// Lexicographically least near-exact satisfying assignment, scanning bit 1
// as the most significant position. Guarded at p <= 5.
std::optional<Assignment> brute_force_lnes(const LnesInstance& l);

// tau over the main variables 1..p.
Assignment restrict_to_main(const LnesInstance& l, const Assignment& zeta);

// The canonical extension: shadows p_i, r_i copy tau(x_i); q_i, s_i negate it.
Assignment extend_to_chain(int p, const Assignment& tau);

}  // namespace fbtlab
