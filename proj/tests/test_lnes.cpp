#include <algorithm>

#include "doctest.h"
#include "fbtlab/lnes.hpp"
#include "support.hpp"

using namespace fbtlab;
using namespace fbtlab::testing;

namespace {

// Core shadows p1,r1,q1,s1 at ids 2..5, one auxiliary clause over all four.
LnesInstance tiny_chain() {
  LnesInstance l;
  l.p = 1;
  l.core.push_back(CoreEntry{2, 3, 4, 5});
  l.aux.push_back({2, 3, 4, 5});
  return l;
}

Assignment bits(std::initializer_list<int> values) {
  std::vector<std::uint8_t> b;
  for (int v : values) b.push_back(static_cast<std::uint8_t>(v));
  return Assignment(std::move(b));
}

// Straight recount of true literals per clause, kept separate from
// check_224 on purpose.
bool exactly_two_by_counting(const Cnf& cnf, const Assignment& a) {
  for (const auto& clause : cnf.clauses) {
    int count = 0;
    for (int lit : clause) {
      bool val = lit > 0 ? a.value(lit) : !a.value(-lit);
      if (val) ++count;
    }
    if (count != 2) return false;
  }
  return true;
}

Assignment assignment_from_mask(int n, std::uint32_t mask) {
  std::vector<std::uint8_t> b(n);
  for (int v = 0; v < n; ++v) b[v] = (mask >> v) & 1u;
  return Assignment(std::move(b));
}

}  // namespace

TEST_CASE("(2/2/4) validation") {
  for (std::uint64_t seed = 0; seed < 100; ++seed)
    CHECK(validate_224(gen_224(4, seed)).ok);

  Cnf bad = gen_224(4, 0);
  bad.clauses[0].pop_back();
  CHECK_FALSE(validate_224(bad).ok);

  Cnf triple = gen_224(4, 1);
  // Force a third positive occurrence of variable 1.
  for (auto& clause : triple.clauses)
    for (int& lit : clause)
      if (lit == -1) {
        lit = 1;
        goto done;
      }
done:
  CHECK_FALSE(validate_224(triple).ok);

  Cnf repeat = gen_224(4, 2);
  repeat.clauses[0][1] = -repeat.clauses[0][0];
  CHECK_FALSE(validate_224(repeat).ok);
}

TEST_CASE("exactly-two checking") {
  Cnf cnf;
  cnf.variable_count = 4;
  cnf.clauses = {{1, -2, 3, -4}};
  CHECK(check_224(cnf, bits({1, 1, 1, 1})));  // two true literals

  Cnf all_pos;
  all_pos.variable_count = 4;
  all_pos.clauses = {{1, 2, 3, 4}};
  CHECK_FALSE(check_224(all_pos, bits({1, 1, 1, 1})));

  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    Cnf g = gen_224(5, seed);
    for (std::uint32_t mask = 0; mask < (1u << 5); ++mask) {
      Assignment a = assignment_from_mask(5, mask);
      CHECK(check_224(g, a) == exactly_two_by_counting(g, a));
    }
  }
  Cnf big = gen_224(10, 7);
  int agreements = 0;
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    Assignment a = assignment_from_mask(10, mask);
    if (check_224(big, a) != exactly_two_by_counting(big, a)) break;
    ++agreements;
  }
  CHECK(agreements == 1 << 10);
}

TEST_CASE("generator basics") {
  CHECK(gen_224(6, 9) == gen_224(6, 9));
  CHECK(gen_224(6, 9).clauses.size() == 6);
  CHECK_THROWS_AS(gen_224(3, 0), Error);
}

TEST_CASE("the clause rewrite") {
  Cnf cnf = gen_224(4, 11);
  LnesConversion conv = sat224_to_lnes(cnf);
  CHECK(conv.instance.p == 4);
  CHECK(conv.instance.core.size() == 4);  // 16 two-literal core clauses
  CHECK(conv.instance.aux.size() == 4);
  CHECK(conv.instance.variable_count() == 20);
  CHECK(validate_chain(conv.instance).ok);

  // Provenance ties every auxiliary slot back to its source slot.
  for (std::size_t j = 0; j < conv.provenance.slots.size(); ++j)
    for (std::size_t t = 0; t < 4; ++t) {
      const AuxSlotOrigin& o = conv.provenance.slots[j][t];
      CHECK(o.clause == static_cast<int>(j + 1));
      CHECK(o.slot == static_cast<int>(t + 1));
      CHECK(o.literal == cnf.clauses[j][t]);
    }
}

TEST_CASE("chain validation rejects broken structures") {
  LnesInstance dup = tiny_chain();
  dup.aux[0] = {2, 2, 4, 5};
  CHECK_FALSE(validate_chain(dup).ok);

  Cnf cnf = gen_224(4, 3);
  LnesInstance l = sat224_to_lnes(cnf).instance;
  LnesInstance missing = l;
  missing.aux.pop_back();
  CHECK_FALSE(validate_chain(missing).ok);

  LnesInstance crossed = l;
  crossed.aux[0][0] = crossed.aux[1][0];  // one shadow twice, another never
  CHECK_FALSE(validate_chain(crossed).ok);

  CHECK(validate_chain(tiny_chain()).ok);
}

TEST_CASE("near-exact satisfaction on the tiny chain") {
  LnesInstance l = tiny_chain();
  CHECK(check_near_exact(l, bits({1, 1, 1, 0, 0})));
  CHECK_FALSE(check_near_exact(l, bits({0, 0, 0, 0, 0})));

  // Cross-check against a direct scan of all 32 assignments.
  int qualifying = 0;
  for (std::uint32_t mask = 0; mask < 32; ++mask) {
    Assignment a = assignment_from_mask(5, mask);
    bool direct = true;
    // core: (x, -p1) (x, -r1) (-x, -q1) (-x, -s1); aux: p1+r1+q1+s1 == 2
    int x = a.bits[0], p1 = a.bits[1], r1 = a.bits[2], q1 = a.bits[3], s1 = a.bits[4];
    direct &= (x + (1 - p1)) == 1;
    direct &= (x + (1 - r1)) == 1;
    direct &= ((1 - x) + (1 - q1)) == 1;
    direct &= ((1 - x) + (1 - s1)) == 1;
    direct &= (p1 + r1 + q1 + s1) == 2;
    CHECK(check_near_exact(l, a) == direct);
    if (direct) ++qualifying;
  }
  CHECK(qualifying == 2);  // x=1 extension and x=0 extension
}

namespace {

// Explicit clause lists for a chain, used to count satisfied occurrences
// without going through check_near_exact.
std::vector<std::vector<int>> chain_clauses(const LnesInstance& l) {
  std::vector<std::vector<int>> clauses;
  for (int i = 1; i <= l.p; ++i) {
    const CoreEntry& c = l.core[i - 1];
    clauses.push_back({i, -c.sA});
    clauses.push_back({i, -c.sB});
    clauses.push_back({-i, -c.sAp});
    clauses.push_back({-i, -c.sBp});
  }
  for (const auto& aux : l.aux)
    clauses.push_back({aux[0], aux[1], aux[2], aux[3]});
  return clauses;
}

}  // namespace

TEST_CASE("chain structure puts every variable on exactly its quota") {
  // Mains satisfy exactly two core clauses; shadows exactly one occurrence
  // overall. Exhaustive for a p=2 chain, sampled for p=4.
  auto run = [](const LnesInstance& l, const Assignment& a) {
    std::vector<std::vector<int>> clauses = chain_clauses(l);
    std::vector<int> satisfied(l.variable_count() + 1, 0);
    for (const auto& clause : clauses)
      for (int lit : clause)
        if (a.literal_true(lit)) ++satisfied[std::abs(lit)];
    for (int v = 1; v <= l.p; ++v) CHECK(satisfied[v] == 2);
    for (int v = l.p + 1; v <= l.variable_count(); ++v) CHECK(satisfied[v] == 1);
  };

  LnesInstance two;
  two.p = 2;
  two.core = {CoreEntry{3, 4, 5, 6}, CoreEntry{7, 8, 9, 10}};
  two.aux = {{3, 5, 7, 9}, {4, 6, 8, 10}};
  REQUIRE(validate_chain(two).ok);
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask)
    run(two, assignment_from_mask(10, mask));

  Cnf cnf = gen_224(4, 21);
  LnesInstance l = sat224_to_lnes(cnf).instance;
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint8_t> b(static_cast<std::size_t>(l.variable_count()));
    for (auto& bit : b) bit = static_cast<std::uint8_t>(rng.next(2));
    run(l, Assignment(std::move(b)));
  }
}

TEST_CASE("brute force finds the lexicographically least witness") {
  LnesInstance l = tiny_chain();
  auto found = brute_force_lnes(l);
  REQUIRE(found);
  CHECK(check_near_exact(l, *found));
  // x=0 qualifies with shadows q1=s1=1, and sorts before the x=1 witness.
  CHECK(*found == bits({0, 0, 0, 1, 1}));

  LnesInstance big;
  big.p = 6;
  CHECK_THROWS_AS(brute_force_lnes(big), TooLargeError);
}

TEST_CASE("restriction and extension") {
  LnesInstance l = tiny_chain();
  Assignment zeta = bits({1, 1, 1, 0, 0});
  CHECK(restrict_to_main(l, zeta) == bits({1}));
  CHECK(extend_to_chain(1, bits({1})) == zeta);
  CHECK(extend_to_chain(1, bits({0})) == bits({0, 0, 0, 1, 1}));
}

TEST_CASE("lemma equivalence by double brute force") {
  int sat_seen = 0, unsat_seen = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Cnf cnf = gen_224(4, seed);
    LnesInstance l = sat224_to_lnes(cnf).instance;

    bool sat224 = false;
    Assignment tau_witness;
    for (std::uint32_t mask = 0; mask < 16 && !sat224; ++mask) {
      Assignment tau = assignment_from_mask(4, mask);
      if (check_224(cnf, tau)) {
        sat224 = true;
        tau_witness = tau;
      }
    }
    bool lnes_sat = static_cast<bool>(brute_force_lnes(l));
    CHECK(sat224 == lnes_sat);
    (sat224 ? sat_seen : unsat_seen)++;

    if (sat224) {
      // The canonical extension must be a near-exact witness.
      CHECK(check_near_exact(l, extend_to_chain(4, tau_witness)));
    }

    // Forced equalities and the main restriction, for every near-exact zeta.
    for (std::uint32_t mask = 0; mask < (1u << 20); ++mask) {
      Assignment zeta = assignment_from_mask(20, mask);
      if (!check_near_exact(l, zeta)) continue;
      for (int i = 1; i <= 4; ++i) {
        CHECK(zeta.value(shadow_id(4, i, 1)) == zeta.value(i));
        CHECK(zeta.value(shadow_id(4, i, 2)) == zeta.value(i));
        CHECK(zeta.value(shadow_id(4, i, 3)) == !zeta.value(i));
        CHECK(zeta.value(shadow_id(4, i, 4)) == !zeta.value(i));
      }
      CHECK(check_224(cnf, restrict_to_main(l, zeta)));
    }
  }
  CHECK(sat_seen > 0);
  CHECK(unsat_seen >= 0);
}
