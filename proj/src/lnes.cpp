#include "fbtlab/lnes.hpp"

#include <algorithm>
#include <random>

namespace fbtlab {

int shadow_id(int p, int main_index, int role) {
  return p + 4 * (main_index - 1) + role;
}

ValidationReport validate_224(const Cnf& cnf) {
  ValidationReport report;
  const int n = cnf.variable_count;
  if (n < 1) report.fail("variable count must be positive");

  std::vector<int> pos(n + 1, 0), neg(n + 1, 0);
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
    const auto& clause = cnf.clauses[j];
    const std::string where = "clause " + std::to_string(j + 1);
    if (clause.size() != 4)
      report.fail(where + ": expected 4 literals, found " + std::to_string(clause.size()));
    std::vector<int> vars;
    for (int lit : clause) {
      if (lit == 0) {
        report.fail(where + ": literal 0");
        continue;
      }
      int v = std::abs(lit);
      if (v > n) {
        report.fail(where + ": variable " + std::to_string(v) + " out of range");
        continue;
      }
      vars.push_back(v);
      (lit > 0 ? pos : neg)[v]++;
    }
    std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
      report.fail(where + ": repeated variable");
  }
  for (int v = 1; v <= n; ++v) {
    if (pos[v] != 2)
      report.fail("variable " + std::to_string(v) + ": " + std::to_string(pos[v]) +
                  " positive occurrences, expected 2");
    if (neg[v] != 2)
      report.fail("variable " + std::to_string(v) + ": " + std::to_string(neg[v]) +
                  " negative occurrences, expected 2");
  }
  return report;
}

bool check_224(const Cnf& cnf, const Assignment& a) {
  for (const auto& clause : cnf.clauses) {
    int sat = 0;
    for (int lit : clause)
      if (a.literal_true(lit)) ++sat;
    if (sat != 2) return false;
  }
  return true;
}

namespace {

// Deterministic Fisher-Yates; std::shuffle sequences vary across standard
// library implementations.
template <typename T>
void shuffle_slots(std::vector<T>& slots, std::mt19937_64& rng) {
  for (std::size_t i = slots.size() - 1; i > 0; --i) {
    std::size_t j = rng() % (i + 1);
    std::swap(slots[i], slots[j]);
  }
}

}  // namespace

Cnf gen_224(int n, std::uint64_t seed) {
  if (n < 4) throw Error("gen_224 requires n >= 4");
  std::mt19937_64 rng(seed);

  std::vector<int> slots;
  slots.reserve(4 * static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    slots.push_back(v);
    slots.push_back(v);
    slots.push_back(-v);
    slots.push_back(-v);
  }

  for (int attempt = 0; attempt < 1000; ++attempt) {
    shuffle_slots(slots, rng);
    bool ok = true;
    for (std::size_t base = 0; base < slots.size() && ok; base += 4) {
      for (std::size_t i = 0; i < 4 && ok; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
          if (std::abs(slots[base + i]) == std::abs(slots[base + j])) {
            ok = false;
            break;
          }
    }
    if (!ok) continue;
    Cnf cnf;
    cnf.variable_count = n;
    for (std::size_t base = 0; base < slots.size(); base += 4)
      cnf.clauses.push_back({slots[base], slots[base + 1], slots[base + 2], slots[base + 3]});
    return cnf;
  }
  throw RetryLimitError("gen_224 gave up after 1000 shuffles");
}

LnesConversion sat224_to_lnes(const Cnf& cnf) {
  ValidationReport rep = validate_224(cnf);
  if (!rep.ok) throw Error("sat224_to_lnes requires a (2/2/4) instance: " + rep.violations[0]);

  const int p = cnf.variable_count;
  LnesConversion out;
  out.instance.p = p;
  out.provenance.p = p;
  for (int i = 1; i <= p; ++i) {
    out.instance.core.push_back(CoreEntry{shadow_id(p, i, 1), shadow_id(p, i, 2),
                                          shadow_id(p, i, 3), shadow_id(p, i, 4)});
  }

  std::vector<int> pos_seen(p + 1, 0), neg_seen(p + 1, 0);
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
    std::array<int, 4> aux{};
    std::array<AuxSlotOrigin, 4> origins{};
    for (std::size_t t = 0; t < 4; ++t) {
      int lit = cnf.clauses[j][t];
      int v = std::abs(lit);
      int role = lit > 0 ? ++pos_seen[v] : 2 + ++neg_seen[v];
      aux[t] = shadow_id(p, v, role);
      origins[t] = AuxSlotOrigin{static_cast<int>(j + 1), static_cast<int>(t + 1), lit};
    }
    out.instance.aux.push_back(aux);
    out.provenance.slots.push_back(origins);
  }
  return out;
}

ValidationReport validate_chain(const LnesInstance& l) {
  ValidationReport report;
  if (l.p < 1) {
    report.fail("p must be positive");
    return report;
  }
  const int p = l.p;
  if (static_cast<int>(l.core.size()) != p)
    report.fail("expected " + std::to_string(p) + " core entries, found " +
                std::to_string(l.core.size()));
  if (static_cast<int>(l.aux.size()) != p)
    report.fail("expected " + std::to_string(p) + " auxiliary clauses, found " +
                std::to_string(l.aux.size()));

  std::vector<int> core_occ(5 * p + 1, 0), aux_occ(5 * p + 1, 0);
  for (std::size_t i = 0; i < l.core.size(); ++i) {
    for (int s : l.core[i].shadows()) {
      if (s <= p || s > 5 * p) {
        report.fail("core entry " + std::to_string(i + 1) + ": id " + std::to_string(s) +
                    " is not a shadow variable");
        continue;
      }
      ++core_occ[s];
    }
  }
  for (std::size_t j = 0; j < l.aux.size(); ++j) {
    for (int s : l.aux[j]) {
      if (s <= p || s > 5 * p) {
        report.fail("aux clause " + std::to_string(j + 1) + ": id " + std::to_string(s) +
                    " is not a shadow variable");
        continue;
      }
      ++aux_occ[s];
    }
  }
  for (int s = p + 1; s <= 5 * p; ++s) {
    if (core_occ[s] != 1)
      report.fail("shadow " + std::to_string(s) + ": " + std::to_string(core_occ[s]) +
                  " core occurrences, expected 1");
    if (aux_occ[s] != 1)
      report.fail("shadow " + std::to_string(s) + ": " + std::to_string(aux_occ[s]) +
                  " auxiliary occurrences, expected 1");
  }
  return report;
}

bool check_near_exact(const LnesInstance& l, const Assignment& a) {
  for (int i = 1; i <= l.p; ++i) {
    const CoreEntry& c = l.core[i - 1];
    bool x = a.value(i);
    // (x_i, -sA): exactly one true literal, and so on down the entry.
    if ((x ? 1 : 0) + (a.value(c.sA) ? 0 : 1) != 1) return false;
    if ((x ? 1 : 0) + (a.value(c.sB) ? 0 : 1) != 1) return false;
    if ((x ? 0 : 1) + (a.value(c.sAp) ? 0 : 1) != 1) return false;
    if ((x ? 0 : 1) + (a.value(c.sBp) ? 0 : 1) != 1) return false;
  }
  for (const auto& aux : l.aux) {
    int sat = 0;
    for (int s : aux)
      if (a.value(s)) ++sat;
    if (sat != 2) return false;
  }
  return true;
}

std::optional<Assignment> brute_force_lnes(const LnesInstance& l) {
  if (l.p > 5) throw TooLargeError("brute_force_lnes is guarded at p <= 5");
  const int bits = 5 * l.p;
  const std::uint64_t masks = std::uint64_t{1} << bits;
  Assignment a(std::vector<std::uint8_t>(bits, 0));
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    // Bit 1 is the most significant position, so the scan is lexicographic.
    for (int v = 1; v <= bits; ++v)
      a.bits[v - 1] = static_cast<std::uint8_t>((mask >> (bits - v)) & 1u);
    if (check_near_exact(l, a)) return a;
  }
  return std::nullopt;
}

Assignment restrict_to_main(const LnesInstance& l, const Assignment& zeta) {
  if (zeta.size() != l.variable_count())
    throw Error("assignment length does not match the chain");
  return Assignment(std::vector<std::uint8_t>(zeta.bits.begin(), zeta.bits.begin() + l.p));
}

Assignment extend_to_chain(int p, const Assignment& tau) {
  if (tau.size() != p) throw Error("assignment length does not match p");
  Assignment zeta(std::vector<std::uint8_t>(5 * p, 0));
  for (int i = 1; i <= p; ++i) {
    std::uint8_t x = tau.bits[i - 1];
    zeta.bits[i - 1] = x;
    zeta.bits[shadow_id(p, i, 1) - 1] = x;
    zeta.bits[shadow_id(p, i, 2) - 1] = x;
    zeta.bits[shadow_id(p, i, 3) - 1] = static_cast<std::uint8_t>(1 - x);
    zeta.bits[shadow_id(p, i, 4) - 1] = static_cast<std::uint8_t>(1 - x);
  }
  return zeta;
}

}  // namespace fbtlab
