#include "fbtlab/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace fbtlab {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens[0] == "c") continue;
    lines.push_back(Line{number, std::move(tokens)});
  }
  return lines;
}

long long to_int(const std::string& tok, int line, const std::string& what,
                 long long lo, long long hi) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, what + ": expected an integer, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(line, what + ": expected an integer, got '" + tok + "'");
  if (value < lo || value > hi)
    throw ParseError(line, what + " " + tok + " out of range");
  return value;
}

void expect_arity(const Line& line, std::size_t count, const std::string& what) {
  if (line.tokens.size() != count)
    throw ParseError(line.number, what + ": expected " + std::to_string(count - 1) +
                                      " fields after '" + line.tokens[0] + "'");
}

}  // namespace

std::string variant_name(Variant v) { return v == Variant::DV ? "dv" : "de"; }

std::string status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Sat: return "sat";
    case SolveStatus::Unsat: return "unsat";
    case SolveStatus::NodeLimit: return "node-limit";
  }
  return "?";
}

DeletionInstance parse_fbt(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty instance");

  const Line& header = lines[0];
  if (header.tokens[0] != "p")
    throw ParseError(header.number, "the 'p' header must come first");
  expect_arity(header, 5, "header");
  if (header.tokens[1] != "fbt")
    throw ParseError(header.number, "expected 'p fbt ...'");
  Variant variant;
  if (header.tokens[2] == "dv") variant = Variant::DV;
  else if (header.tokens[2] == "de") variant = Variant::DE;
  else throw ParseError(header.number, "variant must be dv or de");
  const int n = static_cast<int>(to_int(header.tokens[3], header.number, "vertex count", 1, 1 << 26));
  const int m = static_cast<int>(to_int(header.tokens[4], header.number, "edge count", 0, 1 << 28));

  std::optional<VertexId> root;
  std::optional<Weight> budget;
  std::vector<Weight> vweights(n, 1);
  std::set<VertexId> weighted;
  std::vector<Edge> edges;
  std::vector<Weight> eweights;
  std::set<Edge> seen;

  for (std::size_t idx = 1; idx < lines.size(); ++idx) {
    const Line& line = lines[idx];
    const std::string& type = line.tokens[0];
    if (type == "p") {
      throw ParseError(line.number, "duplicate 'p' header");
    } else if (type == "r") {
      expect_arity(line, 2, "root line");
      if (root) throw ParseError(line.number, "duplicate 'r' line");
      root = static_cast<VertexId>(to_int(line.tokens[1], line.number, "root", 1, n));
    } else if (type == "k") {
      expect_arity(line, 2, "budget line");
      if (budget) throw ParseError(line.number, "duplicate 'k' line");
      budget = to_int(line.tokens[1], line.number, "budget", 0, (1LL << 62) - 1);
    } else if (type == "w") {
      if (variant != Variant::DV)
        throw ParseError(line.number, "vertex weights are only valid for the dv variant");
      expect_arity(line, 3, "weight line");
      VertexId v = static_cast<VertexId>(to_int(line.tokens[1], line.number, "vertex", 1, n));
      if (!weighted.insert(v).second)
        throw ParseError(line.number, "duplicate weight for vertex " + std::to_string(v));
      vweights[v - 1] = to_int(line.tokens[2], line.number, "weight", 1, (1LL << 62) - 1);
    } else if (type == "e") {
      if (line.tokens.size() != 3 && line.tokens.size() != 4)
        throw ParseError(line.number, "edge line: expected 'e <u> <v> [<weight>]'");
      VertexId u = static_cast<VertexId>(to_int(line.tokens[1], line.number, "vertex", 1, n));
      VertexId v = static_cast<VertexId>(to_int(line.tokens[2], line.number, "vertex", 1, n));
      if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
      Edge e(u, v);
      if (!seen.insert(e).second)
        throw ParseError(line.number, "duplicate edge " + std::to_string(e.u) + "-" +
                                          std::to_string(e.v));
      Weight w = 1;
      if (line.tokens.size() == 4) {
        if (variant != Variant::DE)
          throw ParseError(line.number, "edge weights are only valid for the de variant");
        w = to_int(line.tokens[3], line.number, "weight", 1, (1LL << 62) - 1);
      }
      edges.push_back(e);
      eweights.push_back(w);
    } else {
      throw ParseError(line.number, "unknown line type '" + type + "'");
    }
  }

  if (!root) throw ParseError(0, "missing 'r' line");
  if (!budget) throw ParseError(0, "missing 'k' line");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError(0, "expected " + std::to_string(m) + " edges, found " +
                            std::to_string(edges.size()));
  try {
    RootedGraph graph(n, *root, std::move(edges), std::move(vweights), std::move(eweights));
    return make_instance(std::move(graph), variant, *budget);
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

std::string write_fbt(const DeletionInstance& instance) {
  const RootedGraph& g = instance.graph;
  std::ostringstream out;
  out << "p fbt " << variant_name(instance.variant) << ' ' << g.vertex_count() << ' '
      << g.edge_count() << '\n';
  out << "r " << g.root() << '\n';
  out << "k " << instance.budget << '\n';
  if (instance.variant == Variant::DV) {
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
      if (g.vertex_weight(v) != 1) out << "w " << v << ' ' << g.vertex_weight(v) << '\n';
  }
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    out << "e " << e.u << ' ' << e.v;
    if (instance.variant == Variant::DE && g.edge_weights()[i] != 1)
      out << ' ' << g.edge_weights()[i];
    out << '\n';
  }
  return out.str();
}

SolutionDoc make_solution_doc(const DvSolution& s) {
  return SolutionDoc{Variant::DV, true, s.total_weight, s.deleted, {}};
}

SolutionDoc make_solution_doc(const DeSolution& s) {
  return SolutionDoc{Variant::DE, true, s.total_weight, {}, s.deleted};
}

SolutionDoc make_unsat_doc(Variant variant) { return SolutionDoc{variant, false, 0, {}, {}}; }

SolutionDoc parse_solution(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty solution");

  const Line& header = lines[0];
  if (header.tokens[0] != "s") throw ParseError(header.number, "the 's' header must come first");
  expect_arity(header, 4, "solution header");

  SolutionDoc doc;
  if (header.tokens[1] == "dv") doc.variant = Variant::DV;
  else if (header.tokens[1] == "de") doc.variant = Variant::DE;
  else throw ParseError(header.number, "variant must be dv or de");
  if (header.tokens[2] == "sat") doc.sat = true;
  else if (header.tokens[2] == "unsat") doc.sat = false;
  else throw ParseError(header.number, "status must be sat or unsat");
  doc.weight = to_int(header.tokens[3], header.number, "total weight", 0, (1LL << 62) - 1);
  if (!doc.sat && doc.weight != 0)
    throw ParseError(header.number, "unsat solutions carry weight 0");

  for (std::size_t idx = 1; idx < lines.size(); ++idx) {
    const Line& line = lines[idx];
    if (line.tokens[0] != "d")
      throw ParseError(line.number, "unknown line type '" + line.tokens[0] + "'");
    if (!doc.sat) throw ParseError(line.number, "unsat solutions carry no deletions");
    if (doc.variant == Variant::DV) {
      expect_arity(line, 2, "deletion line");
      doc.vertices.push_back(
          static_cast<VertexId>(to_int(line.tokens[1], line.number, "vertex", 1, 1 << 26)));
    } else {
      expect_arity(line, 3, "deletion line");
      VertexId u = static_cast<VertexId>(to_int(line.tokens[1], line.number, "vertex", 1, 1 << 26));
      VertexId v = static_cast<VertexId>(to_int(line.tokens[2], line.number, "vertex", 1, 1 << 26));
      if (u == v) throw ParseError(line.number, "self-loop in deletion line");
      doc.edges.emplace_back(u, v);
    }
  }
  return doc;
}

std::string write_solution(const SolutionDoc& doc) {
  std::ostringstream out;
  out << "s " << variant_name(doc.variant) << ' ' << (doc.sat ? "sat" : "unsat") << ' '
      << doc.weight << '\n';
  if (doc.sat) {
    if (doc.variant == Variant::DV) {
      std::vector<VertexId> vs = doc.vertices;
      std::sort(vs.begin(), vs.end());
      for (VertexId v : vs) out << "d " << v << '\n';
    } else {
      std::vector<Edge> es = doc.edges;
      std::sort(es.begin(), es.end());
      for (const Edge& e : es) out << "d " << e.u << ' ' << e.v << '\n';
    }
  }
  return out.str();
}

McisInstance parse_mcis(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty instance");

  const Line& header = lines[0];
  if (header.tokens[0] != "p") throw ParseError(header.number, "the 'p' header must come first");
  expect_arity(header, 5, "header");
  if (header.tokens[1] != "mcis") throw ParseError(header.number, "expected 'p mcis ...'");
  const int n = static_cast<int>(to_int(header.tokens[2], header.number, "vertex count", 1, 1 << 26));
  const int m = static_cast<int>(to_int(header.tokens[3], header.number, "edge count", 0, 1 << 28));
  const int k = static_cast<int>(to_int(header.tokens[4], header.number, "class count", 1, n));

  McisInstance inst;
  inst.vertex_count = n;
  inst.classes.assign(k, {});
  std::vector<int> color(n + 1, 0);
  std::set<Edge> seen;

  for (std::size_t idx = 1; idx < lines.size(); ++idx) {
    const Line& line = lines[idx];
    const std::string& type = line.tokens[0];
    if (type == "col") {
      expect_arity(line, 3, "color line");
      VertexId v = static_cast<VertexId>(to_int(line.tokens[1], line.number, "vertex", 1, n));
      int cls = static_cast<int>(to_int(line.tokens[2], line.number, "class", 1, k));
      if (color[v] != 0)
        throw ParseError(line.number, "duplicate color for vertex " + std::to_string(v));
      color[v] = cls;
      inst.classes[cls - 1].push_back(v);
    } else if (type == "e") {
      expect_arity(line, 3, "edge line");
      VertexId u = static_cast<VertexId>(to_int(line.tokens[1], line.number, "vertex", 1, n));
      VertexId v = static_cast<VertexId>(to_int(line.tokens[2], line.number, "vertex", 1, n));
      if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
      Edge e(u, v);
      if (!seen.insert(e).second)
        throw ParseError(line.number, "duplicate edge " + std::to_string(e.u) + "-" +
                                          std::to_string(e.v));
      inst.edges.push_back(e);
    } else {
      throw ParseError(line.number, "unknown line type '" + type + "'");
    }
  }

  for (VertexId v = 1; v <= n; ++v)
    if (color[v] == 0) throw ParseError(0, "vertex " + std::to_string(v) + " has no color");
  if (static_cast<int>(inst.edges.size()) != m)
    throw ParseError(0, "expected " + std::to_string(m) + " edges, found " +
                            std::to_string(inst.edges.size()));
  for (auto& cls : inst.classes) std::sort(cls.begin(), cls.end());
  std::sort(inst.edges.begin(), inst.edges.end());

  ValidationReport rep = validate_mcis(inst);
  if (!rep.ok) throw ParseError(0, rep.violations[0]);
  return inst;
}

std::string write_mcis(const McisInstance& m) {
  std::ostringstream out;
  out << "p mcis " << m.vertex_count << ' ' << m.edges.size() << ' ' << m.num_classes() << '\n';
  std::vector<int> color(m.vertex_count + 1, 0);
  for (int i = 0; i < m.num_classes(); ++i)
    for (VertexId v : m.classes[i]) color[v] = i + 1;
  for (VertexId v = 1; v <= m.vertex_count; ++v) out << "col " << v << ' ' << color[v] << '\n';
  std::vector<Edge> edges = m.edges;
  std::sort(edges.begin(), edges.end());
  for (const Edge& e : edges) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

LnesInstance parse_lnes(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty instance");

  const Line& header = lines[0];
  if (header.tokens[0] != "p") throw ParseError(header.number, "the 'p' header must come first");
  expect_arity(header, 3, "header");
  if (header.tokens[1] != "lnes") throw ParseError(header.number, "expected 'p lnes ...'");
  const int p = static_cast<int>(to_int(header.tokens[2], header.number, "p", 1, 1 << 22));

  LnesInstance inst;
  inst.p = p;
  inst.core.assign(p, {});
  inst.aux.assign(p, {});
  std::vector<char> saw_core(p + 1, 0), saw_aux(p + 1, 0);

  for (std::size_t idx = 1; idx < lines.size(); ++idx) {
    const Line& line = lines[idx];
    const std::string& type = line.tokens[0];
    if (type == "core") {
      expect_arity(line, 6, "core line");
      int i = static_cast<int>(to_int(line.tokens[1], line.number, "core index", 1, p));
      if (saw_core[i]) throw ParseError(line.number, "duplicate core entry " + std::to_string(i));
      saw_core[i] = 1;
      CoreEntry e;
      e.sA = static_cast<int>(to_int(line.tokens[2], line.number, "shadow id", 1, 5 * p));
      e.sB = static_cast<int>(to_int(line.tokens[3], line.number, "shadow id", 1, 5 * p));
      e.sAp = static_cast<int>(to_int(line.tokens[4], line.number, "shadow id", 1, 5 * p));
      e.sBp = static_cast<int>(to_int(line.tokens[5], line.number, "shadow id", 1, 5 * p));
      inst.core[i - 1] = e;
    } else if (type == "aux") {
      expect_arity(line, 6, "aux line");
      int j = static_cast<int>(to_int(line.tokens[1], line.number, "aux index", 1, p));
      if (saw_aux[j]) throw ParseError(line.number, "duplicate aux clause " + std::to_string(j));
      saw_aux[j] = 1;
      for (int t = 0; t < 4; ++t)
        inst.aux[j - 1][t] =
            static_cast<int>(to_int(line.tokens[t + 2], line.number, "shadow id", 1, 5 * p));
    } else {
      throw ParseError(line.number, "unknown line type '" + type + "'");
    }
  }
  for (int i = 1; i <= p; ++i) {
    if (!saw_core[i]) throw ParseError(0, "missing core entry " + std::to_string(i));
    if (!saw_aux[i]) throw ParseError(0, "missing aux clause " + std::to_string(i));
  }

  ValidationReport rep = validate_chain(inst);
  if (!rep.ok) throw ParseError(0, rep.violations[0]);
  return inst;
}

std::string write_lnes(const LnesInstance& l) {
  std::ostringstream out;
  out << "p lnes " << l.p << '\n';
  for (int i = 1; i <= l.p; ++i) {
    const CoreEntry& c = l.core[i - 1];
    out << "core " << i << ' ' << c.sA << ' ' << c.sB << ' ' << c.sAp << ' ' << c.sBp << '\n';
  }
  for (int j = 1; j <= l.p; ++j) {
    out << "aux " << j;
    for (int s : l.aux[j - 1]) out << ' ' << s;
    out << '\n';
  }
  return out.str();
}

Cnf parse_cnf(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty formula");

  const Line& header = lines[0];
  if (header.tokens[0] != "p") throw ParseError(header.number, "the 'p' header must come first");
  expect_arity(header, 4, "header");
  if (header.tokens[1] != "cnf") throw ParseError(header.number, "expected 'p cnf ...'");
  const int n = static_cast<int>(to_int(header.tokens[2], header.number, "variable count", 1, 1 << 26));
  const int m = static_cast<int>(to_int(header.tokens[3], header.number, "clause count", 0, 1 << 28));

  Cnf cnf;
  cnf.variable_count = n;
  std::vector<int> current;
  for (std::size_t idx = 1; idx < lines.size(); ++idx) {
    const Line& line = lines[idx];
    for (const std::string& tok : line.tokens) {
      long long lit = to_int(tok, line.number, "literal", -n, n);
      if (lit == 0) {
        cnf.clauses.push_back(current);
        current.clear();
      } else {
        current.push_back(static_cast<int>(lit));
      }
    }
  }
  if (!current.empty()) throw ParseError(0, "unterminated clause");
  if (static_cast<int>(cnf.clauses.size()) != m)
    throw ParseError(0, "expected " + std::to_string(m) + " clauses, found " +
                            std::to_string(cnf.clauses.size()));
  return cnf;
}

std::string write_cnf(const Cnf& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.variable_count << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

Assignment parse_assignment(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.size() != 1) throw ParseError(0, "expected exactly one 'a' line");
  const Line& line = lines[0];
  if (line.tokens[0] != "a") throw ParseError(line.number, "expected 'a <bitstring>'");
  expect_arity(line, 2, "assignment");
  Assignment a;
  for (char ch : line.tokens[1]) {
    if (ch != '0' && ch != '1')
      throw ParseError(line.number, "bitstring may only contain 0 and 1");
    a.bits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  if (a.bits.empty()) throw ParseError(line.number, "empty bitstring");
  return a;
}

std::string write_assignment(const Assignment& a) {
  std::string bits;
  for (std::uint8_t b : a.bits) bits.push_back(b ? '1' : '0');
  return "a " + bits + "\n";
}

std::string write_map(const DvReductionMap& map) {
  std::ostringstream out;
  out << "m dv nu " << map.backbone_root << '\n';
  out << "m dv leaves " << map.backbone_leaves << '\n';
  out << "m dv budget " << map.budget << '\n';
  for (int i = 1; i <= map.num_classes; ++i) {
    out << "m dv x " << i << ' ' << map.guard_x[i - 1] << '\n';
    out << "m dv y " << i << ' ' << map.guard_y[i - 1] << '\n';
  }
  for (int i = 1; i <= map.num_classes; ++i) {
    for (int j = 1; j <= map.class_size; ++j) {
      const DvGadget& g = map.gadgets[i - 1][j - 1];
      out << "m dv p " << i << ' ' << j << ' ' << g.p << '\n';
      out << "m dv a " << i << ' ' << j << ' ' << g.a << '\n';
      out << "m dv b " << i << ' ' << j << ' ' << g.b << '\n';
      out << "m dv u " << i << ' ' << j << ' ' << g.u << '\n';
      out << "m dv orig " << i << ' ' << j << ' ' << g.original << '\n';
    }
  }
  return out.str();
}

namespace {

const std::vector<std::string> kMainRoles = {"z", "u", "v", "x", "y", "p",
                                             "q", "A", "B", "Ap", "Bp"};
const std::vector<std::string> kShadowRoles = {"p", "q", "u", "v", "w", "x",
                                               "y", "a", "b", "c", "z"};

VertexId* main_role_slot(MainGadget& g, const std::string& role) {
  if (role == "z") return &g.z;
  if (role == "u") return &g.u;
  if (role == "v") return &g.v;
  if (role == "x") return &g.x;
  if (role == "y") return &g.y;
  if (role == "p") return &g.p;
  if (role == "q") return &g.q;
  if (role == "A") return &g.A;
  if (role == "B") return &g.B;
  if (role == "Ap") return &g.Ap;
  if (role == "Bp") return &g.Bp;
  return nullptr;
}

VertexId* shadow_role_slot(ShadowGadget& g, const std::string& role) {
  if (role == "p") return &g.p;
  if (role == "q") return &g.q;
  if (role == "u") return &g.u;
  if (role == "v") return &g.v;
  if (role == "w") return &g.w;
  if (role == "x") return &g.x;
  if (role == "y") return &g.y;
  if (role == "a") return &g.a;
  if (role == "b") return &g.b;
  if (role == "c") return &g.c;
  if (role == "z") return &g.z;
  return nullptr;
}

VertexId main_role_value(const MainGadget& g, const std::string& role) {
  MainGadget copy = g;
  return *main_role_slot(copy, role);
}

VertexId shadow_role_value(const ShadowGadget& g, const std::string& role) {
  ShadowGadget copy = g;
  return *shadow_role_slot(copy, role);
}

}  // namespace

std::string write_map(const DeReductionMap& map) {
  std::ostringstream out;
  out << "m de nu " << map.backbone_root << '\n';
  out << "m de leaves " << map.backbone_leaves << '\n';
  out << "m de budget " << map.budget << '\n';
  for (int i = 1; i <= map.p; ++i)
    for (const std::string& role : kMainRoles)
      out << "m main " << role << ' ' << i << ' ' << main_role_value(map.mains[i - 1], role)
          << '\n';
  for (int t = 1; t <= 4 * map.p; ++t)
    for (const std::string& role : kShadowRoles)
      out << "m shadow " << role << ' ' << t << ' ' << shadow_role_value(map.shadows[t - 1], role)
          << '\n';
  for (int j = 1; j <= map.p; ++j) {
    out << "m aux omega " << j << ' ' << map.omega[j - 1] << '\n';
    out << "m aux omegap " << j << ' ' << map.omega_p[j - 1] << '\n';
  }
  return out.str();
}

std::string write_map(const LnesProvenance& map) {
  std::ostringstream out;
  out << "m lnes p " << map.p << '\n';
  for (std::size_t j = 0; j < map.slots.size(); ++j)
    for (std::size_t t = 0; t < 4; ++t)
      out << "m lnes slot " << map.slots[j][t].clause << ' ' << map.slots[j][t].slot << ' '
          << map.slots[j][t].literal << '\n';
  return out.str();
}

namespace {

MapDoc parse_dv_map(const std::vector<Line>& lines) {
  DvReductionMap map;
  struct Entry {
    std::string role;
    int i = 0, j = 0;
    long long value = 0;
    int line = 0;
  };
  std::vector<Entry> entries;
  int max_i = 0, max_j = 0;
  for (const Line& line : lines) {
    if (line.tokens[1] != "dv") throw ParseError(line.number, "mixed map scopes");
    const std::string& role = line.tokens[2];
    Entry e;
    e.role = role;
    e.line = line.number;
    if (role == "nu" || role == "leaves" || role == "budget") {
      expect_arity(line, 4, "map line");
      e.value = to_int(line.tokens[3], line.number, "value", 0, (1LL << 62) - 1);
    } else if (role == "x" || role == "y") {
      expect_arity(line, 5, "map line");
      e.i = static_cast<int>(to_int(line.tokens[3], line.number, "class", 1, 1 << 20));
      e.value = to_int(line.tokens[4], line.number, "vertex", 1, 1 << 26);
      max_i = std::max(max_i, e.i);
    } else if (role == "p" || role == "a" || role == "b" || role == "u" || role == "orig") {
      expect_arity(line, 6, "map line");
      e.i = static_cast<int>(to_int(line.tokens[3], line.number, "class", 1, 1 << 20));
      e.j = static_cast<int>(to_int(line.tokens[4], line.number, "position", 1, 1 << 20));
      e.value = to_int(line.tokens[5], line.number, "vertex", 1, 1 << 26);
      max_i = std::max(max_i, e.i);
      max_j = std::max(max_j, e.j);
    } else {
      throw ParseError(line.number, "unknown dv map role '" + role + "'");
    }
    entries.push_back(e);
  }
  if (max_i == 0 || max_j == 0) throw ParseError(0, "dv map has no gadget lines");
  map.num_classes = max_i;
  map.class_size = max_j;
  map.gadgets.assign(max_i, std::vector<DvGadget>(max_j));
  map.guard_x.assign(max_i, 0);
  map.guard_y.assign(max_i, 0);

  bool saw_nu = false, saw_budget = false, saw_leaves = false;
  for (const Entry& e : entries) {
    if (e.role == "nu") {
      map.backbone_root = static_cast<VertexId>(e.value);
      saw_nu = true;
    } else if (e.role == "leaves") {
      map.backbone_leaves = static_cast<int>(e.value);
      saw_leaves = true;
    } else if (e.role == "budget") {
      map.budget = e.value;
      saw_budget = true;
    } else if (e.role == "x") {
      map.guard_x[e.i - 1] = static_cast<VertexId>(e.value);
    } else if (e.role == "y") {
      map.guard_y[e.i - 1] = static_cast<VertexId>(e.value);
    } else {
      DvGadget& g = map.gadgets[e.i - 1][e.j - 1];
      if (e.role == "p") g.p = static_cast<VertexId>(e.value);
      else if (e.role == "a") g.a = static_cast<VertexId>(e.value);
      else if (e.role == "b") g.b = static_cast<VertexId>(e.value);
      else if (e.role == "u") g.u = static_cast<VertexId>(e.value);
      else g.original = static_cast<VertexId>(e.value);
    }
  }
  if (!saw_nu || !saw_budget || !saw_leaves)
    throw ParseError(0, "dv map is missing nu, leaves or budget");
  for (int i = 0; i < max_i; ++i) {
    if (map.guard_x[i] == 0 || map.guard_y[i] == 0)
      throw ParseError(0, "dv map is missing guards for class " + std::to_string(i + 1));
    for (int j = 0; j < max_j; ++j) {
      const DvGadget& g = map.gadgets[i][j];
      if (g.p == 0 || g.a == 0 || g.b == 0 || g.u == 0 || g.original == 0)
        throw ParseError(0, "dv map is missing roles at class " + std::to_string(i + 1) +
                                ", position " + std::to_string(j + 1));
    }
  }
  MapDoc doc;
  doc.kind = MapKind::Dv;
  doc.dv = std::move(map);
  return doc;
}

MapDoc parse_de_map(const std::vector<Line>& lines) {
  DeReductionMap map;
  int max_main = 0, max_shadow = 0, max_aux = 0;
  for (const Line& line : lines) {
    const std::string& scope = line.tokens[1];
    if (scope == "main" || scope == "shadow") {
      expect_arity(line, 5, "map line");
      int idx = static_cast<int>(to_int(line.tokens[3], line.number, "index", 1, 1 << 22));
      if (scope == "main") max_main = std::max(max_main, idx);
      else max_shadow = std::max(max_shadow, idx);
    } else if (scope == "aux") {
      expect_arity(line, 5, "map line");
      int idx = static_cast<int>(to_int(line.tokens[3], line.number, "index", 1, 1 << 22));
      max_aux = std::max(max_aux, idx);
    } else if (scope != "de") {
      throw ParseError(line.number, "mixed map scopes");
    }
  }
  if (max_main == 0) throw ParseError(0, "de map has no main gadget lines");
  if (max_shadow != 4 * max_main)
    throw ParseError(0, "de map must carry exactly 4p shadow gadgets");
  if (max_aux != max_main) throw ParseError(0, "de map must carry exactly p aux pairs");
  map.p = max_main;
  map.mains.assign(max_main, {});
  map.shadows.assign(max_shadow, {});
  map.omega.assign(max_aux, 0);
  map.omega_p.assign(max_aux, 0);

  bool saw_nu = false, saw_budget = false, saw_leaves = false;
  for (const Line& line : lines) {
    const std::string& scope = line.tokens[1];
    if (scope == "de") {
      expect_arity(line, 4, "map line");
      const std::string& role = line.tokens[2];
      long long value = to_int(line.tokens[3], line.number, "value", 0, (1LL << 62) - 1);
      if (role == "nu") {
        map.backbone_root = static_cast<VertexId>(value);
        saw_nu = true;
      } else if (role == "leaves") {
        map.backbone_leaves = static_cast<int>(value);
        saw_leaves = true;
      } else if (role == "budget") {
        map.budget = value;
        saw_budget = true;
      } else {
        throw ParseError(line.number, "unknown de map role '" + role + "'");
      }
    } else if (scope == "main") {
      const std::string& role = line.tokens[2];
      int i = static_cast<int>(to_int(line.tokens[3], line.number, "index", 1, max_main));
      VertexId v = static_cast<VertexId>(to_int(line.tokens[4], line.number, "vertex", 1, 1 << 26));
      VertexId* slot = main_role_slot(map.mains[i - 1], role);
      if (!slot) throw ParseError(line.number, "unknown main role '" + role + "'");
      *slot = v;
    } else if (scope == "shadow") {
      const std::string& role = line.tokens[2];
      int t = static_cast<int>(to_int(line.tokens[3], line.number, "index", 1, max_shadow));
      VertexId v = static_cast<VertexId>(to_int(line.tokens[4], line.number, "vertex", 1, 1 << 26));
      VertexId* slot = shadow_role_slot(map.shadows[t - 1], role);
      if (!slot) throw ParseError(line.number, "unknown shadow role '" + role + "'");
      *slot = v;
    } else {
      const std::string& role = line.tokens[2];
      int j = static_cast<int>(to_int(line.tokens[3], line.number, "index", 1, max_aux));
      VertexId v = static_cast<VertexId>(to_int(line.tokens[4], line.number, "vertex", 1, 1 << 26));
      if (role == "omega") map.omega[j - 1] = v;
      else if (role == "omegap") map.omega_p[j - 1] = v;
      else throw ParseError(line.number, "unknown aux role '" + role + "'");
    }
  }
  if (!saw_nu || !saw_budget || !saw_leaves)
    throw ParseError(0, "de map is missing nu, leaves or budget");
  for (int i = 0; i < max_main; ++i)
    for (const std::string& role : kMainRoles)
      if (main_role_value(map.mains[i], role) == 0)
        throw ParseError(0, "de map is missing main role " + role + " at gadget " +
                                std::to_string(i + 1));
  for (int t = 0; t < max_shadow; ++t)
    for (const std::string& role : kShadowRoles)
      if (shadow_role_value(map.shadows[t], role) == 0)
        throw ParseError(0, "de map is missing shadow role " + role + " at gadget " +
                                std::to_string(t + 1));
  for (int j = 0; j < max_aux; ++j)
    if (map.omega[j] == 0 || map.omega_p[j] == 0)
      throw ParseError(0, "de map is missing omega vertices for clause " + std::to_string(j + 1));

  MapDoc doc;
  doc.kind = MapKind::De;
  doc.de = std::move(map);
  return doc;
}

MapDoc parse_lnes_map(const std::vector<Line>& lines) {
  LnesProvenance prov;
  for (const Line& line : lines) {
    if (line.tokens[1] != "lnes") throw ParseError(line.number, "mixed map scopes");
    const std::string& role = line.tokens[2];
    if (role == "p") {
      expect_arity(line, 4, "map line");
      prov.p = static_cast<int>(to_int(line.tokens[3], line.number, "p", 1, 1 << 22));
    } else if (role == "slot") {
      expect_arity(line, 6, "map line");
    } else {
      throw ParseError(line.number, "unknown lnes map role '" + role + "'");
    }
  }
  if (prov.p == 0) throw ParseError(0, "lnes map is missing p");
  prov.slots.assign(prov.p, {});
  std::vector<int> seen(prov.p + 1, 0);
  for (const Line& line : lines) {
    if (line.tokens[2] != "slot") continue;
    int j = static_cast<int>(to_int(line.tokens[3], line.number, "clause", 1, prov.p));
    int t = static_cast<int>(to_int(line.tokens[4], line.number, "slot", 1, 4));
    int lit = static_cast<int>(to_int(line.tokens[5], line.number, "literal", -(1 << 26), 1 << 26));
    if (lit == 0) throw ParseError(line.number, "literal 0");
    prov.slots[j - 1][t - 1] = AuxSlotOrigin{j, t, lit};
    ++seen[j];
  }
  for (int j = 1; j <= prov.p; ++j)
    if (seen[j] != 4) throw ParseError(0, "lnes map clause " + std::to_string(j) +
                                              " does not have 4 slots");
  MapDoc doc;
  doc.kind = MapKind::Lnes;
  doc.lnes = std::move(prov);
  return doc;
}

}  // namespace

MapDoc parse_map(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty map");
  for (const Line& line : lines) {
    if (line.tokens[0] != "m") throw ParseError(line.number, "expected 'm' lines");
    if (line.tokens.size() < 3) throw ParseError(line.number, "truncated map line");
  }
  const std::string& scope = lines[0].tokens[1];
  if (scope == "dv") return parse_dv_map(lines);
  if (scope == "lnes") return parse_lnes_map(lines);
  if (scope == "de" || scope == "main" || scope == "shadow" || scope == "aux")
    return parse_de_map(lines);
  throw ParseError(lines[0].number, "unknown map scope '" + scope + "'");
}

std::string write_bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "name,variant,n,m,k,status,weight,nodes,ms\n";
  for (const BenchRecord& r : records) {
    out << r.name << ',' << r.variant << ',' << r.n << ',' << r.m << ',' << r.k << ','
        << r.status << ',';
    if (r.weight) out << *r.weight;
    out << ',' << r.nodes << ',' << r.ms << '\n';
  }
  return out.str();
}

}  // namespace fbtlab
