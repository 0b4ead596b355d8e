#include "fbtlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fbtlab/io.hpp"

namespace fbtlab {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

void emit(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty()) out << content;
  else write_file(path, content);
}

std::optional<std::uint64_t> effective_node_limit(std::uint64_t flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("FBTLAB_NODE_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return std::nullopt;
}

void print_stats(const SearchStats& stats, std::ostream& out) {
  out << "c nodes " << stats.nodes_expanded << "\n";
  out << "c max-depth " << stats.max_depth << "\n";
  for (int i = 0; i < kBranchRuleCount; ++i) {
    if (stats.rule_counts[i] == 0) continue;
    out << "c rule " << branch_rule_name(static_cast<BranchRule>(i)) << ' '
        << stats.rule_counts[i] << "\n";
  }
}

struct SolveOutcome {
  SolveStatus status = SolveStatus::Unsat;
  SolutionDoc doc;
  SearchStats stats;
};

SolveOutcome run_solver(const DeletionInstance& instance, bool optimize, bool oracle,
                        std::optional<std::uint64_t> node_limit) {
  SolveOutcome outcome;
  SolveOptions opts;
  opts.node_limit = node_limit;
  if (instance.variant == Variant::DV) {
    if (oracle) {
      std::optional<DvSolution> s = brute_force_dv(instance);
      outcome.status = s ? SolveStatus::Sat : SolveStatus::Unsat;
      outcome.doc = s ? make_solution_doc(*s) : make_unsat_doc(Variant::DV);
      return outcome;
    }
    DvSolveResult r = optimize ? optimize_dv(instance, opts) : solve_dv(instance, opts);
    outcome.status = r.status;
    outcome.stats = r.stats;
    outcome.doc = r.solution ? make_solution_doc(*r.solution) : make_unsat_doc(Variant::DV);
  } else {
    if (oracle) {
      std::optional<DeSolution> s = brute_force_de(instance);
      outcome.status = s ? SolveStatus::Sat : SolveStatus::Unsat;
      outcome.doc = s ? make_solution_doc(*s) : make_unsat_doc(Variant::DE);
      return outcome;
    }
    DeSolveResult r = optimize ? optimize_de(instance, opts) : solve_de(instance, opts);
    outcome.status = r.status;
    outcome.stats = r.stats;
    outcome.doc = r.solution ? make_solution_doc(*r.solution) : make_unsat_doc(Variant::DE);
  }
  return outcome;
}

int cmd_solve(const std::string& input, const std::string& output, bool optimize, bool oracle,
              std::uint64_t node_limit_flag, bool stats, std::ostream& out) {
  DeletionInstance instance = parse_fbt(read_file(input));
  SolveOutcome outcome =
      run_solver(instance, optimize, oracle, effective_node_limit(node_limit_flag));
  if (outcome.status == SolveStatus::NodeLimit) {
    out << "c node limit reached\n";
    if (stats) print_stats(outcome.stats, out);
    return 3;
  }
  emit(write_solution(outcome.doc), output, out);
  if (stats) print_stats(outcome.stats, out);
  return outcome.status == SolveStatus::Sat ? 0 : 1;
}

int cmd_verify(const std::string& input, const std::string& solution_path, std::ostream& out) {
  DeletionInstance instance = parse_fbt(read_file(input));
  SolutionDoc doc = parse_solution(read_file(solution_path));
  if (doc.variant != instance.variant)
    throw Error("solution variant does not match the instance");
  if (!doc.sat) throw Error("nothing to verify: solution says unsat");
  bool ok;
  if (instance.variant == Variant::DV)
    ok = verify_dv(instance, DvSolution{doc.vertices, doc.weight});
  else
    ok = verify_de(instance, DeSolution{doc.edges, doc.weight});
  out << (ok ? "valid\n" : "invalid\n");
  return ok ? 0 : 1;
}

int cmd_reduce(const std::string& mode, const std::string& input, const std::string& output,
               const std::string& map_path, std::ostream& out) {
  if (mode == "mcis-to-dv") {
    McisInstance m = parse_mcis(read_file(input));
    auto [instance, map] = mcis_to_fbtdv(m);
    emit(write_fbt(instance), output, out);
    if (!map_path.empty()) write_file(map_path, write_map(map));
  } else if (mode == "sat224-to-lnes") {
    Cnf cnf = parse_cnf(read_file(input));
    ValidationReport rep = validate_224(cnf);
    if (!rep.ok) throw Error("not a (2/2/4) instance: " + rep.violations[0]);
    LnesConversion conv = sat224_to_lnes(cnf);
    emit(write_lnes(conv.instance), output, out);
    if (!map_path.empty()) write_file(map_path, write_map(conv.provenance));
  } else {
    LnesInstance l = parse_lnes(read_file(input));
    auto [instance, map] = lnes_to_fbtde(l);
    emit(write_fbt(instance), output, out);
    if (!map_path.empty()) write_file(map_path, write_map(map));
  }
  return 0;
}

int cmd_lift(const std::string& mode, const std::string& map_path,
             const std::string& solution_path, const std::string& output, std::ostream& out) {
  MapDoc map = parse_map(read_file(map_path));
  if (mode == "dv-to-mcis") {
    if (map.kind != MapKind::Dv) throw Error("expected a dv reduction map");
    SolutionDoc doc = parse_solution(read_file(solution_path));
    if (doc.variant != Variant::DV || !doc.sat) throw Error("expected a sat dv solution");
    std::vector<VertexId> set = lift_dv_solution(*map.dv, DvSolution{doc.vertices, doc.weight});
    std::ostringstream text;
    for (VertexId v : set) text << "v " << v << "\n";
    emit(text.str(), output, out);
  } else if (mode == "de-to-lnes") {
    if (map.kind != MapKind::De) throw Error("expected a de reduction map");
    SolutionDoc doc = parse_solution(read_file(solution_path));
    if (doc.variant != Variant::DE || !doc.sat) throw Error("expected a sat de solution");
    Assignment zeta = lift_de_solution(*map.de, DeSolution{doc.edges, doc.weight});
    emit(write_assignment(zeta), output, out);
  } else {  // lnes-to-sat224
    if (map.kind != MapKind::Lnes) throw Error("expected an lnes provenance map");
    Assignment zeta = parse_assignment(read_file(solution_path));
    const int p = map.lnes->p;
    if (zeta.size() != 5 * p) throw Error("assignment length does not match the chain");
    Assignment tau(std::vector<std::uint8_t>(zeta.bits.begin(), zeta.bits.begin() + p));
    emit(write_assignment(tau), output, out);
  }
  return 0;
}

int cmd_gen(const std::string& mode, int leaves, int noise, int vars, std::uint64_t seed,
            const std::string& output, std::ostream& out) {
  if (mode == "sat224") {
    emit(write_cnf(gen_224(vars, seed)), output, out);
  } else {
    Variant variant = mode == "planted-dv" ? Variant::DV : Variant::DE;
    PlantedInstance planted = gen_planted(variant, leaves, noise, seed);
    emit(write_fbt(planted.instance), output, out);
  }
  return 0;
}

int cmd_bench(const std::string& dir, const std::string& csv_path,
              std::uint64_t node_limit_flag, std::ostream& out) {
  if (!fs::is_directory(dir)) throw Error(dir + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".fbt")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::optional<std::uint64_t> node_limit = effective_node_limit(node_limit_flag);
  std::vector<BenchRecord> records;
  for (const fs::path& file : files) {
    BenchRecord rec;
    rec.name = file.stem().string();
    try {
      DeletionInstance instance = parse_fbt(read_file(file.string()));
      rec.variant = variant_name(instance.variant);
      rec.n = instance.graph.vertex_count();
      rec.m = instance.graph.edge_count();
      rec.k = instance.budget;
      auto start = std::chrono::steady_clock::now();
      SolveOutcome outcome = run_solver(instance, false, false, node_limit);
      auto stop = std::chrono::steady_clock::now();
      rec.ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
      rec.status = status_name(outcome.status);
      rec.nodes = outcome.stats.nodes_expanded;
      if (outcome.status == SolveStatus::Sat) rec.weight = outcome.doc.weight;
    } catch (const Error&) {
      rec.variant = "-";
      rec.status = "error";
    }
    records.push_back(std::move(rec));
  }
  emit(write_bench_csv(records), csv_path, out);
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact deletion-to-full-binary-tree toolkit"};
  app.name("fbtlab");
  app.require_subcommand(1);

  std::string input, output, solution_path, map_path, dir, csv_path, mode;
  bool optimize = false, oracle = false, stats = false;
  std::uint64_t node_limit = 0, seed = 0;
  int leaves = 16, noise = 0, vars = 4;

  CLI::App* solve = app.add_subcommand("solve", "run the branching solver on an instance");
  solve->add_option("-i,--input", input, "instance file")->required();
  solve->add_option("-o,--output", output, "solution file (stdout if omitted)");
  solve->add_flag("--optimize", optimize, "sweep budgets 0..k and report the minimum");
  solve->add_flag("--oracle", oracle, "use the guarded brute-force oracle");
  solve->add_option("--node-limit", node_limit, "abort after this many search nodes");
  solve->add_flag("--stats", stats, "print search statistics");

  CLI::App* verify = app.add_subcommand("verify", "check a solution against an instance");
  verify->add_option("-i,--input", input, "instance file")->required();
  verify->add_option("-s,--solution", solution_path, "solution file")->required();

  CLI::App* reduce = app.add_subcommand("reduce", "run an instance transformation");
  reduce->add_option("mode", mode, "mcis-to-dv | sat224-to-lnes | lnes-to-de")
      ->required()
      ->check(CLI::IsMember({"mcis-to-dv", "sat224-to-lnes", "lnes-to-de"}));
  reduce->add_option("-i,--input", input, "source instance")->required();
  reduce->add_option("-o,--output", output, "reduced instance")->required();
  reduce->add_option("--map", map_path, "write the role map here");

  CLI::App* lift = app.add_subcommand("lift", "map a solution back through a reduction");
  lift->add_option("mode", mode, "dv-to-mcis | de-to-lnes | lnes-to-sat224")
      ->required()
      ->check(CLI::IsMember({"dv-to-mcis", "de-to-lnes", "lnes-to-sat224"}));
  lift->add_option("--map", map_path, "role map file")->required();
  lift->add_option("-s,--solution", solution_path, "solution file")->required();
  lift->add_option("-o,--output", output, "lifted output (stdout if omitted)");

  CLI::App* gen = app.add_subcommand("gen", "generate instances");
  gen->add_option("mode", mode, "planted-dv | planted-de | sat224")
      ->required()
      ->check(CLI::IsMember({"planted-dv", "planted-de", "sat224"}));
  gen->add_option("--leaves", leaves, "leaves of the planted tree");
  gen->add_option("--noise", noise, "planted perturbation size");
  gen->add_option("--vars", vars, "variables for sat224");
  gen->add_option("--seed", seed, "rng seed")->required();
  gen->add_option("-o,--output", output, "output file")->required();

  CLI::App* bench = app.add_subcommand("bench", "solve every .fbt instance in a directory");
  bench->add_option("--dir", dir, "instance directory")->required();
  bench->add_option("--csv", csv_path, "CSV output file")->required();
  bench->add_option("--node-limit", node_limit, "per-instance node cap");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(input, output, optimize, oracle, node_limit, stats, out);
    if (verify->parsed()) return cmd_verify(input, solution_path, out);
    if (reduce->parsed()) return cmd_reduce(mode, input, output, map_path, out);
    if (lift->parsed()) return cmd_lift(mode, map_path, solution_path, output, out);
    if (gen->parsed()) return cmd_gen(mode, leaves, noise, vars, seed, output, out);
    if (bench->parsed()) return cmd_bench(dir, csv_path, node_limit, out);
  } catch (const LiftFailureError& e) {
    err << "lift failed: " << e.what() << "\n";
    return 1;
  } catch (const InvalidWitnessError& e) {
    err << "invalid witness: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace fbtlab
