#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "automata.hpp"
#include "bench.hpp"
#include "decomp.hpp"
#include "formats.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "rng.hpp"
#include "semiring.hpp"
#include "tiling.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

struct EvalArgs {
  std::string wts_path, graph_path, method = "brute", decomposition_path;
  std::optional<int> max_width;
  std::uint64_t budget = 10'000'000;
  bool stats = false;
};

struct CheckArgs {
  std::string kind, path, graph_path;
};

struct DecomposeArgs {
  std::string graph_path, kind = "tree", out = "-";
  std::optional<int> max_width;
};

struct GenerateArgs {
  std::string family, out_prefix;
  int size = 3;
  std::uint64_t seed = 1;
};

struct BenchArgs {
  std::string family = "clique-strip", sizes_csv, range, out = "-";
  int reps = 3;
};

int run_eval(const EvalArgs& args) {
  wts::TilingSystem system = wts::wts_from_json(wts::read_input(args.wts_path));
  wts::Graph graph = wts::graph_from_json(wts::read_input(args.graph_path));

  wts::EvalStats stats;
  wts::Weight value = system.semiring().zero();
  auto start = std::chrono::steady_clock::now();
  if (args.method == "brute") {
    wts::BruteOptions opts;
    opts.budget = args.budget;
    value = wts::eval_brute(system, graph, opts);
  } else if (args.method == "pathwidth" || args.method == "treewidth") {
    wts::PipelineOptions opts;
    opts.max_width = args.max_width;
    std::optional<wts::PathDecomposition> pd;
    std::optional<wts::TreeDecomposition> td;
    if (!args.decomposition_path.empty()) {
      std::string text = wts::read_input(args.decomposition_path);
      if (args.method == "pathwidth")
        pd = wts::path_decomposition_from_json(text);
      else
        td = wts::tree_decomposition_from_json(text);
    }
    wts::EvalStats* sp = args.stats ? &stats : nullptr;
    value = args.method == "pathwidth" ? wts::eval_pw(system, graph, pd, opts, sp)
                                       : wts::eval_tw(system, graph, td, opts, sp);
  } else {
    throw wts::ParseError("unknown method \"" + args.method + "\"");
  }
  double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::cout << system.semiring().render(value) << "\n";
  if (args.stats) {
    std::ostringstream os;
    os << "{\"method\":\"" << args.method << "\"";
    os << ",\"width_used\":";
    if (stats.width_used >= 0) os << stats.width_used; else os << "null";
    os << ",\"term_size\":";
    if (stats.term_size >= 0) os << stats.term_size; else os << "null";
    os << ",\"reachable_states\":";
    if (stats.reachable_states >= 0) os << stats.reachable_states; else os << "null";
    os << ",\"wall_time_ms\":" << wall_ms << "}";
    std::cerr << os.str() << "\n";
  }
  return kExitOk;
}

int run_check(const CheckArgs& args) {
  std::string text = wts::read_input(args.path);
  if (args.kind == "graph") {
    wts::Graph g = wts::graph_from_json(text);
    std::cout << "ok: graph with " << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges\n";
    return kExitOk;
  }
  if (args.kind == "wts") {
    wts::TilingSystem ts = wts::wts_from_json(text);
    std::cout << "ok: tiling system with " << ts.state_count() << " states, "
              << ts.tiles().size() << " tiles over " << ts.semiring().name() << "\n";
    return kExitOk;
  }
  if (args.kind == "kword") {
    wts::KWord w = wts::kword_from_json(text);
    wts::WfCheck wf = wts::is_well_formed_kword(w);
    if (!wf.ok)
      throw wts::ValidationError("op " + std::to_string(wf.position) + ": " + wf.message);
    wts::kword_semantics(w);
    std::cout << "ok: well-formed " << w.k << "-word with " << w.ops.size() << " ops\n";
    return kExitOk;
  }
  if (args.kind == "ktt") {
    wts::KTreeTerm t = wts::ktt_from_json(text);
    wts::WfCheck wf = wts::is_well_formed_ktt(t);
    if (!wf.ok)
      throw wts::ValidationError("node " + std::to_string(wf.position) + ": " + wf.message);
    wts::ktt_semantics(t);
    std::cout << "ok: well-formed " << t.k << "-term with " << t.nodes.size() << " nodes\n";
    return kExitOk;
  }
  if (args.kind == "pathdecomp" || args.kind == "treedecomp") {
    if (args.graph_path.empty())
      throw wts::ParseError("--graph is required to validate a decomposition");
    wts::Graph g = wts::graph_from_json(wts::read_input(args.graph_path));
    int width = args.kind == "pathdecomp"
                    ? wts::validate_path_decomposition(g, wts::path_decomposition_from_json(text))
                    : wts::validate_tree_decomposition(g, wts::tree_decomposition_from_json(text));
    std::cout << "ok: width " << width << "\n";
    return kExitOk;
  }
  throw wts::ParseError("unknown kind \"" + args.kind + "\"");
}

int run_decompose(const DecomposeArgs& args) {
  wts::Graph g = wts::graph_from_json(wts::read_input(args.graph_path));
  if (args.kind == "path" || args.kind == "kword") {
    wts::PathDecomposition pd = wts::heuristic_path_decomposition(g);
    int width = wts::validate_path_decomposition(g, pd);
    if (args.max_width && width > *args.max_width)
      throw wts::ResourceError("heuristic path decomposition width " + std::to_string(width) +
                               " exceeds target " + std::to_string(*args.max_width));
    if (args.kind == "path") {
      wts::write_output(args.out, wts::path_decomposition_to_json(pd));
    } else {
      wts::KWordBuild kw = wts::kword_from_path_decomposition(g, pd);
      wts::write_output(args.out, wts::kword_to_json(kw.word));
    }
    return kExitOk;
  }
  if (args.kind == "tree" || args.kind == "ktt") {
    wts::TreeDecomposition td = wts::heuristic_tree_decomposition(g, args.max_width);
    if (args.kind == "tree") {
      wts::write_output(args.out, wts::tree_decomposition_to_json(td));
    } else {
      wts::KttBuild kt = wts::ktt_from_tree_decomposition(g, td);
      wts::write_output(args.out, wts::ktt_to_json(kt.term));
    }
    return kExitOk;
  }
  throw wts::ParseError("unknown kind \"" + args.kind + "\"");
}

wts::Cnf random_cnf(std::mt19937_64& rng, int vars, int clauses) {
  wts::Cnf cnf;
  cnf.num_vars = vars;
  for (int c = 0; c < clauses; ++c) {
    int len = static_cast<int>(wts::rng_range(rng, 1, 3));
    std::vector<int> clause;
    for (int l = 0; l < len; ++l) {
      int var = static_cast<int>(wts::rng_range(rng, 1, vars));
      int lit = wts::rng_bool(rng) ? var : -var;
      bool tautology = false;
      for (int existing : clause) tautology = tautology || existing == -lit;
      if (!tautology) clause.push_back(lit);
    }
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

int run_generate(const GenerateArgs& args) {
  if (args.size < 1) throw wts::ParseError("--size must be positive");
  if (args.out_prefix.empty()) throw wts::ParseError("--out-prefix is required");
  std::mt19937_64 rng(args.seed);

  wts::TilingSystem system = wts::binary_path_wts();  // placeholder, reassigned below
  std::optional<wts::Graph> graph;
  if (args.family == "permanent") {
    std::vector<std::vector<std::string>> labels(args.size,
                                                 std::vector<std::string>(args.size));
    for (auto& row : labels)
      for (auto& cell : row) cell = wts::rng_bool(rng) ? "1" : "0";
    graph = wts::grid_graph(args.size, args.size, labels);
    system = wts::permanent_wts();
  } else if (args.family == "clique") {
    std::vector<std::vector<bool>> adj(args.size, std::vector<bool>(args.size, false));
    for (int i = 0; i < args.size; ++i)
      for (int j = i + 1; j < args.size; ++j) adj[i][j] = adj[j][i] = wts::rng_bool(rng);
    graph = wts::triangular_grid(adj);
    system = wts::clique_wts();
  } else if (args.family == "sat") {
    wts::Cnf cnf = random_cnf(rng, args.size, std::max(1, args.size - 1));
    graph = wts::cnf_to_grid(cnf);
    system = wts::sharp_sat_wts();
  } else if (args.family == "gap") {
    int clauses = std::max(1, args.size / 2);
    wts::Cnf phi1 = random_cnf(rng, args.size, clauses);
    wts::Cnf phi2 = random_cnf(rng, args.size, clauses);
    graph = wts::gap_encoding(phi1, phi2);
    system = wts::gap_wts();
  } else if (args.family == "binary") {
    std::string bits;
    for (int i = 0; i < args.size; ++i) bits.push_back(wts::rng_bool(rng) ? '1' : '0');
    auto [ts, g] = wts::binary_path_instance(bits);
    system = std::move(ts);
    graph = std::move(g);
  } else {
    throw wts::ParseError("unknown family \"" + args.family + "\"");
  }
  wts::write_output(args.out_prefix + ".wts.json", wts::wts_to_json(system));
  wts::write_output(args.out_prefix + ".graph.json", wts::graph_to_json(*graph));
  std::cout << "wrote " << args.out_prefix << ".wts.json and " << args.out_prefix
            << ".graph.json\n";
  return kExitOk;
}

std::vector<int> parse_sizes(const BenchArgs& args) {
  std::vector<int> sizes;
  if (!args.sizes_csv.empty()) {
    std::istringstream in(args.sizes_csv);
    std::string tok;
    while (std::getline(in, tok, ',')) sizes.push_back(std::stoi(tok));
  } else if (!args.range.empty()) {
    auto dots = args.range.find("..");
    if (dots == std::string::npos) throw wts::ParseError("--n expects the form A..B");
    int lo = std::stoi(args.range.substr(0, dots));
    int hi = std::stoi(args.range.substr(dots + 2));
    for (int n = lo; n <= hi; n *= 2) sizes.push_back(n);  // doubling ladder
  } else {
    sizes = {50, 100, 200, 400};
  }
  if (sizes.empty()) throw wts::ParseError("no bench sizes given");
  return sizes;
}

int run_bench_cmd(const BenchArgs& args) {
  wts::BenchResult result = wts::run_bench(args.family, parse_sizes(args), args.reps);
  wts::write_output(args.out, wts::bench_csv(result));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semiring-weighted tiling systems over bounded-degree graphs"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate a tiling system on a graph");
  eval->add_option("--wts", eval_args.wts_path, "tiling system file ('-' for stdin)")->required();
  eval->add_option("--graph", eval_args.graph_path, "graph file")->required();
  eval->add_option("--method", eval_args.method, "brute|pathwidth|treewidth");
  eval->add_option("--decomposition", eval_args.decomposition_path,
                   "decomposition file matching the method");
  eval->add_option("--max-width", eval_args.max_width, "reject wider decompositions");
  eval->add_option("--budget", eval_args.budget, "brute-force labeling budget");
  eval->add_flag("--stats", eval_args.stats, "emit a stats JSON line on stderr");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "validate a file, reporting the first violation");
  check->add_option("--kind", check_args.kind, "graph|wts|kword|ktt|pathdecomp|treedecomp")
      ->required();
  check->add_option("--graph", check_args.graph_path, "graph file (for decompositions)");
  check->add_option("file", check_args.path, "file to validate")->required();

  DecomposeArgs dec_args;
  auto* dec = app.add_subcommand("decompose", "compute decompositions or terms");
  dec->add_option("--graph", dec_args.graph_path, "graph file")->required();
  dec->add_option("--kind", dec_args.kind, "path|tree|kword|ktt");
  dec->add_option("--max-width", dec_args.max_width, "fail when the heuristic exceeds this");
  dec->add_option("--out", dec_args.out, "output file ('-' for stdout)");

  GenerateArgs gen_args;
  auto* gen = app.add_subcommand("generate", "emit a seeded fixture pair (system + graph)");
  gen->add_option("--family", gen_args.family, "permanent|clique|sat|gap|binary")->required();
  gen->add_option("--size", gen_args.size, "instance size parameter")->required();
  gen->add_option("--seed", gen_args.seed, "random seed");
  gen->add_option("--out-prefix", gen_args.out_prefix, "prefix for the two output files")
      ->required();

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "time the path-width pipeline over a size family");
  bench->add_option("--family", bench_args.family, "clique-strip|perm-grid3xN");
  bench->add_option("--sizes", bench_args.sizes_csv, "comma-separated sizes");
  bench->add_option("--n", bench_args.range, "doubling ladder A..B");
  bench->add_option("--reps", bench_args.reps, "repetitions per size (median)");
  bench->add_option("--out", bench_args.out, "CSV output file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*eval) return run_eval(eval_args);
    if (*check) return run_check(check_args);
    if (*dec) return run_decompose(dec_args);
    if (*gen) return run_generate(gen_args);
    if (*bench) return run_bench_cmd(bench_args);
    return kExitParse;
  } catch (const wts::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const wts::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const wts::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
