// Command-line front end. Exit codes: 0 success / matching found, 1 usage,
// I/O or format error, 2 no fully popular matching, 3 a check failed.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "fpm/crosscheck.hpp"
#include "fpm/generator.hpp"
#include "fpm/instance_io.hpp"
#include "fpm/legal_edges.hpp"
#include "fpm/oracle.hpp"
#include "fpm/popularity.hpp"
#include "fpm/report.hpp"
#include "fpm/solver.hpp"

namespace {

using namespace fpm;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNoneExists = 2;
constexpr int kCheckFailed = 3;

// Thrown with a "file:line: message" diagnostic.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string located(const std::string& path, const InstanceError& e) {
  return path + (e.line() > 0 ? ":" + std::to_string(e.line()) : std::string()) + ": " + e.what();
}

Instance load_instance(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  try {
    return parse_instance(text);
  } catch (const InstanceError& e) {
    throw InputError(located(path, e));
  }
}

Matching load_matching(const Instance& inst, const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  try {
    return parse_matching(inst, text);
  } catch (const InstanceError& e) {
    throw InputError(located(path, e));
  }
}

const std::map<std::string, OutputFormat> kFormats{{"text", OutputFormat::kText}, {"json", OutputFormat::kJson}};
const std::map<std::string, EdgeBackend> kBackends{{"fast", EdgeBackend::kFast}, {"oracle", EdgeBackend::kOracle}};
const std::map<std::string, TriggerOrder> kOrders{
    {"lowest", TriggerOrder::kLowestId}, {"fifo", TriggerOrder::kFifo}, {"highest", TriggerOrder::kHighestId}};
const std::map<std::string, EdgeKind> kKinds{
    {"valid", EdgeKind::kValid}, {"popular", EdgeKind::kPopular}, {"legal", EdgeKind::kLegal}};

std::string pairs_text(const Instance& inst, const Matching& m) {
  std::ostringstream out;
  for (const Edge& e : m.pairs(inst)) out << "  " << inst.name(e.agent) << ' ' << inst.name(e.job) << "\n";
  return out.str();
}

struct SolveArgs {
  std::string path;
  OutputFormat format = OutputFormat::kText;
  bool trace = false;
  EdgeBackend backend = EdgeBackend::kFast;
  TriggerOrder order = TriggerOrder::kLowestId;
  bool dump_mirror = false;
};

int run_solve(const SolveArgs& args) {
  const Instance inst = load_instance(args.path);
  const SolveReport report = solve(inst, {args.backend, args.order});
  if (args.dump_mirror) {
    if (report.state)
      std::cout << report.state->mirror->dump();
    else
      std::cout << MirrorGraph(inst, legal_edge_set(inst, args.backend)).dump();
  }
  std::cout << format_solve_report(inst, report, args.format, args.trace);
  return report.found() ? kOk : kNoneExists;
}

struct VerifyArgs {
  std::string path;
  std::string matching;
  std::string mode = "fully";
};

int run_verify(const VerifyArgs& args) {
  const Instance inst = load_instance(args.path);
  const Matching m = load_matching(inst, args.matching);
  bool ok = true;
  if (args.mode == "popular" || args.mode == "fully") {
    const PopularityVerdict v = verify_popular(inst, m);
    if (v.popular) {
      std::cout << "popular; witness:";
      for (VertexId u = 0; u < inst.num_vertices(); ++u) std::cout << ' ' << inst.name(u) << '=' << v.witness->alpha[u];
      std::cout << "\n";
    } else {
      ok = false;
      std::cout << "not popular; this matching wins by " << v.max_weight << ":\n"
                << pairs_text(inst, *v.counterexample);
    }
  }
  if (args.mode == "a-popular" || args.mode == "fully") {
    const bool a_popular = check_a_popular(inst, compute_posts(inst), m);
    std::cout << (a_popular ? "A-popular\n" : "not A-popular\n");
    ok = ok && a_popular;
  }
  return ok ? kOk : kCheckFailed;
}

struct EdgesArgs {
  std::string path;
  EdgeKind kind = EdgeKind::kLegal;
  EdgeBackend backend = EdgeBackend::kFast;
  OutputFormat format = OutputFormat::kText;
};

int run_edges(const EdgesArgs& args) {
  const Instance inst = load_instance(args.path);
  std::cout << format_edges(inst, legal_edge_set(inst, args.backend), args.kind, args.format);
  return kOk;
}

struct OracleArgs {
  std::string path;
  bool cross_check = false;
  bool deep = false;
  int sweep = 0;
  std::uint64_t seed = 1;
  int max_side = 4;
  OutputFormat format = OutputFormat::kText;
};

int run_sweep(const OracleArgs& args) {
  std::vector<std::vector<std::string>> diffs(static_cast<std::size_t>(args.sweep));
  std::vector<std::string> errors(static_cast<std::size_t>(args.sweep));
#pragma omp parallel for schedule(dynamic, 4)
  for (int i = 0; i < args.sweep; ++i) {
    try {
      const Instance inst = generate_instance(sweep_params(args.seed, i, args.max_side));
      OracleOptions oo;
      oo.parallel = false;
      const OracleReport truth = ground_truth(inst, oo);
      diffs[i] = cross_check(inst, truth, solve(inst), {args.deep});
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  int bad = 0;
  for (int i = 0; i < args.sweep; ++i) {
    if (diffs[i].empty() && errors[i].empty()) continue;
    ++bad;
    const GeneratorParams p = sweep_params(args.seed, i, args.max_side);
    std::cout << "instance " << i << " (agents " << p.agents << ", jobs " << p.jobs << ", density " << p.density
              << ", seed " << p.seed << "):\n";
    if (!errors[i].empty()) std::cout << "  error: " << errors[i] << "\n";
    for (const auto& d : diffs[i]) std::cout << "  " << d << "\n";
  }
  std::cout << args.sweep << " instances, " << bad << " with differences\n";
  return bad == 0 ? kOk : kCheckFailed;
}

int run_oracle(const OracleArgs& args) {
  if (args.sweep > 0) return run_sweep(args);
  if (args.path.empty()) throw InputError("oracle: give an instance file or --sweep N");
  const Instance inst = load_instance(args.path);
  const OracleReport truth = ground_truth(inst);
  std::cout << format_oracle_report(inst, truth, args.format);
  if (!args.cross_check) return kOk;
  const auto diffs = cross_check(inst, truth, solve(inst), {args.deep});
  for (const auto& d : diffs) std::cout << "diff: " << d << "\n";
  std::cout << diffs.size() << " differences\n";
  return diffs.empty() ? kOk : kCheckFailed;
}

struct GenerateArgs {
  GeneratorParams params;
  std::string out;
};

int run_generate(const GenerateArgs& args) {
  Instance inst;
  try {
    inst = generate_instance(args.params);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("generate: ") + e.what());
  }
  const std::string text = serialize_instance(inst);
  if (args.out.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream file(args.out, std::ios::binary);
  if (!(file << text)) throw InputError("cannot write " + args.out);
  return kOk;
}

struct BenchArgs {
  std::vector<int> sizes{10000, 20000, 40000, 80000};
  int degree = 8;
  int repeat = 3;
  std::uint64_t seed = 1;
};

int run_bench(const BenchArgs& args) {
  std::cout << std::setw(8) << "m" << std::setw(8) << "n" << std::setw(12) << "seconds" << std::setw(14)
            << "ns/(m+n)" << std::setw(12) << "proposals" << std::setw(8) << "ratio" << "  outcome\n";
  double previous = 0;
  for (int size : args.sizes) {
    const Instance inst = generate_instance(constant_degree_params(size, args.degree, args.seed));
    double best = 1e300;
    SolveReport report;
    for (int r = 0; r < std::max(1, args.repeat); ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      report = solve(inst);
      best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    const double per = best * 1e9 / (inst.num_edges() + inst.num_vertices());
    std::cout << std::setw(8) << inst.num_edges() << std::setw(8) << inst.num_vertices() << std::setw(12)
              << std::fixed << std::setprecision(4) << best << std::setw(14) << std::setprecision(1) << per
              << std::setw(12) << report.proposals << std::setw(8)
              << std::setprecision(2) << (previous > 0 ? best / previous : 0.0) << "  "
              << (report.found() ? "found" : "none") << "\n";
    previous = best;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fully popular matchings in bipartite preference instances"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Find a max-size fully popular matching with its witness");
  solve_cmd->add_option("instance", solve_args.path, "Instance file")->required();
  solve_cmd->add_option("--format", solve_args.format)->transform(CLI::CheckedTransformer(kFormats));
  solve_cmd->add_flag("--trace", solve_args.trace, "Print one line per forbidding round");
  solve_cmd->add_option("--backend", solve_args.backend, "Popular-edge backend")
      ->transform(CLI::CheckedTransformer(kBackends));
  solve_cmd->add_option("--order", solve_args.order, "Trigger order")->transform(CLI::CheckedTransformer(kOrders));
  solve_cmd->add_flag("--dump-mirror", solve_args.dump_mirror, "Print the mirror graph first");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a given matching");
  verify_cmd->add_option("instance", verify_args.path, "Instance file")->required();
  verify_cmd->add_option("--matching", verify_args.matching, "Matching file")->required();
  verify_cmd->add_option("--mode", verify_args.mode)->check(CLI::IsMember({"popular", "a-popular", "fully"}));

  EdgesArgs edges_args;
  auto* edges_cmd = app.add_subcommand("edges", "Classify edges as valid, popular or legal");
  edges_cmd->add_option("instance", edges_args.path, "Instance file")->required();
  edges_cmd->add_option("--kind", edges_args.kind)->transform(CLI::CheckedTransformer(kKinds));
  edges_cmd->add_option("--backend", edges_args.backend)->transform(CLI::CheckedTransformer(kBackends));
  edges_cmd->add_option("--format", edges_args.format)->transform(CLI::CheckedTransformer(kFormats));

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive ground truth and solver cross-checks");
  oracle_cmd->add_option("instance", oracle_args.path, "Instance file");
  oracle_cmd->add_flag("--cross-check", oracle_args.cross_check, "Diff the solver against the oracle");
  oracle_cmd->add_flag("--deep", oracle_args.deep, "Also enumerate witnesses of fully popular matchings");
  oracle_cmd->add_option("--sweep", oracle_args.sweep, "Cross-check this many random small instances")
      ->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("--seed", oracle_args.seed, "Sweep seed");
  oracle_cmd->add_option("--max-side", oracle_args.max_side, "Largest |A| and |B| in the sweep")
      ->check(CLI::Range(1, 6));
  oracle_cmd->add_option("--format", oracle_args.format)->transform(CLI::CheckedTransformer(kFormats));

  GenerateArgs gen_args;
  auto* gen_cmd = app.add_subcommand("generate", "Write a random instance");
  gen_cmd->add_option("--agents", gen_args.params.agents)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--jobs", gen_args.params.jobs)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--density", gen_args.params.density)->required();
  gen_cmd->add_option("--seed", gen_args.params.seed)->required();
  gen_cmd->add_option("-o,--output", gen_args.out, "Output file (default: stdout)");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Time solve on growing instances of constant degree");
  bench_cmd->add_option("--sizes", bench_args.sizes, "Edge counts")->delimiter(',');
  bench_cmd->add_option("--degree", bench_args.degree)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--repeat", bench_args.repeat)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_args.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve_cmd) return run_solve(solve_args);
    if (*verify_cmd) return run_verify(verify_args);
    if (*edges_cmd) return run_edges(edges_args);
    if (*oracle_cmd) return run_oracle(oracle_args);
    if (*gen_cmd) return run_generate(gen_args);
    if (*bench_cmd) return run_bench(bench_args);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const OracleCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kInputError;
}
