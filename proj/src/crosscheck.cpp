#include "fpm/crosscheck.hpp"

#include <algorithm>
#include <random>

#include "fpm/legal_edges.hpp"

namespace fpm {

std::vector<std::string> cross_check(const Instance& inst, const OracleReport& truth, const SolveReport& report,
                                     const CrossCheckOptions& options) {
  std::vector<std::string> diffs;
  const bool exists = truth.num_fully_popular > 0;
  if (report.found() != exists) {
    diffs.push_back(std::string("verdict: solver says ") + (report.found() ? "found" : "none") + ", oracle says " +
                    (exists ? "found" : "none"));
    return diffs;
  }
  if (report.found() && report.result().size != *truth.max_fully_popular_size)
    diffs.push_back("size: solver " + std::to_string(report.result().size) + ", oracle max " +
                    std::to_string(*truth.max_fully_popular_size));

  const EdgeFlags fast = popular_edges(inst, EdgeBackend::kFast);
  if (fast.edge != truth.popular_edge) diffs.push_back("popular edges differ from the oracle union");
  if (fast.loop != truth.popular_loop) diffs.push_back("popular self-loops differ from the oracle");
  if (!truth.loop_rule_holds) diffs.push_back("oracle: popular self-loops differ from unstable vertices");

  for (const std::string& f : check_solver_invariants(inst, report)) diffs.push_back("invariant: " + f);

  if (options.deep && report.found() && report.state) {
    const SolverState& st = *report.state;
    // Agents twin-matched by the solver are exactly those single in every
    // fully popular matching.
    for (VertexId a = 0; a < inst.num_agents(); ++a) {
      bool always_single = true;
      for (std::size_t i = 0; i < truth.matchings.size(); ++i)
        if (truth.fully_popular[i] && truth.matchings[i].is_matched(a)) always_single = false;
      if (always_single != st.partition.twin(a)) {
        diffs.push_back("U_A membership of " + inst.name(a) + " disagrees with the oracle");
        break;
      }
    }
    // Every witness of every fully popular matching vanishes on marked
    // vertices.
    for (std::size_t i = 0; i < truth.matchings.size(); ++i) {
      if (!truth.fully_popular[i]) continue;
      for (const Witness& w : all_witnesses(inst, truth.matchings[i]))
        for (VertexId u = 0; u < inst.num_vertices(); ++u)
          if (st.marked[u] && w.alpha[u] != 0) {
            diffs.push_back("a witness of a fully popular matching is nonzero on marked " + inst.name(u));
            return diffs;
          }
    }
  }
  return diffs;
}

std::vector<std::string> cross_check(const Instance& inst, const CrossCheckOptions& options) {
  const OracleReport truth = ground_truth(inst);
  const SolveReport report = solve(inst);
  return cross_check(inst, truth, report, options);
}

GeneratorParams sweep_params(std::uint64_t seed, int index, int max_side) {
  static constexpr double kDensities[] = {0.3, 0.6, 1.0};
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(index + 1)));
  GeneratorParams p;
  p.agents = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_side));
  p.jobs = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_side));
  p.density = kDensities[index % 3];
  p.seed = rng();
  return p;
}

GeneratorParams constant_degree_params(int edges, int degree, std::uint64_t seed) {
  GeneratorParams p;
  p.agents = std::max(1, edges / degree);
  p.jobs = p.agents;
  p.density = std::min(1.0, static_cast<double>(degree) / p.jobs);
  p.seed = seed;
  return p;
}

}  // namespace fpm
