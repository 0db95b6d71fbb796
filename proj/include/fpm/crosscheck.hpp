#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpm/generator.hpp"
#include "fpm/instance.hpp"
#include "fpm/oracle.hpp"
#include "fpm/solver.hpp"

namespace fpm {

/// Differences between the solver and exhaustive ground truth on one
/// instance: existence verdict, maximum size, popular edges from the fast
/// backend, the solver's structural invariants, and (when asked) U_A and the
/// zero pattern every witness of every fully popular matching must show on
/// marked components. Empty when everything agrees.
struct CrossCheckOptions {
  bool deep = false;  // also run the witness-enumeration checks
};

std::vector<std::string> cross_check(const Instance& inst, const OracleReport& truth, const SolveReport& report,
                                     const CrossCheckOptions& options = {});
std::vector<std::string> cross_check(const Instance& inst, const CrossCheckOptions& options = {});

/// Parameters of the i-th instance of a seeded small sweep: |A| and |B| drawn
/// from [1, max_side], density cycling through 0.3, 0.6, 1.0.
GeneratorParams sweep_params(std::uint64_t seed, int index, int max_side = 4);

/// Instance for timing runs: about `edges` edges with average agent degree
/// `degree`, as many jobs as agents.
GeneratorParams constant_degree_params(int edges, int degree, std::uint64_t seed);

}  // namespace fpm
