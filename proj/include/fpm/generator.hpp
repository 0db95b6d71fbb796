#pragma once

#include <cstdint>

#include "fpm/instance.hpp"

namespace fpm {

struct GeneratorParams {
  int agents = 1;
  int jobs = 1;
  double density = 1.0;  // probability that an agent-job pair is an edge
  std::uint64_t seed = 0;
  int max_rerolls = 1000;  // per agent row left empty
};

/// Random instance: each pair is kept with probability `density`, then every
/// vertex's neighbor list is shuffled independently. Agents that draw no
/// neighbor redraw their row. Deterministic in the seed on every platform
/// (mt19937_64 with hand-rolled draws, no std distributions). Agents are
/// named a0, a1, ..., jobs b0, b1, ....
/// Throws std::invalid_argument on bad parameters or when some row stays
/// empty after max_rerolls redraws.
Instance generate_instance(const GeneratorParams& params);

}  // namespace fpm
