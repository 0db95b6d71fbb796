#pragma once

#include <string>
#include <vector>

#include "fpm/generator.hpp"
#include "fpm/instance.hpp"
#include "fpm/instance_io.hpp"

namespace fpm::testing {

inline Instance load(const std::string& name) { return parse_instance(read_file(std::string(FPM_TEST_DATA) + "/" + name)); }

inline Matching load_matching(const Instance& inst, const std::string& name) {
  return parse_matching(inst, read_file(std::string(FPM_TEST_DATA) + "/" + name));
}

inline VertexId id(const Instance& inst, const std::string& name) { return *inst.find(name); }

inline Matching pairs(const Instance& inst, const std::vector<std::pair<std::string, std::string>>& named) {
  Matching m(inst.num_vertices());
  for (const auto& [a, b] : named) m.pair(id(inst, a), id(inst, b));
  return m;
}

/// Small random instance for property checks; sides in [1, max_side].
inline Instance small_random(std::uint64_t seed, int max_side = 4) {
  const int agents = 1 + static_cast<int>(seed * 7 % static_cast<std::uint64_t>(max_side));
  const int jobs = 1 + static_cast<int>(seed * 13 / 3 % static_cast<std::uint64_t>(max_side));
  static constexpr double kDensity[] = {0.3, 0.6, 1.0};
  return generate_instance({agents, jobs, kDensity[seed % 3], seed});
}

}  // namespace fpm::testing
