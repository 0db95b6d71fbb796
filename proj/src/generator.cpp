#include "fpm/generator.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace fpm {

namespace {

// std::uniform_*_distribution is implementation-defined; these are not.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

}  // namespace

Instance generate_instance(const GeneratorParams& params) {
  if (params.agents < 1) throw std::invalid_argument("need at least one agent");
  if (params.jobs < 1) throw std::invalid_argument("need at least one job");
  if (!(params.density > 0.0 && params.density <= 1.0)) throw std::invalid_argument("density must lie in (0, 1]");

  const int na = params.agents;
  const int nb = params.jobs;
  std::mt19937_64 rng(params.seed);
  std::vector<std::vector<VertexId>> prefs(static_cast<std::size_t>(na + nb));
  for (VertexId a = 0; a < na; ++a) {
    auto& row = prefs[a];
    for (int attempt = 0; row.empty(); ++attempt) {
      if (attempt > params.max_rerolls)
        throw std::invalid_argument("agent row stayed empty after " + std::to_string(params.max_rerolls) +
                                    " redraws; density too low");
      for (int j = 0; j < nb; ++j)
        if (unit(rng) < params.density) row.push_back(na + j);
    }
  }
  for (VertexId a = 0; a < na; ++a)
    for (VertexId b : prefs[a]) prefs[b].push_back(a);
  for (auto& list : prefs) shuffle(list, rng);

  std::vector<std::string> agents, jobs;
  for (int i = 0; i < na; ++i) agents.push_back("a" + std::to_string(i));
  for (int j = 0; j < nb; ++j) jobs.push_back("b" + std::to_string(j));
  return Instance(std::move(agents), std::move(jobs), std::move(prefs));
}

}  // namespace fpm
