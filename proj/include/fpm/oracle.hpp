#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpm/instance.hpp"
#include "fpm/popularity.hpp"

namespace fpm {

/// Thrown when an instance is too large for exhaustive treatment.
class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vertex cap for enumeration: FPM_ORACLE_MAX_VERTICES if set, else 16.
int oracle_vertex_cap();

/// Every matching of the instance exactly once, the empty one included, as
/// augmented matchings. Agents branch one at a time over their free
/// neighbors and the option of staying single.
std::vector<Matching> enumerate_matchings(const Instance& inst);
std::vector<Matching> enumerate_matchings(const Instance& inst, int vertex_cap);

/// partner rank per matching and vertex, the input of the election kernel.
struct RankTable {
  int num_matchings = 0;
  int num_vertices = 0;
  int num_agents = 0;
  std::vector<std::int32_t> rank;  // row-major [matching][vertex]
  const std::int32_t* row(int i) const { return rank.data() + static_cast<std::size_t>(i) * num_vertices; }
};

RankTable make_rank_table(const Instance& inst, const std::vector<Matching>& matchings);

/// For each matching i: popular[i] iff no j gets more votes than i, and
/// a_popular[i] likewise counting agent votes only.
struct ElectionFlags {
  std::vector<std::uint8_t> popular;
  std::vector<std::uint8_t> a_popular;
  friend bool operator==(const ElectionFlags&, const ElectionFlags&) = default;
};

ElectionFlags election_flags_serial(const RankTable& table);
/// OpenMP version over matchings; must agree with the serial kernel.
ElectionFlags election_flags_parallel(const RankTable& table);

struct OracleReport {
  std::vector<Matching> matchings;
  std::vector<std::uint8_t> popular;
  std::vector<std::uint8_t> a_popular;
  std::vector<std::uint8_t> fully_popular;
  std::vector<std::uint8_t> has_witness;  // filled only when requested

  int num_popular = 0;
  int num_a_popular = 0;
  int num_fully_popular = 0;
  std::optional<int> min_popular_size;
  std::optional<int> max_popular_size;
  std::optional<int> min_fully_popular_size;
  std::optional<int> max_fully_popular_size;

  std::vector<std::uint8_t> popular_edge;  // per edge: in some popular matching
  std::vector<std::uint8_t> popular_loop;  // per vertex: single in some popular matching
  /// popular_loop[u] == (u is matched in no stable matching), as it must be.
  bool loop_rule_holds = true;
};

struct OracleOptions {
  bool parallel = true;
  bool witness_flags = false;  // run witness_search on every matching
  int vertex_cap = -1;         // -1: oracle_vertex_cap()
};

OracleReport ground_truth(const Instance& inst, const OracleOptions& options = {});

/// Exhaustive search over alpha in {0,+-1}^n for a vector that passes
/// check_witness. Capped at 12 vertices.
std::optional<Witness> witness_search(const Instance& inst, const Matching& m);
/// All witnesses of m, in lexicographic order of alpha (-1 < 0 < 1).
std::vector<Witness> all_witnesses(const Instance& inst, const Matching& m);

}  // namespace fpm
