#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fpm/instance.hpp"

namespace fpm {

/// Dual certificate of popularity: alpha[v] in {-1, 0, +1} per vertex.
struct Witness {
  std::vector<int> alpha;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Sum of the two endpoint votes for each other against their partners in M:
/// +2 blocking, -2 both prefer their partners, 0 otherwise. For the self-loop
/// (u == v): 0 if u is self-matched in M, else -1. Throws InstanceError when
/// (u, v) is neither an edge nor a self-loop.
int edge_weight(const Instance& inst, const Matching& m, VertexId u, VertexId v);
int edge_weight(const Instance& inst, const Matching& m, EdgeId e);

/// wt_M(N): total weight of N's edges and self-loops. Equals
/// phi(N, M) - phi(M, N).
std::int64_t wt_total(const Instance& inst, const Matching& m, const Matching& n);

struct PopularityVerdict {
  bool popular = false;
  std::optional<Witness> witness;        // set when popular
  std::optional<Matching> counterexample;  // max-weight N when not popular
  std::int64_t max_weight = 0;           // max over N of wt_M(N)
};

/// Decides popularity through a max-weight perfect matching on the augmented
/// graph under wt_M. A popular M gets a witness; an unpopular one gets the
/// heaviest beating matching.
PopularityVerdict verify_popular(const Instance& inst, const Matching& m);

/// Solves the dual covering system with complementary slackness against M
/// imposed (y_a + y_b = 0 on matched edges, y_u = 0 on matched self-loops).
/// Feasible exactly when M is popular; any solution is a {0,+-1} witness.
std::optional<Witness> solve_witness_system(const Instance& inst, const Matching& m);

bool check_witness(const Instance& inst, const Matching& m, const Witness& w);
/// Same check on the subgraph induced by `active` (vertex mask): only active
/// vertices contribute to the sum and only edges between active vertices are
/// constrained. M must not pair an active vertex with an inactive one.
bool check_witness(const Instance& inst, const Matching& m, const Witness& w,
                   std::span<const std::uint8_t> active);

/// One-sided popularity for the agents: every agent sits on f(a) or s(a) and
/// every top-choice job is held by an agent that ranks it first.
bool check_a_popular(const Instance& inst, const Posts& posts, const Matching& m);

}  // namespace fpm
