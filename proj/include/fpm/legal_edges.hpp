#pragma once

#include <cstdint>
#include <vector>

#include "fpm/instance.hpp"

namespace fpm {

enum class EdgeBackend { kFast, kOracle };

/// Per-edge and per-self-loop flags. Self-loops are indexed by vertex id.
struct EdgeFlags {
  std::vector<std::uint8_t> edge;  // per edge id
  std::vector<std::uint8_t> loop;  // per vertex id
  friend bool operator==(const EdgeFlags&, const EdgeFlags&) = default;
};

struct EdgeClassification {
  EdgeFlags valid;
  EdgeFlags popular;
  EdgeFlags legal;
  /// Connected components of the popular subgraph, genuine edges only.
  std::vector<int> component;                 // per vertex
  std::vector<std::vector<VertexId>> members;  // per component, ascending
};

/// (a, f(a)) and (a, s(a)) for every agent, where s(a) == a stands for a's
/// self-loop, plus the self-loops of jobs that are nobody's top choice.
EdgeFlags valid_edges(const Instance& inst, const Posts& posts);

/// Edges that belong to some popular matching, and self-loops of vertices
/// left single by some popular matching. The fast backend tests each edge
/// for membership in a stable or a dominant matching; the oracle backend
/// enumerates popular matchings.
EdgeFlags popular_edges(const Instance& inst, EdgeBackend backend = EdgeBackend::kFast);

/// Edges lying in some dominant matching. Dominant matchings of G are the
/// stable matchings of an auxiliary instance in which agent a splits into
/// a low copy a0 and a high copy a1 joined by a private job d(a): a0 ranks
/// d(a) last, a1 ranks it first, and d(a) prefers a0. Jobs rank every high
/// copy above every low copy, keeping their order within each level.
std::vector<std::uint8_t> dominant_edges(const Instance& inst);

/// The auxiliary instance above. Agent a0 has id a, a1 has id na + a; job b
/// keeps its index among jobs and d(a) follows the original jobs.
Instance dominance_instance(const Instance& inst);

EdgeClassification legal_edge_set(const Instance& inst, EdgeBackend backend = EdgeBackend::kFast);

}  // namespace fpm
