#pragma once

#include <cstdint>
#include <vector>

#include "fpm/engine.hpp"
#include "fpm/instance.hpp"

namespace fpm {

enum class Proposer { kAgents, kJobs };

/// The instance as a proposal system. Edge ids coincide with the instance's;
/// left/right ids are offsets into the proposing/disposing side.
ProposalSystem make_proposal_system(const Instance& inst, Proposer proposer);
Matching to_matching(const Instance& inst, const EngineOutcome& outcome);

Matching agent_optimal_stable(const Instance& inst);
Matching job_optimal_stable(const Instance& inst);

/// Vertices matched in every stable matching, ascending.
std::vector<VertexId> stable_vertices(const Instance& inst);

/// Edges whose endpoints both strictly prefer each other to their partners.
std::vector<EdgeId> blocking_edges(const Instance& inst, const Matching& m);
bool is_stable(const Instance& inst, const Matching& m);

/// True iff some stable matching contains e: the job's list is truncated
/// below the agent and the agent-proposing run must give it that agent.
bool is_stable_pair(const Instance& inst, EdgeId e);

/// Flags, per edge, whether some stable matching contains it, in O(m):
/// starting from the agent-optimal matching, exposed rotations are
/// eliminated one at a time until the job-optimal matching is reached. A
/// pair is stable iff it is in the agent-optimal matching or some rotation
/// moves an agent onto it.
std::vector<std::uint8_t> stable_pair_flags(const Instance& inst);

}  // namespace fpm
