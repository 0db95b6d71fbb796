#include "fpm/stability.hpp"

#include <stdexcept>

namespace fpm {

ProposalSystem make_proposal_system(const Instance& inst, Proposer proposer) {
  const int na = inst.num_agents();
  const bool agents = proposer == Proposer::kAgents;
  ProposalSystem sys;
  sys.num_left = agents ? na : inst.num_jobs();
  sys.num_right = agents ? inst.num_jobs() : na;
  sys.reserve_edges(static_cast<std::size_t>(inst.num_edges()));
  for (EdgeId e = 0; e < inst.num_edges(); ++e) {
    const Edge& ed = inst.edge(e);
    if (agents)
      sys.add_edge(ed.agent, ed.job - na, inst.rank_at(ed.job, e));
    else
      sys.add_edge(ed.job - na, ed.agent, inst.rank_at(ed.agent, e));
  }
  std::vector<std::int32_t> offsets(static_cast<std::size_t>(sys.num_left) + 1, 0);
  std::vector<EdgeId> flat;
  flat.reserve(static_cast<std::size_t>(inst.num_edges()));
  for (int l = 0; l < sys.num_left; ++l) {
    offsets[l] = static_cast<std::int32_t>(flat.size());
    auto inc = inst.incident(agents ? l : l + na);
    flat.insert(flat.end(), inc.begin(), inc.end());
  }
  offsets[sys.num_left] = static_cast<std::int32_t>(flat.size());
  sys.may_stay_single.assign(static_cast<std::size_t>(sys.num_left), 1);
  sys.set_left_lists(std::move(offsets), std::move(flat));
  return sys;
}

Matching to_matching(const Instance& inst, const EngineOutcome& outcome) {
  Matching m(inst.num_vertices());
  for (EdgeId e : outcome.left_edge) {
    if (e == kNoEdge) continue;
    m.pair(inst.edge(e).agent, inst.edge(e).job);
  }
  return m;
}

Matching agent_optimal_stable(const Instance& inst) {
  const auto sys = make_proposal_system(inst, Proposer::kAgents);
  return to_matching(inst, propose_dispose(sys));
}

Matching job_optimal_stable(const Instance& inst) {
  const auto sys = make_proposal_system(inst, Proposer::kJobs);
  return to_matching(inst, propose_dispose(sys));
}

std::vector<VertexId> stable_vertices(const Instance& inst) {
  const Matching s = agent_optimal_stable(inst);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < inst.num_vertices(); ++v)
    if (s.is_matched(v)) out.push_back(v);
  return out;
}

std::vector<EdgeId> blocking_edges(const Instance& inst, const Matching& m) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < inst.num_edges(); ++e) {
    const Edge& ed = inst.edge(e);
    if (inst.rank_at(ed.agent, e) < inst.rank(ed.agent, m.partner(ed.agent)) &&
        inst.rank_at(ed.job, e) < inst.rank(ed.job, m.partner(ed.job)))
      out.push_back(e);
  }
  return out;
}

bool is_stable(const Instance& inst, const Matching& m) { return blocking_edges(inst, m).empty(); }

bool is_stable_pair(const Instance& inst, EdgeId e) {
  const Edge& ed = inst.edge(e);
  auto sys = make_proposal_system(inst, Proposer::kAgents);
  const int cutoff = inst.rank_at(ed.job, e);
  // Drop the job's edges ranked below the agent.
  auto keep = [&](EdgeId x) { return inst.edge(x).job != ed.job || inst.rank_at(ed.job, x) <= cutoff; };
  ProposalSystem truncated;
  truncated.num_left = sys.num_left;
  truncated.num_right = sys.num_right;
  std::vector<EdgeId> renumber(static_cast<std::size_t>(sys.num_edges()), kNoEdge);
  for (EdgeId x = 0; x < sys.num_edges(); ++x)
    if (keep(x)) renumber[x] = truncated.add_edge(sys.edge_left[x], sys.edge_right[x], sys.right_rank[x]);
  std::vector<std::vector<EdgeId>> lists(static_cast<std::size_t>(sys.num_left));
  for (int l = 0; l < sys.num_left; ++l)
    for (EdgeId x : sys.ranked(l))
      if (renumber[x] != kNoEdge) lists[l].push_back(renumber[x]);
  truncated.may_stay_single.assign(static_cast<std::size_t>(sys.num_left), 1);
  truncated.set_left_lists(lists);

  const EngineOutcome out = propose_dispose(truncated);
  return out.left_edge[ed.agent] == renumber[e];
}

std::vector<std::uint8_t> stable_pair_flags(const Instance& inst) {
  Matching m = agent_optimal_stable(inst);
  const Matching target = job_optimal_stable(inst);
  std::vector<std::uint8_t> flags(static_cast<std::size_t>(inst.num_edges()), 0);
  for (const Edge& ed : m.pairs(inst)) flags[*inst.edge_between(ed.agent, ed.job)] = 1;

  // next[a] scans a's list past its partner for s(a): the first job that is
  // matched in every stable matching and prefers a to its current partner.
  // Jobs' partners only improve, so the scan never has to back up.
  const int na = inst.num_agents();
  std::vector<int> next(static_cast<std::size_t>(na), 0);
  for (VertexId a = 0; a < na; ++a)
    if (m.is_matched(a)) next[a] = inst.rank(a, m.partner(a)) + 1;
  auto s_edge = [&](VertexId a) {
    const auto list = inst.incident(a);
    for (; next[a] < static_cast<int>(list.size()); ++next[a]) {
      const EdgeId e = list[next[a]];
      const VertexId b = inst.edge(e).job;
      if (m.is_matched(b) && inst.rank_at(b, e) < inst.rank(b, m.partner(b))) return e;
    }
    throw std::logic_error("rotation walk: agent above its job-optimal partner has no next job");
  };

  // Walk next-pointers on a stack until a cycle closes; the cycle is an
  // exposed rotation. Entries below the cycle keep valid pointers because
  // their successors did not move.
  std::vector<VertexId> stack;
  std::vector<std::uint8_t> on_stack(static_cast<std::size_t>(na), 0);
  std::vector<std::pair<VertexId, EdgeId>> rotation;
  for (VertexId start = 0; start < na; ++start) {
    while (m.partner(start) != target.partner(start)) {
      if (stack.empty()) {
        stack.push_back(start);
        on_stack[start] = 1;
      }
      const VertexId a = stack.back();
      const VertexId b = m.partner(inst.edge(s_edge(a)).job);
      if (!on_stack[b]) {
        stack.push_back(b);
        on_stack[b] = 1;
        continue;
      }
      rotation.clear();
      VertexId x;
      do {
        x = stack.back();
        stack.pop_back();
        on_stack[x] = 0;
        rotation.push_back({x, s_edge(x)});
      } while (x != b);
      for (const auto& [agent, e] : rotation) {
        flags[e] = 1;
        m.pair(agent, inst.edge(e).job);
        next[agent] = inst.rank_at(agent, e) + 1;
      }
    }
  }
  return flags;
}

}  // namespace fpm
