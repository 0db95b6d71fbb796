// Runtime versions of the structural facts behind the solver's correctness.
// Each failed property contributes one message naming it and the first
// offending vertex or edge.

#include <string>

#include "fpm/solver.hpp"
#include "fpm/stability.hpp"

namespace fpm {

namespace {

// Vertices in `set` form a stable configuration under m: no edge between two
// of them is blocking.
std::optional<EdgeId> blocking_within(const Instance& inst, const Matching& m, const std::vector<std::uint8_t>& set) {
  for (EdgeId e = 0; e < inst.num_edges(); ++e) {
    const Edge& ed = inst.edge(e);
    if (!set[ed.agent] || !set[ed.job]) continue;
    if (inst.rank_at(ed.agent, e) < inst.rank(ed.agent, m.partner(ed.agent)) &&
        inst.rank_at(ed.job, e) < inst.rank(ed.job, m.partner(ed.job)))
      return e;
  }
  return std::nullopt;
}

std::string edge_name(const Instance& inst, EdgeId e) {
  return "(" + inst.name(inst.edge(e).agent) + "," + inst.name(inst.edge(e).job) + ")";
}

}  // namespace

std::vector<std::string> check_solver_invariants(const Instance& inst, const SolveReport& report) {
  std::vector<std::string> fail;
  if (!report.found() || !report.state) return fail;
  const SolverState& st = *report.state;
  const MirrorGraph& h = *st.mirror;
  const MirrorPartition& p = st.partition;
  const Matching& m = st.upper;
  const Matching& l = st.lower;
  const int n = inst.num_vertices();
  auto complain = [&](const std::string& what) { fail.push_back(what); };

  // Stable matchings of G embed as stable matchings of H.
  for (const Matching& s : {agent_optimal_stable(inst), job_optimal_stable(inst)}) {
    const auto blocking = blocking_edges_h(h, embed_stable(h, s));
    if (!blocking.empty()) complain("stable embedding is blocked by mirror edge " + std::to_string(blocking.front()));
  }

  // The final S_i is a legal stable matching of H.
  if (!blocking_edges_h(h, st.stable).empty()) complain("final mirror matching has a blocking edge");
  if (!forbidden_in(h, st.stable).empty()) complain("final mirror matching uses a forbidden edge");

  // M with its witness realizes as a legal stable matching of H, symmetric,
  // with tag sums equal to twice alpha.
  const Found& found = report.result();
  try {
    const MirrorMatching real = realize_witnessed(h, m, found.witness);
    if (!blocking_edges_h(h, real).empty()) complain("witnessed realization of M has a blocking edge");
    if (!forbidden_in(h, real).empty()) complain("witnessed realization of M uses a forbidden edge");
    const auto right = right_edges(h, real);
    for (VertexId u = 0; u < n; ++u)
      if (tag_sum(h, real, right, u) != 2 * found.witness.alpha[u]) {
        complain("tag sum differs from 2*alpha at " + inst.name(u));
        break;
      }
    if (!(project(h, real, Half::kUpper) == m) || !(project(h, real, Half::kLower) == m))
      complain("witnessed realization of M is not symmetric");
  } catch (const std::exception& e) {
    complain(std::string("witnessed realization failed: ") + e.what());
  }

  // Partition bookkeeping: twins agree between the halves.
  for (VertexId u = 0; u < n; ++u)
    if ((p.upper[u] == 0) != (p.lower[u] == 0)) complain("twin status differs between halves at " + inst.name(u));

  std::vector<std::uint8_t> z_or_u(static_cast<std::size_t>(n));
  for (VertexId u = 0; u < n; ++u) z_or_u[u] = st.in_z[u] || p.twin(u);
  if (auto e = blocking_within(inst, m, z_or_u)) complain("M blocked inside Z and U by " + edge_name(inst, *e));
  if (auto e = blocking_within(inst, l, z_or_u)) complain("L blocked inside Z and U by " + edge_name(inst, *e));

  for (VertexId u = 0; u < n; ++u)
    if (st.in_z[u] && m.partner(u) != l.partner(u)) {
      complain("M and L differ on Z at " + inst.name(u));
      break;
    }

  for (VertexId a = 0; a < inst.num_agents(); ++a) {
    const bool minus_outside_z = p.upper[a] < 0 && !st.in_z[a];
    const bool plus_both = p.upper[a] > 0 && p.lower[a] > 0;
    if ((minus_outside_z || plus_both) && inst.rank(a, m.partner(a)) > inst.rank(a, l.partner(a))) {
      complain(std::string("agent ") + inst.name(a) + (minus_outside_z ? " in A- outside Z" : " in A+ and A'+") +
               " prefers L to M");
      break;
    }
  }

  // Half-certificates: gamma for M on G without U_B, beta for L on G
  // without U_A.
  Witness gamma, beta;
  gamma.alpha.assign(static_cast<std::size_t>(n), 0);
  beta.alpha.assign(static_cast<std::size_t>(n), 0);
  std::vector<std::uint8_t> not_ub(static_cast<std::size_t>(n), 1), not_ua(static_cast<std::size_t>(n), 1);
  for (VertexId u = 0; u < n; ++u) {
    gamma.alpha[u] = p.upper[u];
    beta.alpha[u] = p.lower[u];
    if (p.twin(u)) (inst.is_agent(u) ? not_ua : not_ub)[u] = 0;
  }
  if (!check_witness(inst, m, gamma, not_ub)) complain("gamma does not certify M outside U_B");
  if (!check_witness(inst, l, beta, not_ua)) complain("beta does not certify L outside U_A");
  if (!check_witness(inst, m, found.witness)) complain("alpha does not certify M");

  const std::int64_t list_length = 4LL * inst.num_edges() + n;
  if (report.list_length != list_length) complain("mirror graph does not have 4m+n edges");
  if (st.proposals > list_length)
    complain("proposals " + std::to_string(st.proposals) + " exceed total list length " + std::to_string(list_length));
  if (st.iterations > n) complain("more iterations than vertices");
  return fail;
}

}  // namespace fpm
