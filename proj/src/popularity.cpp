#include "fpm/popularity.hpp"

#include <stdexcept>

#include "fpm/assignment.hpp"

namespace fpm {

int edge_weight(const Instance& inst, const Matching& m, VertexId u, VertexId v) {
  if (u == v) return m.partner(u) == u ? 0 : -1;
  if (!inst.edge_between(u, v))
    throw InstanceError("'" + inst.name(u) + "' and '" + inst.name(v) + "' are not adjacent");
  return vote(inst, u, v, m.partner(u)) + vote(inst, v, u, m.partner(v));
}

int edge_weight(const Instance& inst, const Matching& m, EdgeId e) {
  const Edge& ed = inst.edge(e);
  const int ra = inst.rank_at(ed.agent, e);
  const int rb = inst.rank_at(ed.job, e);
  const int pa = inst.rank(ed.agent, m.partner(ed.agent));
  const int pb = inst.rank(ed.job, m.partner(ed.job));
  return (ra < pa ? 1 : ra > pa ? -1 : 0) + (rb < pb ? 1 : rb > pb ? -1 : 0);
}

std::int64_t wt_total(const Instance& inst, const Matching& m, const Matching& n) {
  std::int64_t total = 0;
  for (VertexId v = 0; v < inst.num_vertices(); ++v) {
    const VertexId w = n.partner(v);
    if (w == v)
      total += edge_weight(inst, m, v, v);
    else if (v < w)
      total += edge_weight(inst, m, v, w);
  }
  return total;
}

std::optional<Witness> solve_witness_system(const Instance& inst, const Matching& m) {
  // Variables: y_a for agents, z_b = -y_b for jobs, plus an origin pinned to
  // 0. Each constraint x_v <= x_u + c is an arc u -> v of length c.
  const int n = inst.num_vertices();
  const int origin = n;
  struct Arc {
    int from, to, length;
  };
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(inst.num_edges() + 3 * n));
  for (EdgeId e = 0; e < inst.num_edges(); ++e) {
    const Edge& ed = inst.edge(e);
    arcs.push_back({ed.agent, ed.job, -edge_weight(inst, m, e)});  // y_a - z_b >= wt
    if (m.partner(ed.agent) == ed.job) arcs.push_back({ed.job, ed.agent, 0});
  }
  for (VertexId v = 0; v < n; ++v) {
    const int loop = edge_weight(inst, m, v, v);
    const bool self = m.partner(v) == v;
    if (inst.is_agent(v)) {
      arcs.push_back({v, origin, -loop});  // y_a >= wt(a,a)
      if (self) arcs.push_back({origin, v, 0});
    } else {
      arcs.push_back({origin, v, -loop});  // z_b <= -wt(b,b)
      if (self) arcs.push_back({v, origin, 0});
    }
  }

  std::vector<long> dist(static_cast<std::size_t>(n) + 1, 0);
  bool changed = true;
  for (int round = 0; round <= n + 1 && changed; ++round) {
    changed = false;
    for (const Arc& arc : arcs) {
      if (dist[arc.from] + arc.length < dist[arc.to]) {
        dist[arc.to] = dist[arc.from] + arc.length;
        changed = true;
      }
    }
  }
  if (changed) return std::nullopt;  // negative cycle

  Witness w;
  w.alpha.resize(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    const long x = dist[v] - dist[origin];
    w.alpha[v] = static_cast<int>(inst.is_agent(v) ? x : -x);
    if (w.alpha[v] < -1 || w.alpha[v] > 1)
      throw std::logic_error("dual solution outside {0,+-1} at '" + inst.name(v) + "'");
  }
  return w;
}

PopularityVerdict verify_popular(const Instance& inst, const Matching& m) {
  const int na = inst.num_agents();
  const int nb = inst.num_jobs();
  // Rows: agents then job copies; columns: jobs then agent copies. A row
  // matched to its own copy column is a self-loop; copy-to-copy is padding.
  AssignmentProblem ap(na + nb);
  for (EdgeId e = 0; e < inst.num_edges(); ++e) {
    const Edge& ed = inst.edge(e);
    ap.set_weight(ed.agent, ed.job - na, edge_weight(inst, m, e));
  }
  for (VertexId a = 0; a < na; ++a) ap.set_weight(a, nb + a, edge_weight(inst, m, a, a));
  for (int j = 0; j < nb; ++j) {
    const VertexId b = na + j;
    ap.set_weight(na + j, j, edge_weight(inst, m, b, b));
    for (int a = 0; a < na; ++a) ap.set_weight(na + j, nb + a, 0);
  }
  const auto sol = ap.solve_max();
  if (!sol) throw std::logic_error("augmented graph has no perfect matching");

  PopularityVerdict verdict;
  verdict.max_weight = sol->weight;
  verdict.popular = sol->weight <= 0;
  auto witness = solve_witness_system(inst, m);
  if (witness.has_value() != verdict.popular)
    throw std::logic_error("primal and dual popularity tests disagree");
  if (verdict.popular) {
    verdict.witness = std::move(witness);
  } else {
    Matching n(inst.num_vertices());
    for (VertexId a = 0; a < na; ++a) {
      const int col = sol->col_of_row[a];
      if (col < nb) n.pair(a, na + col);
    }
    verdict.counterexample = std::move(n);
  }
  return verdict;
}

bool check_witness(const Instance& inst, const Matching& m, const Witness& w,
                   std::span<const std::uint8_t> active) {
  const int n = inst.num_vertices();
  if (static_cast<int>(w.alpha.size()) != n || static_cast<int>(active.size()) != n) return false;
  long sum = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (!active[v]) continue;
    const int x = w.alpha[v];
    if (x < -1 || x > 1) return false;
    sum += x;
    if (x < edge_weight(inst, m, v, v)) return false;
  }
  if (sum != 0) return false;
  for (EdgeId e = 0; e < inst.num_edges(); ++e) {
    const Edge& ed = inst.edge(e);
    if (!active[ed.agent] || !active[ed.job]) continue;
    if (w.alpha[ed.agent] + w.alpha[ed.job] < edge_weight(inst, m, e)) return false;
  }
  return true;
}

bool check_witness(const Instance& inst, const Matching& m, const Witness& w) {
  const std::vector<std::uint8_t> all(static_cast<std::size_t>(inst.num_vertices()), 1);
  return check_witness(inst, m, w, all);
}

bool check_a_popular(const Instance& inst, const Posts& posts, const Matching& m) {
  for (VertexId a = 0; a < inst.num_agents(); ++a) {
    const VertexId p = m.partner(a);
    if (p != posts.f[a] && p != posts.s[a]) return false;
  }
  for (VertexId b = inst.num_agents(); b < inst.num_vertices(); ++b) {
    if (!posts.is_f_post[b]) continue;
    const VertexId a = m.partner(b);
    if (a == b || posts.f[a] != b) return false;
  }
  return true;
}

}  // namespace fpm
