#include "fpm/legal_edges.hpp"

#include <algorithm>
#include <numeric>

#include "fpm/oracle.hpp"
#include "fpm/stability.hpp"

namespace fpm {

EdgeFlags valid_edges(const Instance& inst, const Posts& posts) {
  EdgeFlags v;
  v.edge.assign(static_cast<std::size_t>(inst.num_edges()), 0);
  v.loop.assign(static_cast<std::size_t>(inst.num_vertices()), 0);
  for (VertexId a = 0; a < inst.num_agents(); ++a) {
    v.edge[*inst.edge_between(a, posts.f[a])] = 1;
    if (posts.s[a] == a)
      v.loop[a] = 1;
    else
      v.edge[*inst.edge_between(a, posts.s[a])] = 1;
  }
  for (VertexId b = inst.num_agents(); b < inst.num_vertices(); ++b)
    if (!posts.is_f_post[b]) v.loop[b] = 1;
  return v;
}

Instance dominance_instance(const Instance& inst) {
  const int na = inst.num_agents();
  const int nb = inst.num_jobs();
  // Ids in the auxiliary instance: a0 = a, a1 = na + a, job j = 2na + j,
  // d(a) = 2na + nb + a.
  auto job_id = [&](VertexId b) { return 2 * na + (b - na); };
  auto dummy_id = [&](VertexId a) { return 2 * na + nb + a; };

  std::vector<std::string> agents, jobs;
  for (VertexId a = 0; a < na; ++a) agents.push_back(inst.name(a) + "#0");
  for (VertexId a = 0; a < na; ++a) agents.push_back(inst.name(a) + "#1");
  for (VertexId b = na; b < inst.num_vertices(); ++b) jobs.push_back(inst.name(b));
  for (VertexId a = 0; a < na; ++a) jobs.push_back(inst.name(a) + "#d");

  std::vector<std::vector<VertexId>> prefs(static_cast<std::size_t>(2 * na + nb + na));
  for (VertexId a = 0; a < na; ++a) {
    auto& low = prefs[a];
    auto& high = prefs[na + a];
    high.push_back(dummy_id(a));
    for (VertexId b : inst.prefs(a)) {
      low.push_back(job_id(b));
      high.push_back(job_id(b));
    }
    low.push_back(dummy_id(a));
    prefs[dummy_id(a)] = {a, na + a};
  }
  for (VertexId b = na; b < inst.num_vertices(); ++b) {
    auto& list = prefs[job_id(b)];
    for (VertexId a : inst.prefs(b)) list.push_back(na + a);
    for (VertexId a : inst.prefs(b)) list.push_back(a);
  }
  return Instance(std::move(agents), std::move(jobs), std::move(prefs));
}

std::vector<std::uint8_t> dominant_edges(const Instance& inst) {
  const int na = inst.num_agents();
  const Instance aux = dominance_instance(inst);
  const auto stable = stable_pair_flags(aux);
  std::vector<std::uint8_t> out(static_cast<std::size_t>(inst.num_edges()), 0);
  for (EdgeId e = 0; e < inst.num_edges(); ++e) {
    const Edge& ed = inst.edge(e);
    const VertexId job = 2 * na + (ed.job - na);
    out[e] = stable[*aux.edge_between(ed.agent, job)] || stable[*aux.edge_between(na + ed.agent, job)];
  }
  return out;
}

EdgeFlags popular_edges(const Instance& inst, EdgeBackend backend) {
  EdgeFlags p;
  if (backend == EdgeBackend::kOracle) {
    OracleReport r = ground_truth(inst);
    p.edge = std::move(r.popular_edge);
    p.loop = std::move(r.popular_loop);
    return p;
  }
  p.edge = dominant_edges(inst);
  const auto stable = stable_pair_flags(inst);
  for (EdgeId e = 0; e < inst.num_edges(); ++e) p.edge[e] |= stable[e];
  p.loop.assign(static_cast<std::size_t>(inst.num_vertices()), 1);
  for (VertexId v : stable_vertices(inst)) p.loop[v] = 0;
  return p;
}

EdgeClassification legal_edge_set(const Instance& inst, EdgeBackend backend) {
  EdgeClassification c;
  c.valid = valid_edges(inst, compute_posts(inst));
  c.popular = popular_edges(inst, backend);
  c.legal.edge.resize(c.valid.edge.size());
  c.legal.loop.resize(c.valid.loop.size());
  for (std::size_t e = 0; e < c.valid.edge.size(); ++e) c.legal.edge[e] = c.valid.edge[e] && c.popular.edge[e];
  for (std::size_t v = 0; v < c.valid.loop.size(); ++v) c.legal.loop[v] = c.valid.loop[v] && c.popular.loop[v];

  const int n = inst.num_vertices();
  std::vector<VertexId> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (EdgeId e = 0; e < inst.num_edges(); ++e) {
    if (!c.popular.edge[e]) continue;
    const VertexId x = find(inst.edge(e).agent);
    const VertexId y = find(inst.edge(e).job);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  // Components are numbered by their lowest vertex.
  c.component.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> id_of_root(static_cast<std::size_t>(n), -1);
  for (VertexId v = 0; v < n; ++v) {
    const VertexId r = find(v);
    if (id_of_root[r] < 0) {
      id_of_root[r] = static_cast<int>(c.members.size());
      c.members.emplace_back();
    }
    c.component[v] = id_of_root[r];
    c.members[id_of_root[r]].push_back(v);
  }
  return c;
}

}  // namespace fpm
