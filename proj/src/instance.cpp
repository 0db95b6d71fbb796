#include "fpm/instance.hpp"

#include <algorithm>

namespace fpm {

Instance::Instance(std::vector<std::string> agent_names, std::vector<std::string> job_names,
                   std::vector<std::vector<VertexId>> prefs)
    : num_agents_(static_cast<int>(agent_names.size())) {
  names_ = std::move(agent_names);
  names_.insert(names_.end(), std::make_move_iterator(job_names.begin()),
                std::make_move_iterator(job_names.end()));
  const int n = num_vertices();
  if (static_cast<int>(prefs.size()) != n)
    throw InstanceError("preference table has " + std::to_string(prefs.size()) +
                        " rows for " + std::to_string(n) + " vertices");

  for (VertexId v = 0; v < n; ++v) {
    if (names_[v].empty()) throw InstanceError("empty vertex name");
    if (!by_name_.emplace(names_[v], v).second)
      throw InstanceError("duplicate name '" + names_[v] + "'");
  }

  list_offset_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId v = 0; v < n; ++v)
    list_offset_[v + 1] = list_offset_[v] + static_cast<std::int32_t>(prefs[v].size());
  prefs_.reserve(static_cast<std::size_t>(list_offset_[n]));
  for (const auto& row : prefs) prefs_.insert(prefs_.end(), row.begin(), row.end());
  incident_.assign(prefs_.size(), kNoEdge);
  auto row = [&](VertexId v) {
    return std::span<const VertexId>(prefs_).subspan(list_offset_[v], list_offset_[v + 1] - list_offset_[v]);
  };
  // stamp[w] == v + 1 while scanning v's list means w was already listed.
  std::vector<VertexId> stamp(static_cast<std::size_t>(n), 0);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : row(v)) {
      if (w < 0 || w >= n) throw InstanceError("neighbor id out of range for '" + names_[v] + "'");
      if (is_agent(v) == is_agent(w))
        throw InstanceError("'" + names_[v] + "' lists same-side vertex '" + names_[w] + "'");
      if (stamp[w] == v + 1) throw InstanceError("duplicate entry in the list of '" + names_[v] + "'");
      stamp[w] = v + 1;
    }
  }
  for (VertexId a = 0; a < num_agents_; ++a)
    if (row(a).empty()) throw InstanceError("agent '" + names_[a] + "' has no neighbor");

  agent_first_edge_.assign(static_cast<std::size_t>(num_agents_) + 1, 0);
  std::vector<int> job_degree(static_cast<std::size_t>(n), 0);
  for (VertexId a = 0; a < num_agents_; ++a) {
    agent_first_edge_[a] = static_cast<EdgeId>(edges_.size());
    for (std::size_t i = 0; i < row(a).size(); ++i) {
      const VertexId b = row(a)[i];
      const auto e = static_cast<EdgeId>(edges_.size());
      edges_.push_back({a, b});
      agent_rank_.push_back(static_cast<int>(i));
      by_job_.push_back({b, e});
      incident_[list_offset_[a] + i] = e;
      ++job_degree[b];
    }
    std::sort(by_job_.begin() + agent_first_edge_[a], by_job_.end());
  }
  agent_first_edge_[num_agents_] = static_cast<EdgeId>(edges_.size());
  job_rank_.assign(edges_.size(), -1);

  // Edges grouped by job, so each job's list resolves to edge ids through a
  // per-agent slot instead of a search.
  std::vector<EdgeId> job_offset(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId b = num_agents_; b < n; ++b) job_offset[b + 1] = job_offset[b] + job_degree[b];
  std::vector<EdgeId> by_job_group(edges_.size());
  {
    std::vector<EdgeId> fill(job_offset.begin(), job_offset.end() - 1);
    for (EdgeId e = 0; e < num_edges(); ++e) by_job_group[fill[edges_[e].job]++] = e;
  }
  std::vector<EdgeId> slot(static_cast<std::size_t>(num_agents_), kNoEdge);
  for (VertexId b = num_agents_; b < n; ++b) {
    for (EdgeId i = job_offset[b]; i < job_offset[b + 1]; ++i) slot[edges_[by_job_group[i]].agent] = by_job_group[i];
    for (std::size_t i = 0; i < row(b).size(); ++i) {
      const VertexId a = row(b)[i];
      const EdgeId e = slot[a];
      if (e == kNoEdge) throw InstanceError("'" + names_[b] + "' lists '" + names_[a] + "' but not vice versa");
      job_rank_[e] = static_cast<int>(i);
      incident_[list_offset_[b] + i] = e;
    }
    for (EdgeId i = job_offset[b]; i < job_offset[b + 1]; ++i) slot[edges_[by_job_group[i]].agent] = kNoEdge;
  }
  for (EdgeId e = 0; e < num_edges(); ++e) {
    if (job_rank_[e] < 0)
      throw InstanceError("'" + names_[edges_[e].agent] + "' lists '" + names_[edges_[e].job] +
                          "' but not vice versa");
  }
}

std::optional<VertexId> Instance::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::span<const VertexId> Instance::prefs(VertexId v) const {
  if (v < 0 || v >= num_vertices()) throw std::out_of_range("vertex id out of range");
  return std::span<const VertexId>(prefs_).subspan(list_offset_[v], list_offset_[v + 1] - list_offset_[v]);
}

std::span<const EdgeId> Instance::incident(VertexId v) const {
  if (v < 0 || v >= num_vertices()) throw std::out_of_range("vertex id out of range");
  return std::span<const EdgeId>(incident_).subspan(list_offset_[v], list_offset_[v + 1] - list_offset_[v]);
}

std::optional<EdgeId> Instance::edge_between(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  if (u < 0 || u >= num_agents_ || v < num_agents_ || v >= num_vertices()) return std::nullopt;
  const auto first = by_job_.begin() + agent_first_edge_[u];
  const auto last = by_job_.begin() + agent_first_edge_[u + 1];
  const auto it = std::lower_bound(first, last, std::pair<VertexId, EdgeId>{v, kNoEdge});
  if (it == last || it->first != v) return std::nullopt;
  return it->second;
}

int Instance::rank_at(VertexId v, EdgeId e) const {
  const Edge& ed = edge(e);
  if (ed.agent == v) return agent_rank_[e];
  if (ed.job == v) return job_rank_[e];
  throw InstanceError("edge is not incident to '" + name(v) + "'");
}

int Instance::rank(VertexId v, VertexId w) const {
  if (v == w) return degree(v);
  auto e = edge_between(v, w);
  if (!e) throw InstanceError("'" + name(w) + "' is not a neighbor of '" + name(v) + "'");
  return rank_at(v, *e);
}

bool Instance::adjacent_or_self(VertexId v, VertexId w) const {
  return v == w || edge_between(v, w).has_value();
}

Matching::Matching(int num_vertices) : partner_(static_cast<std::size_t>(num_vertices)) {
  for (VertexId v = 0; v < num_vertices; ++v) partner_[v] = v;
}

Matching Matching::from_pairs(const Instance& inst, std::span<const Edge> pairs) {
  Matching m(inst.num_vertices());
  for (const Edge& p : pairs) {
    if (!inst.edge_between(p.agent, p.job))
      throw InstanceError("'" + inst.name(p.agent) + "' and '" + inst.name(p.job) +
                          "' are not adjacent");
    if (m.is_matched(p.agent) || m.is_matched(p.job))
      throw InstanceError("vertex matched twice in pair ('" + inst.name(p.agent) + "', '" +
                          inst.name(p.job) + "')");
    m.pair(p.agent, p.job);
  }
  return m;
}

void Matching::pair(VertexId v, VertexId w) {
  unmatch(v);
  unmatch(w);
  partner_[v] = w;
  partner_[w] = v;
}

void Matching::unmatch(VertexId v) {
  const VertexId w = partner_[v];
  partner_[w] = w;
  partner_[v] = v;
}

int Matching::size() const {
  int count = 0;
  for (VertexId v = 0; v < num_vertices(); ++v)
    if (partner_[v] > v) ++count;
  return count;
}

std::vector<Edge> Matching::pairs(const Instance& inst) const {
  std::vector<Edge> out;
  for (VertexId a = 0; a < inst.num_agents(); ++a)
    if (partner_[a] != a) out.push_back({a, partner_[a]});
  return out;
}

void Matching::validate(const Instance& inst) const {
  if (num_vertices() != inst.num_vertices())
    throw InstanceError("matching covers " + std::to_string(num_vertices()) +
                        " vertices, instance has " + std::to_string(inst.num_vertices()));
  for (VertexId v = 0; v < num_vertices(); ++v) {
    const VertexId w = partner_[v];
    if (w < 0 || w >= num_vertices() || partner_[w] != v)
      throw InstanceError("matching is not an involution at '" + inst.name(v) + "'");
    if (w != v && !inst.edge_between(v, w))
      throw InstanceError("'" + inst.name(v) + "' matched to non-neighbor '" + inst.name(w) + "'");
  }
}

Posts compute_posts(const Instance& inst) {
  Posts posts;
  const int na = inst.num_agents();
  posts.f.resize(na);
  posts.s.resize(na);
  posts.is_f_post.assign(inst.num_vertices(), 0);
  for (VertexId a = 0; a < na; ++a) {
    posts.f[a] = inst.prefs(a).front();
    posts.is_f_post[posts.f[a]] = 1;
  }
  for (VertexId a = 0; a < na; ++a) {
    posts.s[a] = a;
    for (VertexId b : inst.prefs(a)) {
      if (!posts.is_f_post[b]) {
        posts.s[a] = b;
        break;
      }
    }
  }
  return posts;
}

int vote(const Instance& inst, VertexId u, VertexId v, VertexId w) {
  const int rv = inst.rank(u, v);
  const int rw = inst.rank(u, w);
  return rv < rw ? 1 : (rv > rw ? -1 : 0);
}

Election run_election(const Instance& inst, const Matching& m, const Matching& n) {
  Election el;
  for (VertexId u = 0; u < inst.num_vertices(); ++u) {
    const int v = vote(inst, u, m.partner(u), n.partner(u));
    if (v > 0) {
      ++el.phi_mn;
      if (inst.is_agent(u)) ++el.phi_a_mn;
    } else if (v < 0) {
      ++el.phi_nm;
      if (inst.is_agent(u)) ++el.phi_a_nm;
    }
  }
  return el;
}

}  // namespace fpm
