#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fpm {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

/// Raised for malformed instances or matchings. `line()` is 0 when the
/// problem is not tied to a particular input line.
class InstanceError : public std::runtime_error {
 public:
  explicit InstanceError(const std::string& what, int line = 0)
      : std::runtime_error(what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

struct Edge {
  VertexId agent;
  VertexId job;
};

/// Bipartite preference instance. Agents occupy ids [0, num_agents()), jobs
/// occupy [num_agents(), num_vertices()). Every vertex ranks its genuine
/// neighbors strictly; the self-loop is implicitly ranked last.
class Instance {
 public:
  Instance() = default;

  /// `prefs[v]` lists v's neighbors by id, best first. Throws InstanceError
  /// when adjacency is not mutual, a list repeats or crosses sides, names
  /// collide, or an agent has no neighbor.
  Instance(std::vector<std::string> agent_names,
           std::vector<std::string> job_names,
           std::vector<std::vector<VertexId>> prefs);

  int num_agents() const noexcept { return num_agents_; }
  int num_jobs() const noexcept { return static_cast<int>(names_.size()) - num_agents_; }
  int num_vertices() const noexcept { return static_cast<int>(names_.size()); }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

  bool is_agent(VertexId v) const noexcept { return v < num_agents_; }
  bool is_job(VertexId v) const noexcept { return v >= num_agents_; }

  const std::string& name(VertexId v) const { return names_.at(static_cast<std::size_t>(v)); }
  std::optional<VertexId> find(std::string_view name) const;

  std::span<const VertexId> prefs(VertexId v) const;
  /// Edge ids incident to v, in v's preference order.
  std::span<const EdgeId> incident(VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(prefs(v).size()); }

  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;

  /// Position of e in the list of its endpoint v (0 = top choice).
  int rank_at(VertexId v, EdgeId e) const;
  /// Position of w in v's list; w == v gives degree(v), the self-loop.
  /// Throws InstanceError if w is neither v nor a neighbor.
  int rank(VertexId v, VertexId w) const;
  bool adjacent_or_self(VertexId v, VertexId w) const;

 private:
  int num_agents_ = 0;
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> by_name_;
  // v's list is prefs_[list_offset_[v] .. list_offset_[v+1]); incident_
  // holds the matching edge ids at the same positions.
  std::vector<std::int32_t> list_offset_;
  std::vector<VertexId> prefs_;
  std::vector<EdgeId> incident_;
  std::vector<Edge> edges_;
  std::vector<int> agent_rank_;  // per edge
  std::vector<int> job_rank_;    // per edge
  // Agent a's edges are [agent_first_edge_[a], agent_first_edge_[a+1]); the
  // same range of by_job_ holds them as (job, edge) sorted by job.
  std::vector<EdgeId> agent_first_edge_;
  std::vector<std::pair<VertexId, EdgeId>> by_job_;
};

/// Perfect matching over the augmented vertex set: unmatched vertices are
/// their own partner.
class Matching {
 public:
  Matching() = default;
  explicit Matching(int num_vertices);
  static Matching from_pairs(const Instance& inst, std::span<const Edge> pairs);

  int num_vertices() const noexcept { return static_cast<int>(partner_.size()); }
  VertexId partner(VertexId v) const { return partner_.at(static_cast<std::size_t>(v)); }
  bool is_matched(VertexId v) const { return partner(v) != v; }

  /// Pairs v with w after unmatching both of their current partners.
  void pair(VertexId v, VertexId w);
  void unmatch(VertexId v);

  /// Number of genuine (non self-loop) pairs.
  int size() const;
  /// Genuine pairs as (agent, job), ordered by agent id.
  std::vector<Edge> pairs(const Instance& inst) const;

  /// Throws InstanceError if the matching is not an involution over inst's
  /// vertices or pairs non-adjacent vertices.
  void validate(const Instance& inst) const;

  std::span<const VertexId> partners() const noexcept { return partner_; }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<VertexId> partner_;
};

/// Top choice f(a) and best non-top-choice neighbor s(a) per agent; s(a) == a
/// when every neighbor of a is someone's top choice.
struct Posts {
  std::vector<VertexId> f;  // indexed by agent id
  std::vector<VertexId> s;  // indexed by agent id
  std::vector<std::uint8_t> is_f_post;  // indexed by vertex id; jobs only
};

Posts compute_posts(const Instance& inst);

/// +1 if u prefers v to w, -1 if u prefers w to v, 0 if v == w. Being
/// self-matched is u's worst outcome.
int vote(const Instance& inst, VertexId u, VertexId v, VertexId w);

struct Election {
  int phi_mn = 0;    // votes for M
  int phi_nm = 0;    // votes for N
  int phi_a_mn = 0;  // agent votes for M
  int phi_a_nm = 0;  // agent votes for N

  friend bool operator==(const Election&, const Election&) = default;
};

Election run_election(const Instance& inst, const Matching& m, const Matching& n);

}  // namespace fpm
