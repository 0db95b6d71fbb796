#include "fpm/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "fpm/stability.hpp"

namespace fpm {

namespace {

constexpr int kDefaultCap = 16;
constexpr int kWitnessCap = 12;

void require_cap(const Instance& inst, int cap, const char* what) {
  if (inst.num_vertices() > cap)
    throw OracleCapExceeded(std::string(what) + ": " + std::to_string(inst.num_vertices()) +
                            " vertices exceed the cap of " + std::to_string(cap));
}

// Tallies votes of matching i against matching j over all vertices and over
// agents, and reports whether j beats i in either election.
struct Beaten {
  bool overall;
  bool agents;
};

Beaten beaten_by(const RankTable& t, int i, int j) {
  const std::int32_t* ri = t.row(i);
  const std::int32_t* rj = t.row(j);
  int for_i = 0, for_j = 0, a_for_i = 0, a_for_j = 0;
  for (int v = 0; v < t.num_agents; ++v) {
    a_for_i += ri[v] < rj[v];
    a_for_j += rj[v] < ri[v];
  }
  for_i = a_for_i;
  for_j = a_for_j;
  for (int v = t.num_agents; v < t.num_vertices; ++v) {
    for_i += ri[v] < rj[v];
    for_j += rj[v] < ri[v];
  }
  return {for_j > for_i, a_for_j > a_for_i};
}

void flags_for(const RankTable& t, int i, std::uint8_t& popular, std::uint8_t& a_popular) {
  popular = 1;
  a_popular = 1;
  for (int j = 0; j < t.num_matchings && (popular || a_popular); ++j) {
    const Beaten b = beaten_by(t, i, j);
    if (b.overall) popular = 0;
    if (b.agents) a_popular = 0;
  }
}

}  // namespace

int oracle_vertex_cap() {
  if (const char* env = std::getenv("FPM_ORACLE_MAX_VERTICES")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return kDefaultCap;
}

std::vector<Matching> enumerate_matchings(const Instance& inst) {
  return enumerate_matchings(inst, oracle_vertex_cap());
}

std::vector<Matching> enumerate_matchings(const Instance& inst, int vertex_cap) {
  require_cap(inst, vertex_cap, "enumerate_matchings");
  std::vector<Matching> out;
  Matching cur(inst.num_vertices());
  std::function<void(VertexId)> branch = [&](VertexId a) {
    if (a == inst.num_agents()) {
      out.push_back(cur);
      return;
    }
    branch(a + 1);
    for (VertexId b : inst.prefs(a)) {
      if (cur.is_matched(b)) continue;
      cur.pair(a, b);
      branch(a + 1);
      cur.unmatch(a);
    }
  };
  branch(0);
  return out;
}

RankTable make_rank_table(const Instance& inst, const std::vector<Matching>& matchings) {
  RankTable t;
  t.num_matchings = static_cast<int>(matchings.size());
  t.num_vertices = inst.num_vertices();
  t.num_agents = inst.num_agents();
  t.rank.resize(static_cast<std::size_t>(t.num_matchings) * static_cast<std::size_t>(t.num_vertices));
  for (int i = 0; i < t.num_matchings; ++i)
    for (VertexId v = 0; v < t.num_vertices; ++v)
      t.rank[static_cast<std::size_t>(i) * t.num_vertices + v] = inst.rank(v, matchings[i].partner(v));
  return t;
}

ElectionFlags election_flags_serial(const RankTable& table) {
  ElectionFlags f;
  f.popular.resize(static_cast<std::size_t>(table.num_matchings));
  f.a_popular.resize(static_cast<std::size_t>(table.num_matchings));
  for (int i = 0; i < table.num_matchings; ++i) flags_for(table, i, f.popular[i], f.a_popular[i]);
  return f;
}

ElectionFlags election_flags_parallel(const RankTable& table) {
  ElectionFlags f;
  f.popular.resize(static_cast<std::size_t>(table.num_matchings));
  f.a_popular.resize(static_cast<std::size_t>(table.num_matchings));
  // Early exits make rows uneven, hence the dynamic schedule.
#pragma omp parallel for schedule(dynamic, 16)
  for (int i = 0; i < table.num_matchings; ++i) flags_for(table, i, f.popular[i], f.a_popular[i]);
  return f;
}

OracleReport ground_truth(const Instance& inst, const OracleOptions& options) {
  const int cap = options.vertex_cap > 0 ? options.vertex_cap : oracle_vertex_cap();
  OracleReport r;
  r.matchings = enumerate_matchings(inst, cap);
  const RankTable table = make_rank_table(inst, r.matchings);
  ElectionFlags flags = options.parallel ? election_flags_parallel(table) : election_flags_serial(table);
  r.popular = std::move(flags.popular);
  r.a_popular = std::move(flags.a_popular);

  const std::size_t k = r.matchings.size();
  r.fully_popular.resize(k);
  r.popular_edge.assign(static_cast<std::size_t>(inst.num_edges()), 0);
  r.popular_loop.assign(static_cast<std::size_t>(inst.num_vertices()), 0);
  auto widen = [](std::optional<int>& lo, std::optional<int>& hi, int size) {
    lo = lo ? std::min(*lo, size) : size;
    hi = hi ? std::max(*hi, size) : size;
  };
  for (std::size_t i = 0; i < k; ++i) {
    const Matching& m = r.matchings[i];
    r.fully_popular[i] = r.popular[i] && r.a_popular[i];
    r.num_popular += r.popular[i];
    r.num_a_popular += r.a_popular[i];
    r.num_fully_popular += r.fully_popular[i];
    if (r.popular[i]) {
      widen(r.min_popular_size, r.max_popular_size, m.size());
      for (VertexId v = 0; v < inst.num_vertices(); ++v) {
        if (!m.is_matched(v))
          r.popular_loop[v] = 1;
        else if (inst.is_agent(v))
          r.popular_edge[*inst.edge_between(v, m.partner(v))] = 1;
      }
    }
    if (r.fully_popular[i]) widen(r.min_fully_popular_size, r.max_fully_popular_size, m.size());
  }

  std::vector<std::uint8_t> stable(static_cast<std::size_t>(inst.num_vertices()), 0);
  for (VertexId v : stable_vertices(inst)) stable[v] = 1;
  for (VertexId v = 0; v < inst.num_vertices(); ++v)
    if (r.popular_loop[v] == stable[v]) r.loop_rule_holds = false;

  if (options.witness_flags) {
    r.has_witness.resize(k);
    for (std::size_t i = 0; i < k; ++i) r.has_witness[i] = witness_search(inst, r.matchings[i]).has_value();
  }
  return r;
}

namespace {

// Backtracking over alpha with two prunings: every edge and self-loop whose
// endpoints are all assigned must be covered, and the remaining vertices must
// still be able to bring the sum back to zero.
void search_witnesses(const Instance& inst, const Matching& m, bool first_only, std::vector<Witness>& found) {
  require_cap(inst, kWitnessCap, "witness_search");
  const int n = inst.num_vertices();
  std::vector<int> loop(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) loop[v] = edge_weight(inst, m, v, v);
  // For vertex v, the edges to already-assigned lower-id neighbors.
  std::vector<std::vector<std::pair<VertexId, int>>> back(static_cast<std::size_t>(n));
  for (EdgeId e = 0; e < inst.num_edges(); ++e) {
    const Edge& ed = inst.edge(e);
    const VertexId hi = std::max(ed.agent, ed.job);
    const VertexId lo = std::min(ed.agent, ed.job);
    back[hi].push_back({lo, edge_weight(inst, m, e)});
  }

  std::vector<int> alpha(static_cast<std::size_t>(n), 0);
  bool done = false;
  std::function<void(VertexId, int)> go = [&](VertexId v, int sum) {
    if (done) return;
    if (v == n) {
      if (sum == 0) {
        found.push_back(Witness{alpha});
        if (first_only) done = true;
      }
      return;
    }
    const int remaining = n - v - 1;
    for (int x = -1; x <= 1; ++x) {
      if (x < loop[v]) continue;
      const int s = sum + x;
      if (s > remaining || s < -remaining) continue;
      bool ok = true;
      for (const auto& [u, w] : back[v])
        if (alpha[u] + x < w) {
          ok = false;
          break;
        }
      if (!ok) continue;
      alpha[v] = x;
      go(v + 1, s);
    }
    alpha[v] = 0;
  };
  go(0, 0);
}

}  // namespace

std::optional<Witness> witness_search(const Instance& inst, const Matching& m) {
  std::vector<Witness> found;
  search_witnesses(inst, m, true, found);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<Witness> all_witnesses(const Instance& inst, const Matching& m) {
  std::vector<Witness> found;
  search_witnesses(inst, m, false, found);
  return found;
}

}  // namespace fpm
