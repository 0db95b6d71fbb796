#include "fpm/mirror.hpp"

#include <sstream>
#include <stdexcept>

#include "fpm/stability.hpp"

namespace fpm {

MirrorGraph::MirrorGraph(const Instance& inst, const EdgeClassification& classification) : inst_(inst) {
  const int n = inst.num_vertices();
  const int m = inst.num_edges();
  sys_.num_left = n;
  sys_.num_right = n;
  sys_.reserve_edges(4 * static_cast<std::size_t>(m) + static_cast<std::size_t>(n));

  // Right ranks: u_r takes its - neighbors (edges where u_r carries +) in
  // u's order, then its twin, then its + neighbors in u's order.
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = inst.edge(e);
    const int ra = inst.rank_at(ed.agent, e);
    const int rb = inst.rank_at(ed.job, e);
    const int da = inst.degree(ed.agent);
    const int db = inst.degree(ed.job);
    sys_.add_edge(ed.agent, ed.job, db + 1 + rb);  // (a_l+, b_r-)
    sys_.add_edge(ed.agent, ed.job, rb);           // (a_l-, b_r+)
    sys_.add_edge(ed.job, ed.agent, da + 1 + ra);  // (b_l+, a_r-)
    sys_.add_edge(ed.job, ed.agent, ra);           // (b_l-, a_r+)
  }
  for (VertexId u = 0; u < n; ++u) sys_.add_edge(u, u, inst.degree(u));

  // Left lists: u_l takes its - neighbors (edges where u_l carries +) in u's
  // order, then its + neighbors, then its twin last.
  std::vector<std::int32_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  std::vector<EdgeId> list;
  list.reserve(static_cast<std::size_t>(sys_.num_edges()));
  for (VertexId u = 0; u < n; ++u) {
    offsets[u] = static_cast<std::int32_t>(list.size());
    const bool agent = inst.is_agent(u);
    for (EdgeId e : inst.incident(u)) list.push_back(agent ? upper(e, 1) : lower(e, 1));
    for (EdgeId e : inst.incident(u)) list.push_back(agent ? upper(e, -1) : lower(e, -1));
    list.push_back(twin(u));
  }
  offsets[n] = static_cast<std::int32_t>(list.size());
  sys_.may_stay_single.assign(static_cast<std::size_t>(n), 0);
  sys_.set_left_lists(std::move(offsets), std::move(list));

  for (EdgeId e = 0; e < m; ++e)
    if (!classification.legal.edge[e])
      for (int k = 0; k < 4; ++k) sys_.forbidden[4 * e + k] = 1;
  for (VertexId u = 0; u < n; ++u)
    if (!classification.legal.loop[u]) sys_.forbidden[twin(u)] = 1;
}

std::string MirrorGraph::dump() const {
  std::ostringstream out;
  auto describe = [&](EdgeId h, bool from_left) {
    const VertexId other = from_left ? right(h) : left(h);
    const int sign = from_left ? right_sign(h) : left_sign(h);
    std::string s = inst_.name(other) + (from_left ? "_r" : "_l") + (sign > 0 ? "+" : "-");
    if (forbidden(h)) s += "!";
    return s;
  };
  out << "# H: " << 2 * num_vertices() << " vertices, " << num_edges() << " edges; '!' marks forbidden\n";
  for (VertexId u = 0; u < num_vertices(); ++u) {
    out << inst_.name(u) << "_l >";
    for (EdgeId h : sys_.ranked(u)) out << ' ' << describe(h, true);
    out << '\n';
  }
  // Right lists are implicit in right_rank; rebuild them for printing.
  std::vector<std::vector<EdgeId>> by_right(static_cast<std::size_t>(num_vertices()));
  for (EdgeId h = 0; h < num_edges(); ++h) by_right[right(h)].push_back(h);
  for (VertexId u = 0; u < num_vertices(); ++u) {
    auto& list = by_right[u];
    std::vector<EdgeId> ordered(list.size());
    for (EdgeId h : list) ordered[static_cast<std::size_t>(sys_.right_rank[h])] = h;
    out << inst_.name(u) << "_r >";
    for (EdgeId h : ordered) out << ' ' << describe(h, false);
    out << '\n';
  }
  return out.str();
}

std::vector<EdgeId> right_edges(const MirrorGraph& h, const MirrorMatching& mm) {
  std::vector<EdgeId> out(static_cast<std::size_t>(h.num_vertices()), kNoEdge);
  for (EdgeId e : mm.left_edge)
    if (e != kNoEdge) out[h.right(e)] = e;
  return out;
}

MirrorMatching embed_stable(const MirrorGraph& h, const Matching& s) {
  const Instance& inst = h.instance();
  if (!is_stable(inst, s)) throw std::invalid_argument("embed_stable: matching is not stable");
  MirrorMatching mm;
  mm.left_edge.assign(static_cast<std::size_t>(inst.num_vertices()), kNoEdge);
  for (VertexId u = 0; u < inst.num_vertices(); ++u) {
    if (!s.is_matched(u)) {
      mm.left_edge[u] = h.twin(u);
      continue;
    }
    const EdgeId e = *inst.edge_between(u, s.partner(u));
    mm.left_edge[u] = inst.is_agent(u) ? h.upper(e, -1) : h.lower(e, -1);
  }
  return mm;
}

MirrorMatching realize_witnessed(const MirrorGraph& h, const Matching& n, const Witness& w) {
  const Instance& inst = h.instance();
  MirrorMatching mm;
  mm.left_edge.assign(static_cast<std::size_t>(inst.num_vertices()), kNoEdge);
  for (VertexId u = 0; u < inst.num_vertices(); ++u)
    if (!n.is_matched(u)) mm.left_edge[u] = h.twin(u);
  for (const Edge& ed : n.pairs(inst)) {
    const EdgeId e = *inst.edge_between(ed.agent, ed.job);
    const int xa = w.alpha[ed.agent];
    const int xb = w.alpha[ed.job];
    if (xa + xb != 0)
      throw std::invalid_argument("realize_witnessed: alpha(" + inst.name(ed.agent) + ") + alpha(" +
                                  inst.name(ed.job) + ") != 0 on a matched edge");
    // The agent's left copy carries sign alpha_a (- when 0); the job's left
    // copy carries sign alpha_b (- when 0).
    mm.left_edge[ed.agent] = h.upper(e, xa > 0 ? 1 : -1);
    mm.left_edge[ed.job] = h.lower(e, xb > 0 ? 1 : -1);
  }
  return mm;
}

Matching project(const MirrorGraph& h, const MirrorMatching& mm, Half half) {
  const Instance& inst = h.instance();
  const auto want = half == Half::kUpper ? MirrorGraph::Kind::kUpper : MirrorGraph::Kind::kLower;
  Matching m(inst.num_vertices());
  for (EdgeId e : mm.left_edge) {
    if (e == kNoEdge || h.kind(e) != want) continue;
    const Edge& ed = inst.edge(h.g_edge(e));
    m.pair(ed.agent, ed.job);
  }
  return m;
}

MirrorPartition classify_partition(const MirrorGraph& h, const MirrorMatching& mm) {
  const Instance& inst = h.instance();
  const int n = inst.num_vertices();
  const auto right = right_edges(h, mm);
  MirrorPartition p;
  p.upper.assign(static_cast<std::size_t>(n), 0);
  p.lower.assign(static_cast<std::size_t>(n), 0);
  for (VertexId u = 0; u < n; ++u) {
    const EdgeId l = mm.left_edge[u];
    const EdgeId r = right[u];
    if (l == kNoEdge || r == kNoEdge) throw std::invalid_argument("classify_partition: matching is not perfect");
    if (h.is_twin(l)) continue;
    if (inst.is_agent(u)) {
      p.upper[u] = static_cast<std::int8_t>(h.left_sign(l));
      p.lower[u] = static_cast<std::int8_t>(h.right_sign(r));
    } else {
      p.upper[u] = static_cast<std::int8_t>(h.right_sign(r));
      p.lower[u] = static_cast<std::int8_t>(h.left_sign(l));
    }
  }
  return p;
}

std::vector<EdgeId> blocking_edges_h(const MirrorGraph& h, const MirrorMatching& mm) {
  const ProposalSystem& sys = h.system();
  const auto right = right_edges(h, mm);
  constexpr int kSingle = 1 << 30;
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < sys.num_edges(); ++e) {
    const EdgeId l = mm.left_edge[h.left(e)];
    const EdgeId r = right[h.right(e)];
    if (l == e) continue;
    const int lr = l == kNoEdge ? kSingle : sys.left_rank[l];
    const int rr = r == kNoEdge ? kSingle : sys.right_rank[r];
    if (sys.left_rank[e] < lr && sys.right_rank[e] < rr) out.push_back(e);
  }
  return out;
}

std::vector<EdgeId> forbidden_in(const MirrorGraph& h, const MirrorMatching& mm) {
  std::vector<EdgeId> out;
  for (EdgeId e : mm.left_edge)
    if (e != kNoEdge && h.forbidden(e)) out.push_back(e);
  return out;
}

int tag_sum(const MirrorGraph& h, const MirrorMatching& mm, const std::vector<EdgeId>& right_edge, VertexId u) {
  return h.left_sign(mm.left_edge[u]) + h.right_sign(right_edge[u]);
}

}  // namespace fpm
