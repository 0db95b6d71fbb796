#include "fpm/solver.hpp"

#include <deque>
#include <functional>
#include <queue>
#include <stdexcept>

namespace fpm {

namespace {

// Vertices whose left copy holds a -signed edge while the right copy holds a
// +signed one, i.e. A- with A'+ for agents and B+ with B'- for jobs. Once
// true, the condition stays true until the vertex falls to its twin (left
// copies only get worse, right copies only better, and the twin is the left
// copy's last resort), so stale entries can be dropped lazily.
class PendingVertices {
 public:
  PendingVertices(TriggerOrder order, const MirrorGraph& h, const ProposalEngine& engine,
                  const std::vector<std::uint8_t>& marked)
      : order_(order), h_(h), engine_(engine), marked_(marked) {}

  bool qualifies(VertexId u) const {
    const EdgeId l = engine_.matched(u);
    const EdgeId r = engine_.held(u);
    if (l == kNoEdge || r == kNoEdge || h_.is_twin(l) || h_.is_twin(r)) return false;
    return h_.left_sign(l) < 0 && h_.right_sign(r) > 0;
  }

  void observe(VertexId u) {
    if (marked_[u] || !qualifies(u)) return;
    switch (order_) {
      case TriggerOrder::kLowestId: low_.push(u); break;
      case TriggerOrder::kHighestId: high_.push(u); break;
      case TriggerOrder::kFifo: fifo_.push_back(u); break;
    }
  }

  /// Feeds every copy touched by an acceptance since the last call.
  void absorb(ProposalEngine& engine) {
    for (EdgeId e : engine.accept_log()) {
      observe(h_.left(e));
      observe(h_.right(e));
    }
    engine.clear_accept_log();
  }

  std::optional<VertexId> next() {
    while (true) {
      VertexId u;
      switch (order_) {
        case TriggerOrder::kLowestId:
          if (low_.empty()) return std::nullopt;
          u = low_.top();
          low_.pop();
          break;
        case TriggerOrder::kHighestId:
          if (high_.empty()) return std::nullopt;
          u = high_.top();
          high_.pop();
          break;
        default:
          if (fifo_.empty()) return std::nullopt;
          u = fifo_.front();
          fifo_.pop_front();
          break;
      }
      if (!marked_[u] && qualifies(u)) return u;
    }
  }

 private:
  TriggerOrder order_;
  const MirrorGraph& h_;
  const ProposalEngine& engine_;
  const std::vector<std::uint8_t>& marked_;
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> low_;
  std::priority_queue<VertexId> high_;
  std::deque<VertexId> fifo_;
};

MirrorMatching snapshot(const ProposalEngine& engine, int n) {
  MirrorMatching mm;
  mm.left_edge.resize(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) mm.left_edge[u] = engine.matched(u);
  return mm;
}

}  // namespace

Witness extract_witness(const Instance& inst, const SolverState& state) {
  Witness w;
  w.alpha.assign(static_cast<std::size_t>(inst.num_vertices()), 0);
  for (VertexId u = 0; u < inst.num_vertices(); ++u) {
    const int sign = state.partition.upper[u];
    if (sign == 0) continue;
    if (inst.is_agent(u))
      w.alpha[u] = sign > 0 ? 1 : (state.in_z[u] ? 0 : -1);
    else
      w.alpha[u] = sign < 0 ? -1 : (state.in_z[u] ? 0 : 1);
  }
  return w;
}

SolveReport solve(const Instance& inst, const SolveOptions& options) {
  const int n = inst.num_vertices();
  auto state = std::make_shared<SolverState>();
  state->classification = legal_edge_set(inst, options.backend);
  state->mirror = std::make_unique<MirrorGraph>(inst, state->classification);
  const MirrorGraph& h = *state->mirror;
  state->marked.assign(static_cast<std::size_t>(n), 0);

  SolveReport report;
  report.list_length = h.num_edges();
  ProposalEngine engine(h.system());
  engine.run();
  report.proposals = engine.proposals();
  if (!engine.feasible()) {
    report.outcome = NoneExists{0, *engine.infeasible()};
    return report;
  }

  PendingVertices pending(options.order, h, engine, state->marked);
  pending.absorb(engine);
  std::vector<EdgeId> to_forbid;
  while (const auto v = pending.next()) {
    IterationRecord rec;
    rec.trigger = *v;
    rec.component = state->classification.component[*v];
    const auto& members = state->classification.members[static_cast<std::size_t>(rec.component)];
    rec.component_size = static_cast<int>(members.size());

    // Forbid (a_l+, *) and (*, a_r-) for every agent a of the component.
    to_forbid.clear();
    for (VertexId a : members) {
      if (!inst.is_agent(a)) continue;
      for (EdgeId e : inst.incident(a)) {
        for (EdgeId x : {h.upper(e, 1), h.lower(e, 1)})
          if (!engine.is_forbidden(x)) to_forbid.push_back(x);
      }
    }
    rec.edges_forbidden = static_cast<int>(to_forbid.size());
    const std::int64_t before = engine.proposals();
    engine.resume_after_forbid(to_forbid);
    rec.proposals = engine.proposals() - before;
    report.proposals = engine.proposals();
    report.trace.push_back(rec);
    ++state->iterations;
    if (!engine.feasible()) {
      report.outcome = NoneExists{state->iterations, *engine.infeasible()};
      return report;
    }
    for (VertexId u : members) state->marked[u] = 1;
    pending.absorb(engine);
  }

  state->stable = snapshot(engine, n);
  state->partition = classify_partition(h, state->stable);
  state->in_z.assign(static_cast<std::size_t>(n), 0);
  for (VertexId u = 0; u < n; ++u) state->in_z[u] = state->marked[u] && !state->partition.twin(u);
  state->upper = project(h, state->stable, Half::kUpper);
  state->lower = project(h, state->stable, Half::kLower);
  state->proposals = engine.proposals();

  Found found;
  found.matching = state->upper;
  found.size = found.matching.size();
  found.witness = extract_witness(inst, *state);
  if (!check_witness(inst, found.matching, found.witness))
    throw std::logic_error("solver produced a matching whose witness does not check");
  if (!check_a_popular(inst, compute_posts(inst), found.matching))
    throw std::logic_error("solver produced a matching that is not A-popular");
  report.outcome = std::move(found);
  report.state = std::move(state);
  return report;
}

}  // namespace fpm
