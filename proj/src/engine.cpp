#include "fpm/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fpm {

EdgeId ProposalSystem::add_edge(int left, int right, int rank_at_right) {
  const auto e = static_cast<EdgeId>(edge_left.size());
  edge_left.push_back(left);
  edge_right.push_back(right);
  right_rank.push_back(rank_at_right);
  forbidden.push_back(0);
  return e;
}

void ProposalSystem::reserve_edges(std::size_t edges) {
  edge_left.reserve(edges);
  edge_right.reserve(edges);
  right_rank.reserve(edges);
  forbidden.reserve(edges);
}

void ProposalSystem::set_left_lists(const std::vector<std::vector<EdgeId>>& lists) {
  std::vector<std::int32_t> offsets(static_cast<std::size_t>(num_left) + 1, 0);
  std::vector<EdgeId> flat;
  for (int l = 0; l < num_left; ++l) {
    offsets[l] = static_cast<std::int32_t>(flat.size());
    const auto& row = lists[static_cast<std::size_t>(l)];
    flat.insert(flat.end(), row.begin(), row.end());
  }
  offsets[num_left] = static_cast<std::int32_t>(flat.size());
  set_left_lists(std::move(offsets), std::move(flat));
}

void ProposalSystem::set_left_lists(std::vector<std::int32_t> offsets, std::vector<EdgeId> flat) {
  list_offset = std::move(offsets);
  list = std::move(flat);
  left_rank.assign(edge_left.size(), -1);
  for (int l = 0; l < num_left; ++l)
    for (std::int32_t i = list_offset[l]; i < list_offset[l + 1]; ++i) left_rank[list[i]] = i - list_offset[l];
  if (may_stay_single.size() != static_cast<std::size_t>(num_left))
    may_stay_single.assign(static_cast<std::size_t>(num_left), 1);
}

void ProposalSystem::validate() const {
  const auto m = static_cast<std::size_t>(num_edges());
  if (edge_right.size() != m || right_rank.size() != m || left_rank.size() != m || forbidden.size() != m ||
      list.size() != m)
    throw std::logic_error("proposal system: per-edge arrays disagree in size");
  for (int l = 0; l < num_left; ++l)
    for (EdgeId e : ranked(l))
      if (edge_left[e] != l) throw std::logic_error("proposal system: edge listed under the wrong left vertex");
  std::vector<std::vector<int>> seen(static_cast<std::size_t>(num_right));
  for (std::size_t e = 0; e < m; ++e) {
    if (left_rank[e] < 0) throw std::logic_error("proposal system: edge missing from left lists");
    seen[edge_right[e]].push_back(right_rank[e]);
  }
  for (auto& ranks : seen) {
    std::sort(ranks.begin(), ranks.end());
    if (std::adjacent_find(ranks.begin(), ranks.end()) != ranks.end())
      throw std::logic_error("proposal system: right vertex ranks two edges equally");
  }
}

ProposalEngine::ProposalEngine(const ProposalSystem& sys)
    : sys_(sys),
      next_(static_cast<std::size_t>(sys.num_left)),
      left_edge_(static_cast<std::size_t>(sys.num_left), kNoEdge),
      held_(static_cast<std::size_t>(sys.num_right), kNoEdge),
      best_(static_cast<std::size_t>(sys.num_right), kUnseen),
      forbid_rank_(static_cast<std::size_t>(sys.num_right), kUnseen),
      forbidden_(sys.forbidden.begin(), sys.forbidden.end()) {
  for (int l = 0; l < sys.num_left; ++l) {
    next_[l] = sys.list_offset[l];
    if (sys.may_stay_single[l]) all_left_committed_ = false;
    free_.push_back(l);
  }
}

void ProposalEngine::set_held(int right, EdgeId e) {
  const bool was_starved = forbid_rank_[right] != kUnseen && held_[right] == kNoEdge;
  held_[right] = e;
  const bool is_starved = forbid_rank_[right] != kUnseen && held_[right] == kNoEdge;
  if (was_starved != is_starved) starved_ += is_starved ? 1 : -1;
}

void ProposalEngine::note_forbidden_rank(int right, int rank) {
  if (rank >= forbid_rank_[right]) return;
  const bool was_starved = forbid_rank_[right] != kUnseen && held_[right] == kNoEdge;
  forbid_rank_[right] = rank;
  const bool is_starved = held_[right] == kNoEdge;
  if (was_starved != is_starved) starved_ += is_starved ? 1 : -1;
}

void ProposalEngine::release_left(int left) {
  left_edge_[left] = kNoEdge;
  free_.push_back(left);
}

void ProposalEngine::propose_from(int left) {
  const std::int32_t end = sys_.list_offset[left + 1];
  while (next_[left] < end) {
    const EdgeId e = sys_.list[static_cast<std::size_t>(next_[left])];
    ++next_[left];
    ++proposals_;
    const int right = sys_.edge_right[e];
    const int rank = sys_.right_rank[e];
    if (rank >= best_[right]) {
      ++rejections_;
      continue;
    }
    best_[right] = rank;
    const EdgeId previous = held_[right];
    if (forbidden_[e]) {
      ++rejections_;
      note_forbidden_rank(right, rank);
      if (previous != kNoEdge) {
        set_held(right, kNoEdge);
        release_left(sys_.edge_left[previous]);
      }
      continue;
    }
    set_held(right, e);
    left_edge_[left] = e;
    accept_log_.push_back(e);
    if (previous != kNoEdge) {
      ++rejections_;
      release_left(sys_.edge_left[previous]);
    }
    return;
  }
  if (!sys_.may_stay_single[left]) infeasible_ = Infeasible{Infeasible::Side::kLeft, left};
}

void ProposalEngine::finish() {
  if (infeasible_) {
    free_.clear();
    return;
  }
  if (!all_left_committed_ && starved_ > 0) {
    for (int r = 0; r < sys_.num_right; ++r) {
      if (forbid_rank_[r] != kUnseen && held_[r] == kNoEdge) {
        infeasible_ = Infeasible{Infeasible::Side::kRight, r};
        break;
      }
    }
  }
}

void ProposalEngine::run() {
  while (!infeasible_ && !free_.empty()) {
    const int left = free_.front();
    free_.pop_front();
    propose_from(left);
  }
  finish();
}

void ProposalEngine::resume_after_forbid(std::span<const EdgeId> edges) {
  if (infeasible_) return;
  for (EdgeId e : edges) {
    if (forbidden_[e]) continue;
    forbidden_[e] = 1;
    const int right = sys_.edge_right[e];
    if (held_[right] == e) {
      note_forbidden_rank(right, sys_.right_rank[e]);
      set_held(right, kNoEdge);
      release_left(sys_.edge_left[e]);
    }
  }
  run();
}

EngineOutcome ProposalEngine::outcome() const {
  EngineOutcome out;
  out.infeasible = infeasible_;
  out.left_edge.assign(left_edge_.begin(), left_edge_.end());
  out.proposals = proposals_;
  out.rejections = rejections_;
  return out;
}

EngineOutcome propose_dispose(const ProposalSystem& sys) {
  ProposalEngine engine(sys);
  engine.run();
  return engine.outcome();
}

}  // namespace fpm
