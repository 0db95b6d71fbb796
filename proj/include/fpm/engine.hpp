#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "fpm/instance.hpp"

namespace fpm {

/// Left vertices propose along ranked edge lists, right vertices dispose by
/// edge rank. Parallel edges between the same pair are distinct edge ids, so
/// one system serves both the original graph and the mirror graph.
struct ProposalSystem {
  int num_left = 0;
  int num_right = 0;
  std::vector<std::int32_t> edge_left;   // per edge
  std::vector<std::int32_t> edge_right;  // per edge
  std::vector<int> left_rank;            // per edge, position in its left list
  std::vector<int> right_rank;           // per edge, lower is better
  std::vector<std::int32_t> list_offset; // CSR over left vertices
  std::vector<EdgeId> list;
  std::vector<std::uint8_t> may_stay_single;  // per left vertex
  std::vector<std::uint8_t> forbidden;        // per edge

  int num_edges() const noexcept { return static_cast<int>(edge_left.size()); }
  std::span<const EdgeId> ranked(int left) const {
    return std::span<const EdgeId>(list).subspan(static_cast<std::size_t>(list_offset[left]),
                                                 static_cast<std::size_t>(list_offset[left + 1] - list_offset[left]));
  }

  /// Builds the CSR lists from per-left edge lists and fills left_rank.
  /// Edges must already be registered in edge_left/edge_right/right_rank.
  void set_left_lists(const std::vector<std::vector<EdgeId>>& lists);
  /// Same from lists already in CSR form: left l owns flat[offsets[l] ..
  /// offsets[l+1]).
  void set_left_lists(std::vector<std::int32_t> offsets, std::vector<EdgeId> flat);
  void reserve_edges(std::size_t edges);
  /// Appends an edge; returns its id.
  EdgeId add_edge(int left, int right, int rank_at_right);
  /// Throws std::logic_error on inconsistent lists or duplicate right ranks.
  void validate() const;
};

struct Infeasible {
  enum class Side { kLeft, kRight };
  Side side;  // kLeft: left vertex exhausted its list; kRight: right vertex
              // ended unheld after turning down a forbidden proposal
  int vertex;
  friend bool operator==(const Infeasible&, const Infeasible&) = default;
};

struct EngineOutcome {
  std::optional<Infeasible> infeasible;
  std::vector<EdgeId> left_edge;  // kNoEdge when single
  std::int64_t proposals = 0;
  std::int64_t rejections = 0;

  bool feasible() const noexcept { return !infeasible.has_value(); }
  friend bool operator==(const EngineOutcome&, const EngineOutcome&) = default;
};

/// Stateful, resumable run over a ProposalSystem. The system must outlive
/// the engine. A right vertex never accepts an edge ranked at or below the
/// best proposal it has seen, forbidden or not; forbidden proposals are
/// turned down but still raise that threshold.
class ProposalEngine {
 public:
  explicit ProposalEngine(const ProposalSystem& sys);

  /// Runs until every left vertex is held or exhausted.
  void run();
  /// Forbids more edges (held ones are released) and continues the run. The
  /// result equals a from-scratch run with the enlarged forbidden set.
  void resume_after_forbid(std::span<const EdgeId> edges);

  bool feasible() const noexcept { return !infeasible_.has_value(); }
  const std::optional<Infeasible>& infeasible() const noexcept { return infeasible_; }
  EdgeId matched(int left) const { return left_edge_[static_cast<std::size_t>(left)]; }
  EdgeId held(int right) const { return held_[static_cast<std::size_t>(right)]; }
  bool is_forbidden(EdgeId e) const { return forbidden_[static_cast<std::size_t>(e)] != 0; }
  std::int64_t proposals() const noexcept { return proposals_; }
  std::int64_t rejections() const noexcept { return rejections_; }
  const ProposalSystem& system() const noexcept { return sys_; }

  /// Edges accepted since the last clear, in acceptance order.
  std::span<const EdgeId> accept_log() const noexcept { return accept_log_; }
  void clear_accept_log() { accept_log_.clear(); }

  EngineOutcome outcome() const;

 private:
  static constexpr int kUnseen = std::numeric_limits<int>::max();

  void set_held(int right, EdgeId e);
  void note_forbidden_rank(int right, int rank);
  void release_left(int left);
  void propose_from(int left);
  void finish();

  const ProposalSystem& sys_;
  bool all_left_committed_ = true;  // no left vertex may stay single

  std::vector<std::int32_t> next_;          // per left
  std::vector<std::int32_t> left_edge_;     // per left
  std::vector<std::int32_t> held_;          // per right
  std::vector<std::int32_t> best_;          // per right
  std::vector<std::int32_t> forbid_rank_;   // per right
  std::vector<std::uint8_t> forbidden_;     // per edge
  std::int32_t starved_ = 0;                // rights with forbid_rank set and nothing held

  std::deque<int> free_;
  std::optional<Infeasible> infeasible_;
  std::int64_t proposals_ = 0;
  std::int64_t rejections_ = 0;
  std::vector<EdgeId> accept_log_;
};

/// Fresh run of sys from scratch.
EngineOutcome propose_dispose(const ProposalSystem& sys);

}  // namespace fpm
