#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpm/engine.hpp"
#include "fpm/instance.hpp"
#include "fpm/legal_edges.hpp"
#include "fpm/popularity.hpp"

namespace fpm {

/// Two copies of G with signed parallel edges. Every vertex u of G has a
/// left copy u_l and a right copy u_r; both carry u's id as their left/right
/// index in the proposal system. The upper half joins agents on the left to
/// jobs on the right, the lower half joins jobs on the left to agents on the
/// right, and the twin edge (u_l-, u_r+) crosses over.
///
/// Edge ids: G edge e yields 4e (upper, left +), 4e+1 (upper, left -),
/// 4e+2 (lower, left +), 4e+3 (lower, left -); the twin of u is 4m + u.
/// The right endpoint always carries the opposite sign.
class MirrorGraph {
 public:
  enum class Kind : std::uint8_t { kUpper, kLower, kTwin };

  MirrorGraph(const Instance& inst, const EdgeClassification& classification);

  const Instance& instance() const noexcept { return inst_; }
  const ProposalSystem& system() const noexcept { return sys_; }
  int num_edges() const noexcept { return sys_.num_edges(); }
  int num_vertices() const noexcept { return inst_.num_vertices(); }

  Kind kind(EdgeId h) const {
    return h >= 4 * inst_.num_edges() ? Kind::kTwin : ((h & 2) ? Kind::kLower : Kind::kUpper);
  }
  bool is_twin(EdgeId h) const { return kind(h) == Kind::kTwin; }
  /// The G edge behind a genuine mirror edge.
  EdgeId g_edge(EdgeId h) const { return h / 4; }
  /// Sign at the left endpoint; the right endpoint has the opposite sign.
  int left_sign(EdgeId h) const { return is_twin(h) ? -1 : ((h & 1) ? -1 : 1); }
  int right_sign(EdgeId h) const { return -left_sign(h); }
  int left(EdgeId h) const { return sys_.edge_left[h]; }
  int right(EdgeId h) const { return sys_.edge_right[h]; }
  bool forbidden(EdgeId h) const { return sys_.forbidden[h] != 0; }

  EdgeId upper(EdgeId e, int left_sign) const { return 4 * e + (left_sign > 0 ? 0 : 1); }
  EdgeId lower(EdgeId e, int left_sign) const { return 4 * e + (left_sign > 0 ? 2 : 3); }
  EdgeId twin(VertexId u) const { return 4 * inst_.num_edges() + u; }

  /// Line-oriented dump: one line per vertex copy with its ranked edges.
  std::string dump() const;

 private:
  const Instance& inst_;
  ProposalSystem sys_;
};

/// Perfect matching of H, stored as the edge held by each left copy.
struct MirrorMatching {
  std::vector<EdgeId> left_edge;  // per left copy (G vertex id)
  friend bool operator==(const MirrorMatching&, const MirrorMatching&) = default;
};

/// Edge held by each right copy, kNoEdge if none.
std::vector<EdgeId> right_edges(const MirrorGraph& h, const MirrorMatching& mm);

/// S' = {(a_l-, b_r+), (b_l-, a_r+) : (a,b) in S} plus twins of single
/// vertices. Throws std::invalid_argument when S is not stable in G.
MirrorMatching embed_stable(const MirrorGraph& h, const Matching& s);

/// The symmetric realization of N under witness w: (a_l-, b_r+) and
/// (b_l+, a_r-) when (alpha_a, alpha_b) = (-1, 1); (a_l+, b_r-) and
/// (b_l-, a_r+) when (1, -1); (a_l-, b_r+) and (b_l-, a_r+) when (0, 0);
/// twins for single vertices. Throws std::invalid_argument for a matched
/// edge with alpha_a + alpha_b != 0.
MirrorMatching realize_witnessed(const MirrorGraph& h, const Matching& n, const Witness& w);

enum class Half { kUpper, kLower };
Matching project(const MirrorGraph& h, const MirrorMatching& mm, Half half);

/// Per G vertex, the sign its copy carries in each half: +1, -1, or 0 when
/// the vertex is matched to its twin. For an agent the upper sign is read at
/// a_l and the lower sign at a_r; for a job the upper sign is read at b_r and
/// the lower sign at b_l. So A+ = agents with upper +1, A'- = agents with
/// lower -1, B+ = jobs with upper +1, B'- = jobs with lower -1, and so on.
struct MirrorPartition {
  std::vector<std::int8_t> upper;
  std::vector<std::int8_t> lower;

  bool twin(VertexId u) const { return upper[u] == 0; }
};

MirrorPartition classify_partition(const MirrorGraph& h, const MirrorMatching& mm);

/// Edges of H (forbidden ones included) that block mm. Unmatched copies
/// count as worse off than with any edge.
std::vector<EdgeId> blocking_edges_h(const MirrorGraph& h, const MirrorMatching& mm);

/// Edges of mm that are forbidden.
std::vector<EdgeId> forbidden_in(const MirrorGraph& h, const MirrorMatching& mm);

/// Sum of the signs at u_l and u_r.
int tag_sum(const MirrorGraph& h, const MirrorMatching& mm, const std::vector<EdgeId>& right_edge, VertexId u);

}  // namespace fpm
