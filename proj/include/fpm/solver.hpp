#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fpm/engine.hpp"
#include "fpm/instance.hpp"
#include "fpm/legal_edges.hpp"
#include "fpm/mirror.hpp"
#include "fpm/popularity.hpp"

namespace fpm {

/// Which pending vertex the main loop processes next. Every order must give
/// the same final matching; the alternatives exist to test that.
enum class TriggerOrder { kLowestId, kFifo, kHighestId };

struct SolveOptions {
  EdgeBackend backend = EdgeBackend::kFast;
  TriggerOrder order = TriggerOrder::kLowestId;
};

struct IterationRecord {
  VertexId trigger = kNoVertex;
  int component = -1;
  int component_size = 0;
  int edges_forbidden = 0;    // newly forbidden in this round
  std::int64_t proposals = 0;  // made while resuming after this round
};

struct Found {
  Matching matching;
  Witness witness;
  int size = 0;
};

struct NoneExists {
  int iteration = 0;  // 0: no legal stable matching of H at all
  Infeasible cause;
};

/// Everything the last round left behind, kept for invariant checks.
struct SolverState {
  EdgeClassification classification;
  std::unique_ptr<MirrorGraph> mirror;
  MirrorMatching stable;  // S_i
  MirrorPartition partition;
  std::vector<std::uint8_t> marked;  // per vertex
  std::vector<std::uint8_t> in_z;    // marked and not twin-matched
  Matching upper;                    // M
  Matching lower;                    // L
  std::int64_t proposals = 0;
  int iterations = 0;
};

struct SolveReport {
  std::variant<Found, NoneExists> outcome;
  std::vector<IterationRecord> trace;
  /// Null when the run stopped before a final S_i existed.
  std::shared_ptr<const SolverState> state;
  std::int64_t proposals = 0;    // over the whole run, all rounds
  std::int64_t list_length = 0;  // total length of the mirror graph's lists

  bool found() const noexcept { return std::holds_alternative<Found>(outcome); }
  const Found& result() const { return std::get<Found>(outcome); }
};

/// Max-size fully popular matching with its witness, or a verdict that none
/// exists. `inst` must outlive the report (the retained mirror graph refers
/// to it). Throws std::logic_error if the matching it built fails its own
/// certificate, which would be a defect rather than a verdict.
SolveReport solve(const Instance& inst, const SolveOptions& options = {});

/// alpha: 0 on Z and on twin-matched vertices, +1 on A+ and on B+ outside Z,
/// -1 on B- and on A- outside Z.
Witness extract_witness(const Instance& inst, const SolverState& state);

/// Runtime checks of the structural properties a successful run must have.
/// Returns one message per failed property; empty when all hold.
std::vector<std::string> check_solver_invariants(const Instance& inst, const SolveReport& report);

}  // namespace fpm
