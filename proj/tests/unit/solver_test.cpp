#include <gtest/gtest.h>

#include "fpm/crosscheck.hpp"
#include "fpm/oracle.hpp"
#include "fpm/solver.hpp"
#include "support.hpp"

namespace fpm {
namespace {

using testing::id;
using testing::load;

TEST(Solver, FourVertexExample) {
  const Instance inst = load("inst1.txt");
  const SolveReport report = solve(inst);
  ASSERT_TRUE(report.found());
  EXPECT_EQ(report.result().size, 2);
  EXPECT_EQ(report.result().matching, testing::load_matching(inst, "inst1_mmax.txt"));
  EXPECT_EQ(report.result().witness.alpha, (std::vector<int>{-1, 1, -1, 1}));
  EXPECT_TRUE(check_solver_invariants(inst, report).empty());
  EXPECT_EQ(report.list_length, 4 * inst.num_edges() + inst.num_vertices());
}

TEST(Solver, IdenticalListsHaveNone) {
  const Instance inst = load("inst2.txt");
  const SolveReport report = solve(inst);
  ASSERT_FALSE(report.found());
  EXPECT_EQ(std::get<NoneExists>(report.outcome).iteration, 0);
  EXPECT_EQ(report.state, nullptr);
  EXPECT_GT(report.proposals, 0);
  EXPECT_LE(report.proposals, report.list_length);
}

TEST(Solver, TwelveVertexExampleNeedsARound) {
  const Instance inst = load("inst3.txt");
  const SolveReport report = solve(inst);
  ASSERT_TRUE(report.found());
  EXPECT_EQ(report.result().size, 5);
  ASSERT_EQ(report.trace.size(), 1u);
  EXPECT_EQ(report.trace[0].trigger, id(inst, "a"));
  EXPECT_TRUE(check_solver_invariants(inst, report).empty());
  EXPECT_TRUE(check_a_popular(inst, compute_posts(inst), report.result().matching));
}

TEST(Solver, OracleBackendGivesSameAnswer) {
  for (const char* file : {"inst1.txt", "inst2.txt", "inst3.txt"}) {
    const Instance inst = load(file);
    const SolveReport fast = solve(inst, {EdgeBackend::kFast, TriggerOrder::kLowestId});
    const SolveReport slow = solve(inst, {EdgeBackend::kOracle, TriggerOrder::kLowestId});
    ASSERT_EQ(fast.found(), slow.found()) << file;
    if (fast.found()) EXPECT_EQ(fast.result().matching, slow.result().matching) << file;
  }
}

// The final matching does not depend on which pending vertex is handled
// first. A difference would be a finding about the method, so the message
// names the instance.
TEST(Solver, TriggerOrderInvariance) {
  int with_rounds = 0;
  for (std::uint64_t seed = 1; seed <= 3000; ++seed) {
    const Instance inst = generate_instance(sweep_params(seed, 0, 6));
    const SolveReport low = solve(inst, {EdgeBackend::kFast, TriggerOrder::kLowestId});
    if (!low.trace.empty()) ++with_rounds;
    for (TriggerOrder order : {TriggerOrder::kFifo, TriggerOrder::kHighestId}) {
      const SolveReport other = solve(inst, {EdgeBackend::kFast, order});
      ASSERT_EQ(low.found(), other.found()) << "seed " << seed;
      if (low.found()) ASSERT_EQ(low.result().matching, other.result().matching) << "seed " << seed;
    }
  }
  EXPECT_GT(with_rounds, 0);
}

TEST(Solver, InvariantsAndProposalBoundOnMediumInstances) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Instance inst = generate_instance({20, 20, 0.15, seed});
    const SolveReport report = solve(inst);
    EXPECT_LE(report.proposals, report.list_length) << "seed " << seed;
    EXPECT_TRUE(check_solver_invariants(inst, report).empty()) << "seed " << seed;
  }
}

TEST(Solver, CrossCheckSmallSweep) {
  for (int i = 0; i < 300; ++i) {
    const Instance inst = generate_instance(sweep_params(11, i));
    const auto diffs = cross_check(inst, {true});
    ASSERT_TRUE(diffs.empty()) << "instance " << i << ": " << diffs.front();
  }
}

}  // namespace
}  // namespace fpm
