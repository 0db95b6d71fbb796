#include <random>

#include <gtest/gtest.h>

#include "fpm/engine.hpp"
#include "fpm/stability.hpp"
#include "support.hpp"

namespace fpm {
namespace {

// Two left, two right, complete; left 0 and 1 both prefer right 0, right 0
// prefers left 1.
ProposalSystem square(bool committed) {
  ProposalSystem sys;
  sys.num_left = 2;
  sys.num_right = 2;
  const EdgeId e00 = sys.add_edge(0, 0, 1), e01 = sys.add_edge(0, 1, 0);
  const EdgeId e10 = sys.add_edge(1, 0, 0), e11 = sys.add_edge(1, 1, 1);
  sys.may_stay_single.assign(2, committed ? 0 : 1);
  sys.set_left_lists({{e00, e01}, {e10, e11}});
  sys.validate();
  return sys;
}

TEST(Engine, PlainRun) {
  const ProposalSystem sys = square(false);
  const EngineOutcome out = propose_dispose(sys);
  ASSERT_TRUE(out.feasible());
  EXPECT_EQ(out.left_edge[0], 1);  // e01
  EXPECT_EQ(out.left_edge[1], 2);  // e10
  EXPECT_EQ(out.proposals, 3);
  EXPECT_EQ(out.rejections, 1);
}

TEST(Engine, ForbiddenProposalRaisesThreshold) {
  // Right 0 turns down the forbidden e10 and must then refuse e00, which it
  // ranks lower; left 0 moves on to right 1 and left 1 follows it there.
  ProposalSystem sys = square(false);
  sys.forbidden[2] = 1;
  ProposalEngine engine(sys);
  engine.run();
  // Right 0 ends unheld after turning down a forbidden proposal.
  ASSERT_FALSE(engine.feasible());
  EXPECT_EQ(engine.infeasible()->side, Infeasible::Side::kRight);
  EXPECT_EQ(engine.infeasible()->vertex, 0);
}

TEST(Engine, CommittedLeftVertexExhausts) {
  ProposalSystem sys = square(true);
  sys.forbidden[2] = 1;
  sys.forbidden[3] = 1;
  const EngineOutcome out = propose_dispose(sys);
  ASSERT_FALSE(out.feasible());
  EXPECT_EQ(out.infeasible->side, Infeasible::Side::kLeft);
  EXPECT_EQ(out.infeasible->vertex, 1);
}

TEST(Engine, ResumeMatchesFromScratch) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Instance inst = testing::small_random(seed, 6);
    ProposalSystem sys = make_proposal_system(inst, seed % 2 ? Proposer::kAgents : Proposer::kJobs);
    ProposalEngine engine(sys);
    engine.run();
    ProposalSystem scratch = sys;
    for (int round = 0; round < 4 && engine.feasible(); ++round) {
      std::vector<EdgeId> batch;
      for (EdgeId e = 0; e < sys.num_edges(); ++e)
        if (rng() % 5 == 0) batch.push_back(e);
      engine.resume_after_forbid(batch);
      for (EdgeId e : batch) scratch.forbidden[e] = 1;
      const EngineOutcome fresh = propose_dispose(scratch);
      ASSERT_EQ(engine.feasible(), fresh.feasible()) << "seed " << seed << " round " << round;
      if (fresh.feasible()) {
        for (int l = 0; l < sys.num_left; ++l) ASSERT_EQ(engine.matched(l), fresh.left_edge[l]) << "seed " << seed;
        EXPECT_LE(engine.proposals(), sys.num_edges());
      }
    }
  }
}

TEST(Engine, Deterministic) {
  const Instance inst = testing::small_random(42, 6);
  const ProposalSystem sys = make_proposal_system(inst, Proposer::kAgents);
  EXPECT_EQ(propose_dispose(sys), propose_dispose(sys));
}

TEST(Engine, ValidateCatchesDuplicateRightRanks) {
  ProposalSystem sys;
  sys.num_left = 2;
  sys.num_right = 1;
  const EdgeId a = sys.add_edge(0, 0, 0), b = sys.add_edge(1, 0, 0);
  sys.set_left_lists({{a}, {b}});
  EXPECT_THROW(sys.validate(), std::logic_error);
}

}  // namespace
}  // namespace fpm
