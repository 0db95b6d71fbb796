#include <gtest/gtest.h>

#include "fpm/mirror.hpp"
#include "fpm/oracle.hpp"
#include "fpm/stability.hpp"
#include "support.hpp"

namespace fpm {
namespace {

using testing::id;
using testing::load;

TEST(Mirror, FourVertexShape) {
  const Instance inst = load("inst1.txt");
  const MirrorGraph h(inst, legal_edge_set(inst));
  EXPECT_EQ(h.num_edges(), 16);
  EXPECT_NO_THROW(h.system().validate());
  EXPECT_FALSE(h.forbidden(h.twin(id(inst, "a0"))));
  EXPECT_FALSE(h.forbidden(h.twin(id(inst, "b0"))));
  EXPECT_TRUE(h.forbidden(h.twin(id(inst, "a1"))));
  EXPECT_TRUE(h.forbidden(h.twin(id(inst, "b1"))));
  for (EdgeId x = 0; x < 12; ++x) EXPECT_FALSE(h.forbidden(x));
  const EdgeId e = *inst.edge_between(id(inst, "a1"), id(inst, "b1"));
  EXPECT_EQ(h.kind(h.upper(e, 1)), MirrorGraph::Kind::kUpper);
  EXPECT_EQ(h.kind(h.lower(e, -1)), MirrorGraph::Kind::kLower);
  EXPECT_EQ(h.left(h.upper(e, 1)), id(inst, "a1"));
  EXPECT_EQ(h.right(h.upper(e, 1)), id(inst, "b1"));
  EXPECT_EQ(h.left(h.lower(e, 1)), id(inst, "b1"));
  EXPECT_EQ(h.right_sign(h.upper(e, 1)), -1);
  // Left copies rank every + edge above every - edge, the twin last.
  const auto list = h.system().ranked(id(inst, "a1"));
  ASSERT_EQ(list.size(), 5u);
  EXPECT_EQ(h.left_sign(list[0]), 1);
  EXPECT_EQ(h.left_sign(list[1]), 1);
  EXPECT_EQ(h.left_sign(list[2]), -1);
  EXPECT_TRUE(h.is_twin(list[4]));
  EXPECT_FALSE(h.dump().empty());
}

TEST(Mirror, EmbedAndProjectStable) {
  const Instance inst = load("inst1.txt");
  const MirrorGraph h(inst, legal_edge_set(inst));
  const Matching s = agent_optimal_stable(inst);
  const MirrorMatching mm = embed_stable(h, s);
  EXPECT_TRUE(blocking_edges_h(h, mm).empty());
  EXPECT_EQ(project(h, mm, Half::kUpper), s);
  EXPECT_EQ(project(h, mm, Half::kLower), s);
  const MirrorPartition p = classify_partition(h, mm);
  EXPECT_EQ(p.upper[id(inst, "a1")], -1);
  EXPECT_EQ(p.upper[id(inst, "b1")], 1);
  EXPECT_TRUE(p.twin(id(inst, "a0")));
  EXPECT_THROW(embed_stable(h, testing::load_matching(inst, "inst1_mmax.txt")), std::invalid_argument);
}

TEST(Mirror, RealizeWitnessedMaxMatching) {
  const Instance inst = load("inst1.txt");
  const MirrorGraph h(inst, legal_edge_set(inst));
  const Matching mmax = testing::load_matching(inst, "inst1_mmax.txt");
  Witness w;
  w.alpha = {-1, 1, -1, 1};  // a0 a1 b0 b1
  ASSERT_TRUE(check_witness(inst, mmax, w));
  const MirrorMatching mm = realize_witnessed(h, mmax, w);
  EXPECT_TRUE(blocking_edges_h(h, mm).empty());
  EXPECT_TRUE(forbidden_in(h, mm).empty());
  const auto right = right_edges(h, mm);
  for (VertexId u = 0; u < inst.num_vertices(); ++u) EXPECT_EQ(tag_sum(h, mm, right, u), 2 * w.alpha[u]);
  EXPECT_EQ(project(h, mm, Half::kUpper), mmax);
  EXPECT_EQ(project(h, mm, Half::kLower), mmax);
  Witness bad = w;
  bad.alpha[id(inst, "a0")] = 0;
  EXPECT_THROW(realize_witnessed(h, mmax, bad), std::invalid_argument);
}

// Every stable matching embeds without blocking edges, and every popular
// matching realizes without blocking edges under each of its witnesses.
TEST(Mirror, EmbeddingAndRealizationScans) {
  int realized = 0;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const Instance inst = testing::small_random(seed);
    if (inst.num_vertices() > 8) continue;
    const MirrorGraph h(inst, legal_edge_set(inst));
    OracleOptions opts;
    opts.parallel = false;
    const OracleReport truth = ground_truth(inst, opts);
    for (std::size_t i = 0; i < truth.matchings.size(); ++i) {
      const Matching& m = truth.matchings[i];
      if (is_stable(inst, m)) ASSERT_TRUE(blocking_edges_h(h, embed_stable(h, m)).empty()) << "seed " << seed;
      if (!truth.popular[i]) continue;
      for (const Witness& w : all_witnesses(inst, m)) {
        const MirrorMatching mm = realize_witnessed(h, m, w);
        ASSERT_TRUE(blocking_edges_h(h, mm).empty()) << "seed " << seed;
        if (truth.fully_popular[i]) ASSERT_TRUE(forbidden_in(h, mm).empty()) << "seed " << seed;
        ++realized;
      }
    }
  }
  EXPECT_GT(realized, 100);
}

}  // namespace
}  // namespace fpm
