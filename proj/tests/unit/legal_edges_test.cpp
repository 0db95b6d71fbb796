#include <gtest/gtest.h>

#include "fpm/legal_edges.hpp"
#include "fpm/oracle.hpp"
#include "fpm/stability.hpp"
#include "support.hpp"

namespace fpm {
namespace {

using testing::id;
using testing::load;

EdgeId edge(const Instance& inst, const char* a, const char* b) { return *inst.edge_between(id(inst, a), id(inst, b)); }

TEST(LegalEdges, FourVertexExample) {
  const Instance inst = load("inst1.txt");
  const EdgeClassification c = legal_edge_set(inst);
  const EdgeId a0b1 = edge(inst, "a0", "b1"), a1b1 = edge(inst, "a1", "b1"), a1b0 = edge(inst, "a1", "b0");
  for (EdgeId e : {a0b1, a1b1, a1b0}) {
    EXPECT_TRUE(c.valid.edge[e]);
    EXPECT_TRUE(c.popular.edge[e]);
    EXPECT_TRUE(c.legal.edge[e]);
  }
  // a0 and b0 are single in the stable matching, so their loops are popular.
  EXPECT_TRUE(c.legal.loop[id(inst, "a0")]);
  EXPECT_TRUE(c.legal.loop[id(inst, "b0")]);
  EXPECT_FALSE(c.legal.loop[id(inst, "a1")]);
  EXPECT_FALSE(c.legal.loop[id(inst, "b1")]);
  // b1 is a top choice, so its loop is not even valid.
  EXPECT_FALSE(c.valid.loop[id(inst, "b1")]);
  ASSERT_EQ(c.members.size(), 1u);
  EXPECT_EQ(c.members[0].size(), 4u);
}

TEST(LegalEdges, DominanceInstanceShape) {
  const Instance inst = load("inst1.txt");
  const Instance aux = dominance_instance(inst);
  const int na = inst.num_agents(), nb = inst.num_jobs();
  EXPECT_EQ(aux.num_agents(), 2 * na);
  EXPECT_EQ(aux.num_jobs(), nb + na);
  for (VertexId a = 0; a < na; ++a) {
    const VertexId low = a, high = na + a, d = 2 * na + nb + a;
    EXPECT_EQ(aux.prefs(low).back(), d);
    EXPECT_EQ(aux.prefs(high).front(), d);
    ASSERT_EQ(aux.degree(d), 2);
    EXPECT_EQ(aux.prefs(d)[0], low);
  }
  // Jobs rank every high copy above every low copy.
  for (VertexId j = 2 * na; j < 2 * na + nb; ++j) {
    bool seen_low = false;
    for (VertexId x : aux.prefs(j)) {
      if (x < na) seen_low = true;
      else EXPECT_FALSE(seen_low);
    }
  }
  // The dominant matching of this instance is the max-size one.
  const auto dom = dominant_edges(inst);
  EXPECT_TRUE(dom[edge(inst, "a0", "b1")]);
  EXPECT_TRUE(dom[edge(inst, "a1", "b0")]);
  EXPECT_FALSE(dom[edge(inst, "a1", "b1")]);
}

TEST(LegalEdges, FastBackendEqualsOracle) {
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const Instance inst = testing::small_random(seed);
    const EdgeFlags fast = popular_edges(inst, EdgeBackend::kFast);
    const EdgeFlags slow = popular_edges(inst, EdgeBackend::kOracle);
    ASSERT_EQ(fast.edge, slow.edge) << "seed " << seed;
    ASSERT_EQ(fast.loop, slow.loop) << "seed " << seed;
  }
}

TEST(LegalEdges, ComponentsCoverPopularEdges) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Instance inst = testing::small_random(seed, 6);
    const EdgeClassification c = legal_edge_set(inst);
    for (EdgeId e = 0; e < inst.num_edges(); ++e) {
      if (c.popular.edge[e]) EXPECT_EQ(c.component[inst.edge(e).agent], c.component[inst.edge(e).job]);
      if (c.legal.edge[e]) EXPECT_TRUE(c.valid.edge[e] && c.popular.edge[e]);
    }
    std::size_t total = 0;
    for (std::size_t k = 0; k < c.members.size(); ++k) {
      total += c.members[k].size();
      for (VertexId v : c.members[k]) EXPECT_EQ(c.component[v], static_cast<int>(k));
    }
    EXPECT_EQ(total, static_cast<std::size_t>(inst.num_vertices()));
  }
}

TEST(LegalEdges, ValidEdgesFollowPosts) {
  const Instance inst = load("inst2.txt");
  const EdgeFlags v = valid_edges(inst, compute_posts(inst));
  for (EdgeId e = 0; e < inst.num_edges(); ++e) {
    const bool b3 = inst.edge(e).job == id(inst, "b3");
    EXPECT_EQ(v.edge[e] != 0, !b3);
  }
  EXPECT_TRUE(v.loop[id(inst, "b2")]);
  EXPECT_TRUE(v.loop[id(inst, "b3")]);
  EXPECT_FALSE(v.loop[id(inst, "b1")]);
}

}  // namespace
}  // namespace fpm
