#include <gtest/gtest.h>

#include "fpm/instance.hpp"
#include "fpm/instance_io.hpp"
#include "support.hpp"

namespace fpm {
namespace {

using testing::id;
using testing::load;
using testing::pairs;

TEST(Instance, ParsesFourVertexExample) {
  const Instance inst = load("inst1.txt");
  EXPECT_EQ(inst.num_agents(), 2);
  EXPECT_EQ(inst.num_jobs(), 2);
  EXPECT_EQ(inst.num_edges(), 3);
  const VertexId a1 = id(inst, "a1"), b0 = id(inst, "b0"), b1 = id(inst, "b1");
  EXPECT_EQ(inst.rank(a1, b1), 0);
  EXPECT_EQ(inst.rank(a1, b0), 1);
  EXPECT_EQ(inst.rank(a1, a1), 2);
  EXPECT_FALSE(inst.edge_between(id(inst, "a0"), b0).has_value());
  ASSERT_TRUE(inst.edge_between(b1, a1).has_value());
  EXPECT_THROW(inst.rank(id(inst, "a0"), b0), InstanceError);
}

TEST(Instance, RejectsBadInputWithLineNumbers) {
  const auto line_of = [](const char* text) {
    try {
      parse_instance(text);
    } catch (const InstanceError& e) {
      return e.line();
    }
    return -1;
  };
  // b0 lists a0 but a0 does not list b0.
  EXPECT_GT(line_of("agents: a0\njobs: b0 b1\na0 > b1\nb0 > a0\nb1 > a0\n"), -1);
  // Repeated neighbor.
  EXPECT_EQ(line_of("agents: a0\njobs: b0\na0 > b0 b0\nb0 > a0\n"), 3);
  // Unknown name.
  EXPECT_EQ(line_of("agents: a0\njobs: b0\na0 > zz\nb0 > a0\n"), 3);
  // Same side.
  EXPECT_EQ(line_of("agents: a0 a1\njobs: b0\na0 > a1\n"), 3);
  // Agent without neighbors.
  EXPECT_GT(line_of("agents: a0 a1\njobs: b0\na0 > b0\nb0 > a0\n"), -1);
  // Duplicate names.
  EXPECT_GT(line_of("agents: a0 a0\njobs: b0\n"), -1);
  // Garbage line.
  EXPECT_EQ(line_of("agents: a0\njobs: b0\nwhat is this\n"), 3);
}

TEST(Instance, SerializeRoundTrip) {
  for (const char* file : {"inst1.txt", "inst2.txt", "inst3.txt"}) {
    const Instance inst = load(file);
    const Instance again = parse_instance(serialize_instance(inst));
    EXPECT_EQ(serialize_instance(again), serialize_instance(inst)) << file;
    for (VertexId v = 0; v < inst.num_vertices(); ++v) {
      const auto p = inst.prefs(v), q = again.prefs(v);
      EXPECT_TRUE(std::equal(p.begin(), p.end(), q.begin(), q.end())) << file;
    }
  }
}

TEST(Matching, ParseValidateAndRoundTrip) {
  const Instance inst = load("inst1.txt");
  const Matching m = testing::load_matching(inst, "inst1_mmax.txt");
  EXPECT_EQ(m.size(), 2);
  EXPECT_EQ(parse_matching(inst, serialize_matching(inst, m)), m);
  EXPECT_THROW(parse_matching(inst, "a0 b0\n"), InstanceError);  // not an edge
  EXPECT_THROW(parse_matching(inst, "a1 b1\na0 b1\n"), InstanceError);  // b1 twice
  Matching bad(inst.num_vertices());
  EXPECT_NO_THROW(bad.validate(inst));
  EXPECT_EQ(bad.size(), 0);
}

TEST(Matching, PairReleasesOldPartners) {
  const Instance inst = load("inst1.txt");
  Matching m = pairs(inst, {{"a1", "b1"}});
  m.pair(id(inst, "a0"), id(inst, "b1"));
  EXPECT_FALSE(m.is_matched(id(inst, "a1")));
  EXPECT_EQ(m.partner(id(inst, "b1")), id(inst, "a0"));
  EXPECT_EQ(m.size(), 1);
}

TEST(Posts, FourVertexExample) {
  const Instance inst = load("inst1.txt");
  const Posts posts = compute_posts(inst);
  const VertexId a0 = id(inst, "a0"), a1 = id(inst, "a1"), b0 = id(inst, "b0"), b1 = id(inst, "b1");
  EXPECT_EQ(posts.f[a0], b1);
  EXPECT_EQ(posts.f[a1], b1);
  EXPECT_EQ(posts.s[a0], a0);  // a0 has no non-f-post neighbor
  EXPECT_EQ(posts.s[a1], b0);
  EXPECT_TRUE(posts.is_f_post[b1]);
  EXPECT_FALSE(posts.is_f_post[b0]);
}

TEST(Posts, IdenticalListsShareTopChoice) {
  const Instance inst = load("inst2.txt");
  const Posts posts = compute_posts(inst);
  for (VertexId a = 0; a < inst.num_agents(); ++a) {
    EXPECT_EQ(posts.f[a], id(inst, "b1"));
    EXPECT_EQ(posts.s[a], id(inst, "b2"));
  }
}

TEST(Election, VotesAndCounts) {
  const Instance inst = load("inst1.txt");
  const VertexId a1 = id(inst, "a1"), b0 = id(inst, "b0"), b1 = id(inst, "b1");
  EXPECT_EQ(vote(inst, a1, b1, b0), 1);
  EXPECT_EQ(vote(inst, a1, b0, b1), -1);
  EXPECT_EQ(vote(inst, a1, b0, b0), 0);
  EXPECT_EQ(vote(inst, a1, b0, a1), 1);  // anything beats being single

  const Matching stable = pairs(inst, {{"a1", "b1"}});
  const Matching mmax = pairs(inst, {{"a0", "b1"}, {"a1", "b0"}});
  const Election e = run_election(inst, stable, mmax);
  // a1 and b1 prefer the stable matching; a0 and b0 prefer mmax.
  EXPECT_EQ(e.phi_mn, 2);
  EXPECT_EQ(e.phi_nm, 2);
  EXPECT_EQ(e.phi_a_mn, 1);
  EXPECT_EQ(e.phi_a_nm, 1);
  const Election back = run_election(inst, mmax, stable);
  EXPECT_EQ(back.phi_mn, e.phi_nm);
  EXPECT_EQ(back.phi_a_nm, e.phi_a_mn);
}

}  // namespace
}  // namespace fpm
